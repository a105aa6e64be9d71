//! Krippendorff's alpha for nominal data over an items × coders table with
//! missing values, via the standard coincidence-matrix construction.
//!
//! Items contribute only pairable values: an item with fewer than two codes
//! is excluded entirely. Within an included item of `m` codes, every ordered
//! pair of codes adds `1 / (m - 1)` to its coincidence cell. Observed
//! disagreement is the off-diagonal coincidence mass over `n`; expected
//! disagreement is the chance rate of drawing two differing values from the
//! pooled marginals without replacement.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::CoderTable;

/// Result of an agreement computation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaResult {
    /// 1 = perfect agreement; 0 = chance level; can go negative.
    pub alpha: f64,
    pub observed_disagreement: f64,
    pub expected_disagreement: f64,
    /// Number of values that entered the computation.
    pub pairable_values: usize,
    /// True when expected disagreement is zero (every pairable value is the
    /// same code); alpha is reported as 1.0 by convention in that case.
    pub degenerate: bool,
}

/// Computes nominal-data alpha over a coder table.
///
/// Returns [`Error::InsufficientData`] when no item has two or more codes.
pub fn krippendorff_alpha_nominal(table: &CoderTable) -> Result<AlphaResult> {
    // Map distinct codes to dense indices, in first-seen order.
    let mut distinct = 0usize;
    let mut lookup: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    let mut codes: Vec<Vec<usize>> = Vec::new();
    for row in table.codes() {
        let values: Vec<usize> = row
            .iter()
            .flatten()
            .map(|code| {
                *lookup.entry(code.as_str()).or_insert_with(|| {
                    distinct += 1;
                    distinct - 1
                })
            })
            .collect();
        codes.push(values);
    }
    let mut coincidence = vec![vec![0.0f64; distinct]; distinct];
    let mut marginals = vec![0u64; distinct];
    let mut pairable = 0usize;

    for values in &codes {
        let m = values.len();
        if m < 2 {
            continue;
        }
        pairable += m;
        let weight = 1.0 / (m as f64 - 1.0);
        for value in values {
            marginals[*value] += 1;
        }
        for (i, &a) in values.iter().enumerate() {
            for (j, &b) in values.iter().enumerate() {
                if i != j {
                    coincidence[a][b] += weight;
                }
            }
        }
    }

    if pairable == 0 {
        return Err(Error::InsufficientData);
    }

    let n = pairable as f64;
    let mut observed_mass = 0.0f64;
    for (a, row) in coincidence.iter().enumerate() {
        for (b, &mass) in row.iter().enumerate() {
            if a != b {
                observed_mass += mass;
            }
        }
    }
    let observed_disagreement = observed_mass / n;

    let sum_sq: u64 = marginals.iter().map(|&c| c * c).sum();
    let total: u64 = marginals.iter().sum();
    debug_assert_eq!(total as usize, pairable);
    let expected_disagreement =
        (total * total - sum_sq) as f64 / (n * (n - 1.0));

    if expected_disagreement == 0.0 {
        return Ok(AlphaResult {
            alpha: 1.0,
            observed_disagreement,
            expected_disagreement,
            pairable_values: pairable,
            degenerate: true,
        });
    }

    Ok(AlphaResult {
        alpha: 1.0 - observed_disagreement / expected_disagreement,
        observed_disagreement,
        expected_disagreement,
        pairable_values: pairable,
        degenerate: false,
    })
}
