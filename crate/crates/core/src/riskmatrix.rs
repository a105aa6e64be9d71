//! Four-tier impact classification from two authoritative sources: the
//! embedded severity × probability grid and an explicit rule set for the
//! extremely-high/high tiers. The two disagree on exactly one cell, which
//! [`classification_diff`] surfaces; callers pick a [`ClassificationMode`]
//! per use instead of the library silently choosing.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::model::{ProbabilityLevel, SeverityLevel};

/// Impact tier, totally ordered: `ExtremelyHigh > High > Medium > Low`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RiskTier {
    Low,
    Medium,
    High,
    ExtremelyHigh,
}

impl RiskTier {
    /// Tiers from most to least severe, the usual presentation order.
    pub const DESCENDING: [RiskTier; 4] = [
        RiskTier::ExtremelyHigh,
        RiskTier::High,
        RiskTier::Medium,
        RiskTier::Low,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RiskTier::ExtremelyHigh => "Extremely High",
            RiskTier::High => "High",
            RiskTier::Medium => "Medium",
            RiskTier::Low => "Low",
        }
    }

    /// One-letter code used in the matrix legend.
    pub fn code(self) -> char {
        match self {
            RiskTier::ExtremelyHigh => 'E',
            RiskTier::High => 'H',
            RiskTier::Medium => 'M',
            RiskTier::Low => 'L',
        }
    }
}

impl fmt::Display for RiskTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which classifier to use where both apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationMode {
    /// The embedded 4×5 matrix. Default for tier-count tables.
    Grid,
    /// The explicit E/H predicates, falling back to the grid for the rest.
    /// Always used for the gap percentage, whose definition names these rules.
    Rules,
}

impl ClassificationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassificationMode::Grid => "grid",
            ClassificationMode::Rules => "rules",
        }
    }
}

impl fmt::Display for ClassificationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassificationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grid" => Ok(ClassificationMode::Grid),
            "rules" => Ok(ClassificationMode::Rules),
            _ => Err(Error::UnknownLabel {
                field: "classification mode",
                raw: s.to_string(),
            }),
        }
    }
}

// GRID[severity - 1][probability - 1]. Rows ascend in severity, columns in
// probability, so the matrix reads transposed relative to its usual
// presentation (severity rows from Catastrophic down, probability columns
// from Frequent down).
const GRID: [[RiskTier; 5]; 4] = {
    use RiskTier::{ExtremelyHigh as E, High as H, Low as L, Medium as M};
    [
        // Negligible
        [L, L, L, L, M],
        // Moderate
        [L, L, M, M, H],
        // Critical
        [L, M, H, H, E],
        // Catastrophic
        [M, H, H, E, E],
    ]
};

/// Tier from the embedded matrix.
pub fn classify_grid(probability: ProbabilityLevel, severity: SeverityLevel) -> RiskTier {
    GRID[usize::from(severity.value()) - 1][usize::from(probability.value()) - 1]
}

/// Tier from the explicit rule set. The rules only define the extremely-high
/// and high tiers; anything else falls back to the grid, which yields medium
/// or low for every remaining cell.
pub fn classify_rules(probability: ProbabilityLevel, severity: SeverityLevel) -> RiskTier {
    let p = probability.value();
    let s = severity.value();
    if (matches!(p, 4 | 5) && s == 4) || (p == 5 && matches!(s, 3 | 4)) {
        return RiskTier::ExtremelyHigh;
    }
    if (matches!(p, 3 | 4) && s == 3)
        || (matches!(p, 2 | 3) && s == 4)
        || (matches!(p, 4 | 5) && s == 2)
    {
        return RiskTier::High;
    }
    classify_grid(probability, severity)
}

/// Tier under the requested mode.
pub fn classify(
    probability: ProbabilityLevel,
    severity: SeverityLevel,
    mode: ClassificationMode,
) -> RiskTier {
    match mode {
        ClassificationMode::Grid => classify_grid(probability, severity),
        ClassificationMode::Rules => classify_rules(probability, severity),
    }
}

/// A cell where the grid and the rule set disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiffCell {
    pub probability: ProbabilityLevel,
    pub severity: SeverityLevel,
    pub grid: RiskTier,
    pub rules: RiskTier,
}

/// Every (probability, severity) combination, severity-major, ascending.
pub fn all_cells() -> impl Iterator<Item = (ProbabilityLevel, SeverityLevel)> {
    SeverityLevel::ALL
        .into_iter()
        .flat_map(|s| ProbabilityLevel::ALL.into_iter().map(move |p| (p, s)))
}

/// Enumerates every cell where [`classify_grid`] and [`classify_rules`]
/// disagree.
pub fn classification_diff() -> Vec<DiffCell> {
    all_cells()
        .filter_map(|(p, s)| {
            let grid = classify_grid(p, s);
            let rules = classify_rules(p, s);
            (grid != rules).then_some(DiffCell {
                probability: p,
                severity: s,
                grid,
                rules,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: i64) -> ProbabilityLevel {
        ProbabilityLevel::from_value(v).unwrap()
    }

    fn s(v: i64) -> SeverityLevel {
        SeverityLevel::from_value(v).unwrap()
    }

    #[test]
    fn grid_known_cells() {
        assert_eq!(classify_grid(p(5), s(4)), RiskTier::ExtremelyHigh);
        assert_eq!(classify_grid(p(2), s(3)), RiskTier::Medium);
        assert_eq!(classify_grid(p(1), s(1)), RiskTier::Low);
        assert_eq!(classify_grid(p(4), s(2)), RiskTier::Medium);
        assert_eq!(classify_grid(p(5), s(2)), RiskTier::High);
        assert_eq!(classify_grid(p(1), s(4)), RiskTier::Medium);
    }

    #[test]
    fn grid_monotone_along_each_axis() {
        for sev in SeverityLevel::ALL {
            for window in ProbabilityLevel::ALL.windows(2) {
                assert!(classify_grid(window[0], sev) <= classify_grid(window[1], sev));
            }
        }
        for prob in ProbabilityLevel::ALL {
            for window in SeverityLevel::ALL.windows(2) {
                assert!(classify_grid(prob, window[0]) <= classify_grid(prob, window[1]));
            }
        }
    }

    #[test]
    fn rules_known_cells() {
        assert_eq!(classify_rules(p(4), s(4)), RiskTier::ExtremelyHigh);
        assert_eq!(classify_rules(p(3), s(3)), RiskTier::High);
        // The one cell where the rules and the grid disagree.
        assert_eq!(classify_rules(p(4), s(2)), RiskTier::High);
        assert_eq!(classify_grid(p(4), s(2)), RiskTier::Medium);
    }

    #[test]
    fn extremely_high_agreement_set() {
        let grid_e: Vec<_> = all_cells()
            .filter(|&(p, s)| classify_grid(p, s) == RiskTier::ExtremelyHigh)
            .map(|(p, s)| (p.value(), s.value()))
            .collect();
        let rules_e: Vec<_> = all_cells()
            .filter(|&(p, s)| classify_rules(p, s) == RiskTier::ExtremelyHigh)
            .map(|(p, s)| (p.value(), s.value()))
            .collect();
        assert_eq!(grid_e, rules_e);
        assert_eq!(grid_e.len(), 3);
        for cell in [(4, 4), (5, 3), (5, 4)] {
            assert!(grid_e.contains(&cell));
        }
    }

    #[test]
    fn diff_is_exactly_one_cell() {
        let diff = classification_diff();
        assert_eq!(diff.len(), 1);
        let cell = diff[0];
        assert_eq!(cell.probability.value(), 4);
        assert_eq!(cell.severity.value(), 2);
        assert_eq!(cell.grid, RiskTier::Medium);
        assert_eq!(cell.rules, RiskTier::High);
    }

    #[test]
    fn classification_is_a_pure_function_of_the_cell() {
        for (prob, sev) in all_cells() {
            assert_eq!(classify_grid(prob, sev), classify_grid(prob, sev));
            assert_eq!(
                classify(prob, sev, ClassificationMode::Rules),
                classify_rules(prob, sev)
            );
        }
    }
}
