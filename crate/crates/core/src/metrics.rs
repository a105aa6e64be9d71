//! The comparative metrics: per-concern risk scores roll up into a severity
//! index (mean risk score), per-category vulnerability shares, an
//! attack-vector concentration index, and the percentage of concerns the
//! rule-based classifier puts in the high or extremely-high tiers.
//!
//! Aggregation stays in integer arithmetic until the final division, so every
//! metric is exactly invariant under permutation of the input and free of
//! intermediate rounding.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{AuditDataset, Concern, RootCauseCategory};
use crate::riskmatrix::{classify, ClassificationMode, RiskTier};

/// All comparative metrics for one standard (or for a whole dataset).
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsSummary {
    /// Document identifier, or `overall` for an ungrouped summary.
    pub standard: String,
    /// Number of concerns included.
    pub n: usize,
    /// Sum of risk scores.
    pub total_rs: u64,
    /// Mean risk score.
    pub rsi: f64,
    /// Each non-empty category's share of the total risk score; sums to 1.
    pub rcvs_by_category: BTreeMap<RootCauseCategory, f64>,
    /// Arithmetic mean of the shares above, i.e. 1/k.
    pub mean_rcvs: f64,
    /// Number of non-empty categories.
    pub k: usize,
    /// Concentration of risk across categories, in (0, 1].
    pub avpi: f64,
    /// Percentage of concerns rule-classified high or extremely high.
    pub csgp_percent: f64,
    /// Tier counts under `classification_mode`; every tier is present.
    pub tier_counts: BTreeMap<RiskTier, usize>,
    /// Mode used for `tier_counts`. The gap percentage always uses the rules.
    pub classification_mode: ClassificationMode,
}

/// Mean risk score over the given concerns.
pub fn compute_rsi<'a, I>(concerns: I) -> Result<f64>
where
    I: IntoIterator<Item = &'a Concern>,
{
    let mut n = 0u64;
    let mut total = 0u64;
    for concern in concerns {
        n += 1;
        total += u64::from(concern.risk_score());
    }
    if n == 0 {
        return Err(Error::EmptyDataset);
    }
    Ok(total as f64 / n as f64)
}

fn category_sums<'a, I>(concerns: I) -> (u64, BTreeMap<RootCauseCategory, (u64, u64)>)
where
    I: IntoIterator<Item = &'a Concern>,
{
    let mut total = 0u64;
    let mut per_category: BTreeMap<RootCauseCategory, (u64, u64)> = BTreeMap::new();
    for concern in concerns {
        let rs = u64::from(concern.risk_score());
        total += rs;
        let entry = per_category
            .entry(concern.root_cause.category)
            .or_insert((0, 0));
        entry.0 += 1;
        entry.1 += rs;
    }
    (total, per_category)
}

/// Each non-empty category's share of the total risk score. The shares sum
/// to 1; categories with no concerns are omitted.
pub fn compute_rcvs<'a, I>(concerns: I) -> Result<BTreeMap<RootCauseCategory, f64>>
where
    I: IntoIterator<Item = &'a Concern>,
{
    let (total, per_category) = category_sums(concerns);
    if total == 0 {
        return Err(Error::ZeroTotalRisk);
    }
    Ok(per_category
        .into_iter()
        .map(|(category, (_, sum))| (category, sum as f64 / total as f64))
        .collect())
}

/// Concentration index: the count-weighted sum of category risk shares,
/// `Σ_c (|C_c| / n) · share_c`. Equals 1 exactly when a single category holds
/// everything, and reduces to the Herfindahl index `Σ p_c²` when every
/// concern carries the same risk score.
pub fn compute_avpi<'a, I>(concerns: I) -> Result<f64>
where
    I: IntoIterator<Item = &'a Concern>,
{
    let collected: Vec<&Concern> = concerns.into_iter().collect();
    let n = collected.len() as u64;
    if n == 0 {
        return Err(Error::EmptyDataset);
    }
    let (total, per_category) = category_sums(collected);
    if total == 0 {
        return Err(Error::ZeroTotalRisk);
    }
    let numerator: u64 = per_category
        .values()
        .map(|(count, sum)| count * sum)
        .sum();
    Ok(numerator as f64 / (n * total) as f64)
}

/// Percentage of concerns whose tier under `mode` is high or extremely high.
/// The gap metric is defined over the rule-based classifier; pass
/// [`ClassificationMode::Rules`] unless deliberately comparing.
pub fn compute_csgp<'a, I>(concerns: I, mode: ClassificationMode) -> Result<f64>
where
    I: IntoIterator<Item = &'a Concern>,
{
    let mut n = 0u64;
    let mut unaddressed = 0u64;
    for concern in concerns {
        n += 1;
        if classify(concern.probability, concern.severity, mode) >= RiskTier::High {
            unaddressed += 1;
        }
    }
    if n == 0 {
        return Err(Error::EmptyDataset);
    }
    Ok(100.0 * unaddressed as f64 / n as f64)
}

fn summarize_partition(
    standard: &str,
    concerns: &[&Concern],
    tier_mode: ClassificationMode,
) -> Result<MetricsSummary> {
    if concerns.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let n = concerns.len();
    let (total, per_category) = category_sums(concerns.iter().copied());
    if total == 0 {
        return Err(Error::ZeroTotalRisk);
    }
    let k = per_category.len();
    let rcvs_by_category: BTreeMap<RootCauseCategory, f64> = per_category
        .iter()
        .map(|(&category, &(_, sum))| (category, sum as f64 / total as f64))
        .collect();
    // The k shares sum to exactly 1, so their arithmetic mean is 1/k.
    let mean_rcvs = 1.0 / k as f64;
    let numerator: u64 = per_category.values().map(|(count, sum)| count * sum).sum();
    let avpi = numerator as f64 / (n as u64 * total) as f64;
    let csgp_percent = compute_csgp(concerns.iter().copied(), ClassificationMode::Rules)?;

    let mut tier_counts: BTreeMap<RiskTier, usize> =
        RiskTier::DESCENDING.iter().map(|&t| (t, 0)).collect();
    for concern in concerns {
        *tier_counts
            .entry(classify(concern.probability, concern.severity, tier_mode))
            .or_insert(0) += 1;
    }

    Ok(MetricsSummary {
        standard: standard.to_string(),
        n,
        total_rs: total,
        rsi: total as f64 / n as f64,
        rcvs_by_category,
        mean_rcvs,
        k,
        avpi,
        csgp_percent,
        tier_counts,
        classification_mode: tier_mode,
    })
}

/// Computes one [`MetricsSummary`] per standard (sorted lexicographically),
/// or a single `overall` summary, over the active concerns of the dataset.
pub fn summarize(
    dataset: &AuditDataset,
    by_standard: bool,
    tier_mode: ClassificationMode,
) -> Result<Vec<MetricsSummary>> {
    let active: Vec<&Concern> = dataset.active().collect();
    if active.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if by_standard {
        dataset
            .active_by_standard()
            .into_iter()
            .map(|(standard, concerns)| summarize_partition(standard, &concerns, tier_mode))
            .collect()
    } else {
        Ok(vec![summarize_partition("overall", &active, tier_mode)?])
    }
}
