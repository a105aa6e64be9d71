//! Expert-validation workflow: verdict tallying against a consensus
//! threshold, removal of rejected findings, and deterministic selection of
//! concerns to put in front of a panel.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{AuditDataset, ConcernStatus};
use crate::riskmatrix::{classify, ClassificationMode, RiskTier};

/// One expert's judgement on a concern.
///
/// `Confirmed` and `Plausible` both concur with the finding; only `Rejected`
/// opposes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Plausible,
    Rejected,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Plausible => "plausible",
            Verdict::Rejected => "rejected",
        }
    }

    pub fn parse(raw: &str) -> Result<Self> {
        match raw.trim().to_ascii_lowercase().as_str() {
            "confirmed" => Ok(Verdict::Confirmed),
            "plausible" => Ok(Verdict::Plausible),
            "rejected" => Ok(Verdict::Rejected),
            _ => Err(Error::UnknownLabel {
                field: "verdict",
                raw: raw.to_string(),
            }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-concern expert verdicts, keyed by expert id.
///
/// The outcome is not stored: it depends on the configured threshold and
/// panel size, so [`tally`] computes it on demand.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpertBallot {
    pub verdicts: BTreeMap<String, Verdict>,
}

impl ExpertBallot {
    pub fn new(verdicts: BTreeMap<String, Verdict>) -> Self {
        ExpertBallot { verdicts }
    }

    /// Verdicts that concur with the finding (confirmed or plausible).
    pub fn concurring(&self) -> usize {
        self.verdicts
            .values()
            .filter(|v| matches!(v, Verdict::Confirmed | Verdict::Plausible))
            .count()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts.values().filter(|&&v| v == verdict).count()
    }
}

/// Consensus outcome for one ballot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BallotOutcome {
    Accepted,
    Rejected,
    Pending,
}

impl BallotOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            BallotOutcome::Accepted => "accepted",
            BallotOutcome::Rejected => "rejected",
            BallotOutcome::Pending => "pending",
        }
    }
}

impl fmt::Display for BallotOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tallies a ballot against the panel: accepted when the concurring fraction
/// of the panel reaches `threshold`, rejected once every panel member has
/// voted without reaching it, pending otherwise.
///
/// The tally is anonymous; expert ids never influence the outcome.
pub fn tally(ballot: &ExpertBallot, threshold: f64, panel_size: usize) -> Result<BallotOutcome> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::InvalidThreshold { value: threshold });
    }
    if panel_size == 0 {
        return Err(Error::InvalidPanelSize);
    }
    let concurring = ballot.concurring() as f64;
    if concurring / panel_size as f64 >= threshold {
        Ok(BallotOutcome::Accepted)
    } else if ballot.verdicts.len() >= panel_size {
        Ok(BallotOutcome::Rejected)
    } else {
        Ok(BallotOutcome::Pending)
    }
}

/// Applies consensus outcomes to a dataset: active concerns whose ballot
/// tallies to `Rejected` become [`ConcernStatus::RejectedByExperts`].
/// Everything else — including concerns without ballots — passes through
/// unchanged. Probability, severity, and root cause are never touched.
pub fn apply_consensus(
    dataset: &AuditDataset,
    threshold: f64,
    panel_size: usize,
) -> Result<AuditDataset> {
    let mut concerns = dataset.concerns().to_vec();
    for concern in &mut concerns {
        if let Some(ballot) = &concern.ballot {
            if concern.status == ConcernStatus::Active
                && tally(ballot, threshold, panel_size)? == BallotOutcome::Rejected
            {
                concern.status = ConcernStatus::RejectedByExperts;
            }
        }
    }
    AuditDataset::new(concerns)
}

/// Which concerns to put in front of the expert panel, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationPlan {
    pub selected: Vec<String>,
    pub budget: usize,
    pub seed: u64,
}

/// Selects up to `budget` active concern ids for validation, prioritizing by
/// tier: every extremely-high concern precedes every high one, and so on
/// down. Order within a tier is a seeded shuffle, so the same seed always
/// yields the same plan.
pub fn plan_validation(
    dataset: &AuditDataset,
    budget: usize,
    seed: u64,
    mode: ClassificationMode,
) -> ValidationPlan {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut selected = Vec::new();
    for tier in RiskTier::DESCENDING {
        let mut ids: Vec<&str> = dataset
            .active()
            .filter(|c| classify(c.probability, c.severity, mode) == tier)
            .map(|c| c.id.as_str())
            .collect();
        ids.shuffle(&mut rng);
        selected.extend(ids.into_iter().map(str::to_owned));
    }
    selected.truncate(budget);
    ValidationPlan {
        selected,
        budget,
        seed,
    }
}
