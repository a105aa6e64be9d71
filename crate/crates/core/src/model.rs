//! Canonical domain types shared by every other module: the probability and
//! severity scales, the root-cause codebook, individual concerns, and datasets.
//!
//! All types are immutable value objects after construction; nothing here
//! carries interior mutability, so values can be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::consensus::ExpertBallot;
use crate::error::{Error, Result};

/// Likelihood of a concern occurring, on the five-point scale.
///
/// The numeric values run from 1 (`Unlikely`) to 5 (`Frequent`). Single-letter
/// codes from the composite-risk-management matrix headers are accepted as
/// input aliases: A = Frequent down to E = Unlikely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbabilityLevel {
    Unlikely,
    Seldom,
    Occasional,
    Likely,
    Frequent,
}

impl ProbabilityLevel {
    /// All levels, ascending by value.
    pub const ALL: [ProbabilityLevel; 5] = [
        ProbabilityLevel::Unlikely,
        ProbabilityLevel::Seldom,
        ProbabilityLevel::Occasional,
        ProbabilityLevel::Likely,
        ProbabilityLevel::Frequent,
    ];

    /// Numeric value in 1..=5.
    pub fn value(self) -> u8 {
        match self {
            ProbabilityLevel::Unlikely => 1,
            ProbabilityLevel::Seldom => 2,
            ProbabilityLevel::Occasional => 3,
            ProbabilityLevel::Likely => 4,
            ProbabilityLevel::Frequent => 5,
        }
    }

    /// Canonical label.
    pub fn label(self) -> &'static str {
        match self {
            ProbabilityLevel::Unlikely => "Unlikely",
            ProbabilityLevel::Seldom => "Seldom",
            ProbabilityLevel::Occasional => "Occasional",
            ProbabilityLevel::Likely => "Likely",
            ProbabilityLevel::Frequent => "Frequent",
        }
    }

    /// Matrix column letter (A = Frequent .. E = Unlikely).
    pub fn letter(self) -> char {
        match self {
            ProbabilityLevel::Frequent => 'A',
            ProbabilityLevel::Likely => 'B',
            ProbabilityLevel::Occasional => 'C',
            ProbabilityLevel::Seldom => 'D',
            ProbabilityLevel::Unlikely => 'E',
        }
    }

    pub fn from_value(value: i64) -> Result<Self> {
        match value {
            1 => Ok(ProbabilityLevel::Unlikely),
            2 => Ok(ProbabilityLevel::Seldom),
            3 => Ok(ProbabilityLevel::Occasional),
            4 => Ok(ProbabilityLevel::Likely),
            5 => Ok(ProbabilityLevel::Frequent),
            _ => Err(Error::UnknownScaleValue {
                scale: "probability",
                raw: value.to_string(),
            }),
        }
    }

    /// Normalize a raw cell: a label (case-insensitive), a matrix letter
    /// A..E, or an integer 1..5.
    pub fn parse(raw: &str) -> Result<Self> {
        let trimmed = raw.trim();
        if let Ok(value) = trimmed.parse::<i64>() {
            return Self::from_value(value);
        }
        match trimmed.to_ascii_lowercase().as_str() {
            "frequent" | "a" => Ok(ProbabilityLevel::Frequent),
            "likely" | "b" => Ok(ProbabilityLevel::Likely),
            "occasional" | "c" => Ok(ProbabilityLevel::Occasional),
            "seldom" | "d" => Ok(ProbabilityLevel::Seldom),
            "unlikely" | "e" => Ok(ProbabilityLevel::Unlikely),
            _ => Err(Error::UnknownScaleValue {
                scale: "probability",
                raw: raw.to_string(),
            }),
        }
    }
}

impl fmt::Display for ProbabilityLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ProbabilityLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Impact of a concern, on the four-point scale.
///
/// The numeric values run from 1 (`Negligible`) to 4 (`Catastrophic`).
/// Synonyms seen in the source material normalize deterministically:
/// "Marginal" → `Moderate`, "Significant" → `Critical`. Roman numerals from
/// the matrix row headers are also accepted (I = Catastrophic .. IV =
/// Negligible).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeverityLevel {
    Negligible,
    Moderate,
    Critical,
    Catastrophic,
}

impl SeverityLevel {
    /// All levels, ascending by value.
    pub const ALL: [SeverityLevel; 4] = [
        SeverityLevel::Negligible,
        SeverityLevel::Moderate,
        SeverityLevel::Critical,
        SeverityLevel::Catastrophic,
    ];

    /// Numeric value in 1..=4.
    pub fn value(self) -> u8 {
        match self {
            SeverityLevel::Negligible => 1,
            SeverityLevel::Moderate => 2,
            SeverityLevel::Critical => 3,
            SeverityLevel::Catastrophic => 4,
        }
    }

    /// Canonical label.
    pub fn label(self) -> &'static str {
        match self {
            SeverityLevel::Negligible => "Negligible",
            SeverityLevel::Moderate => "Moderate",
            SeverityLevel::Critical => "Critical",
            SeverityLevel::Catastrophic => "Catastrophic",
        }
    }

    /// Matrix row numeral (I = Catastrophic .. IV = Negligible).
    pub fn numeral(self) -> &'static str {
        match self {
            SeverityLevel::Catastrophic => "I",
            SeverityLevel::Critical => "II",
            SeverityLevel::Moderate => "III",
            SeverityLevel::Negligible => "IV",
        }
    }

    pub fn from_value(value: i64) -> Result<Self> {
        match value {
            1 => Ok(SeverityLevel::Negligible),
            2 => Ok(SeverityLevel::Moderate),
            3 => Ok(SeverityLevel::Critical),
            4 => Ok(SeverityLevel::Catastrophic),
            _ => Err(Error::UnknownScaleValue {
                scale: "severity",
                raw: value.to_string(),
            }),
        }
    }

    /// Normalize a raw cell: a label or synonym (case-insensitive), a Roman
    /// numeral I..IV, or an integer 1..4.
    pub fn parse(raw: &str) -> Result<Self> {
        let trimmed = raw.trim();
        if let Ok(value) = trimmed.parse::<i64>() {
            return Self::from_value(value);
        }
        match trimmed.to_ascii_lowercase().as_str() {
            "catastrophic" | "i" => Ok(SeverityLevel::Catastrophic),
            "critical" | "significant" | "ii" => Ok(SeverityLevel::Critical),
            "moderate" | "marginal" | "iii" => Ok(SeverityLevel::Moderate),
            "negligible" | "iv" => Ok(SeverityLevel::Negligible),
            _ => Err(Error::UnknownScaleValue {
                scale: "severity",
                raw: raw.to_string(),
            }),
        }
    }
}

impl fmt::Display for SeverityLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SeverityLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The four root-cause categories of the audit codebook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootCauseCategory {
    DataVulnerability,
    UnenforceableSecurityControl,
    UnderDefinedProcess,
    AmbiguousSpecification,
}

impl RootCauseCategory {
    pub const ALL: [RootCauseCategory; 4] = [
        RootCauseCategory::DataVulnerability,
        RootCauseCategory::UnenforceableSecurityControl,
        RootCauseCategory::UnderDefinedProcess,
        RootCauseCategory::AmbiguousSpecification,
    ];

    /// Codebook label.
    pub fn label(self) -> &'static str {
        match self {
            RootCauseCategory::DataVulnerability => "Data Vulnerability",
            RootCauseCategory::UnenforceableSecurityControl => "Unenforceable Security Control",
            RootCauseCategory::UnderDefinedProcess => "Under-defined Process",
            RootCauseCategory::AmbiguousSpecification => "Ambiguous Specification",
        }
    }

    /// Case-insensitive parse, tolerant of spacing, hyphen, and underscore
    /// differences ("under_defined_process", "Under-defined Process", ...).
    pub fn parse(raw: &str) -> Result<Self> {
        let key: String = raw
            .chars()
            .filter(char::is_ascii_alphanumeric)
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "datavulnerability" => Ok(RootCauseCategory::DataVulnerability),
            "unenforceablesecuritycontrol" => Ok(RootCauseCategory::UnenforceableSecurityControl),
            "underdefinedprocess" => Ok(RootCauseCategory::UnderDefinedProcess),
            "ambiguousspecification" => Ok(RootCauseCategory::AmbiguousSpecification),
            _ => Err(Error::UnknownLabel {
                field: "root cause",
                raw: raw.to_string(),
            }),
        }
    }
}

impl fmt::Display for RootCauseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Assessed root cause of a concern: exactly one codebook category, plus an
/// optional free-form note that never participates in any metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCause {
    pub category: RootCauseCategory,
    pub note: Option<String>,
}

impl RootCause {
    pub fn new(category: RootCauseCategory) -> Self {
        RootCause {
            category,
            note: None,
        }
    }
}

impl From<RootCauseCategory> for RootCause {
    fn from(category: RootCauseCategory) -> Self {
        RootCause::new(category)
    }
}

/// Lifecycle state of a concern. Only `Active` concerns enter metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcernStatus {
    /// Part of the final list; included in every aggregate.
    Active,
    /// Dropped during the audit itself (no researcher consensus).
    Discarded,
    /// Removed by the expert-validation consensus step.
    RejectedByExperts,
}

impl ConcernStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ConcernStatus::Active => "active",
            ConcernStatus::Discarded => "discarded",
            ConcernStatus::RejectedByExperts => "rejected_by_experts",
        }
    }

    pub fn parse(raw: &str) -> Result<Self> {
        let key: String = raw
            .chars()
            .filter(char::is_ascii_alphanumeric)
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "active" => Ok(ConcernStatus::Active),
            "discarded" => Ok(ConcernStatus::Discarded),
            "rejectedbyexperts" => Ok(ConcernStatus::RejectedByExperts),
            _ => Err(Error::UnknownLabel {
                field: "status",
                raw: raw.to_string(),
            }),
        }
    }
}

impl fmt::Display for ConcernStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One audited finding: where it was found, what it says, how it was assessed.
#[derive(Debug, Clone, PartialEq)]
pub struct Concern {
    /// Unique within a dataset.
    pub id: String,
    /// Identifier of the standard/document the concern belongs to.
    pub standard: String,
    pub section: String,
    pub quoted_text: String,
    pub description: String,
    pub root_cause: RootCause,
    pub probability: ProbabilityLevel,
    pub severity: SeverityLevel,
    pub status: ConcernStatus,
    /// Expert verdicts, when the concern went through validation.
    pub ballot: Option<ExpertBallot>,
}

impl Concern {
    /// Risk score: probability value × severity value, in 1..=20.
    pub fn risk_score(&self) -> u32 {
        u32::from(self.probability.value()) * u32::from(self.severity.value())
    }

    pub fn is_active(&self) -> bool {
        self.status == ConcernStatus::Active
    }
}

/// A validated, id-unique collection of concerns.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AuditDataset {
    concerns: Vec<Concern>,
}

impl AuditDataset {
    /// Builds a dataset, rejecting duplicate concern ids.
    pub fn new(concerns: Vec<Concern>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for concern in &concerns {
            if !seen.insert(concern.id.as_str()) {
                return Err(Error::DuplicateId {
                    id: concern.id.clone(),
                });
            }
        }
        Ok(AuditDataset { concerns })
    }

    pub fn concerns(&self) -> &[Concern] {
        &self.concerns
    }

    pub fn len(&self) -> usize {
        self.concerns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concerns.is_empty()
    }

    /// Concerns that participate in metrics.
    pub fn active(&self) -> impl Iterator<Item = &Concern> {
        self.concerns.iter().filter(|c| c.is_active())
    }

    /// Document identifiers present in the dataset (all statuses), sorted.
    pub fn standards(&self) -> BTreeSet<&str> {
        self.concerns.iter().map(|c| c.standard.as_str()).collect()
    }

    /// Active concerns grouped by standard, keys sorted lexicographically.
    pub fn active_by_standard(&self) -> BTreeMap<&str, Vec<&Concern>> {
        let mut groups: BTreeMap<&str, Vec<&Concern>> = BTreeMap::new();
        for concern in self.active() {
            groups
                .entry(concern.standard.as_str())
                .or_default()
                .push(concern);
        }
        groups
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn concern(id: &str, p: u8, s: u8) -> Concern {
        Concern {
            id: id.to_string(),
            standard: "STD".to_string(),
            section: "1.1".to_string(),
            quoted_text: String::new(),
            description: String::new(),
            root_cause: RootCauseCategory::DataVulnerability.into(),
            probability: ProbabilityLevel::from_value(i64::from(p)).unwrap(),
            severity: SeverityLevel::from_value(i64::from(s)).unwrap(),
            status: ConcernStatus::Active,
            ballot: None,
        }
    }

    #[test]
    fn probability_labels_round_trip() {
        for level in ProbabilityLevel::ALL {
            assert_eq!(ProbabilityLevel::parse(level.label()).unwrap(), level);
            assert_eq!(
                ProbabilityLevel::parse(&level.label().to_uppercase()).unwrap(),
                level
            );
            assert_eq!(
                ProbabilityLevel::from_value(i64::from(level.value())).unwrap(),
                level
            );
            assert_eq!(
                ProbabilityLevel::parse(&level.letter().to_string()).unwrap(),
                level
            );
        }
    }

    #[test]
    fn probability_known_values() {
        assert_eq!(ProbabilityLevel::parse("Frequent").unwrap().value(), 5);
        assert_eq!(
            ProbabilityLevel::from_value(1).unwrap(),
            ProbabilityLevel::Unlikely
        );
        assert!(matches!(
            ProbabilityLevel::parse("sometimes"),
            Err(Error::UnknownScaleValue { .. })
        ));
        assert!(ProbabilityLevel::from_value(0).is_err());
        assert!(ProbabilityLevel::from_value(6).is_err());
    }

    #[test]
    fn severity_labels_and_aliases() {
        for level in SeverityLevel::ALL {
            assert_eq!(SeverityLevel::parse(level.label()).unwrap(), level);
            assert_eq!(SeverityLevel::parse(level.numeral()).unwrap(), level);
            assert_eq!(
                SeverityLevel::from_value(i64::from(level.value())).unwrap(),
                level
            );
        }
        assert_eq!(
            SeverityLevel::parse("Marginal").unwrap(),
            SeverityLevel::Moderate
        );
        assert_eq!(SeverityLevel::parse("marginal").unwrap().value(), 2);
        assert_eq!(
            SeverityLevel::parse("Significant").unwrap(),
            SeverityLevel::Critical
        );
        assert_eq!(
            SeverityLevel::parse("Catastrophic").unwrap().value(),
            4
        );
        assert!(SeverityLevel::from_value(0).is_err());
        assert!(SeverityLevel::from_value(5).is_err());
        assert!(SeverityLevel::parse("severe").is_err());
    }

    #[test]
    fn risk_score_bounds_and_examples() {
        assert_eq!(concern("a", 5, 4).risk_score(), 20);
        assert_eq!(concern("b", 1, 1).risk_score(), 1);
        assert_eq!(concern("c", 3, 2).risk_score(), 6);
        for p in ProbabilityLevel::ALL {
            for s in SeverityLevel::ALL {
                let mut c = concern("x", 1, 1);
                c.probability = p;
                c.severity = s;
                let rs = c.risk_score();
                assert!((1..=20).contains(&rs));
            }
        }
    }

    #[test]
    fn risk_score_monotone_in_each_axis() {
        for s in SeverityLevel::ALL {
            let mut prev = 0;
            for p in ProbabilityLevel::ALL {
                let mut c = concern("x", 1, 1);
                c.probability = p;
                c.severity = s;
                assert!(c.risk_score() > prev);
                prev = c.risk_score();
            }
        }
        for p in ProbabilityLevel::ALL {
            let mut prev = 0;
            for s in SeverityLevel::ALL {
                let mut c = concern("x", 1, 1);
                c.probability = p;
                c.severity = s;
                assert!(c.risk_score() > prev);
                prev = c.risk_score();
            }
        }
    }

    #[test]
    fn root_cause_parse_variants() {
        assert_eq!(
            RootCauseCategory::parse("Under-defined Process").unwrap(),
            RootCauseCategory::UnderDefinedProcess
        );
        assert_eq!(
            RootCauseCategory::parse("under_defined_process").unwrap(),
            RootCauseCategory::UnderDefinedProcess
        );
        assert_eq!(
            RootCauseCategory::parse("DATA VULNERABILITY").unwrap(),
            RootCauseCategory::DataVulnerability
        );
        assert!(RootCauseCategory::parse("misc").is_err());
        for cat in RootCauseCategory::ALL {
            assert_eq!(RootCauseCategory::parse(cat.label()).unwrap(), cat);
        }
    }

    #[test]
    fn status_round_trip() {
        for status in [
            ConcernStatus::Active,
            ConcernStatus::Discarded,
            ConcernStatus::RejectedByExperts,
        ] {
            assert_eq!(ConcernStatus::parse(status.as_str()).unwrap(), status);
        }
        assert_eq!(
            ConcernStatus::parse("Rejected By Experts").unwrap(),
            ConcernStatus::RejectedByExperts
        );
        assert!(ConcernStatus::parse("open").is_err());
    }

    #[test]
    fn dataset_rejects_duplicate_ids() {
        let err = AuditDataset::new(vec![concern("dup", 1, 1), concern("dup", 2, 2)]);
        assert!(matches!(err, Err(Error::DuplicateId { id }) if id == "dup"));
    }

    #[test]
    fn dataset_partitions_cover_active_concerns() {
        let mut c3 = concern("c", 2, 2);
        c3.standard = "OTHER".to_string();
        c3.status = ConcernStatus::Discarded;
        let ds = AuditDataset::new(vec![concern("a", 1, 1), concern("b", 5, 4), c3]).unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.active().count(), 2);
        assert_eq!(ds.standards().len(), 2);
        let groups = ds.active_by_standard();
        let total: usize = groups.values().map(Vec::len).sum();
        assert_eq!(total, 2);
        assert!(!groups.contains_key("OTHER"));
    }
}
