//! Synthetic datasets with engineered aggregate structure, used by the test
//! suites and handy for demos. Each builder documents the aggregates it was
//! constructed to hit; the per-concern text fields are filler.

use crate::model::{
    AuditDataset, Concern, ConcernStatus, ProbabilityLevel, RootCause, RootCauseCategory,
    SeverityLevel,
};

type Block = (&'static str, RootCauseCategory, u8, u8, usize);

fn expand(blocks: &[Block]) -> AuditDataset {
    let mut concerns = Vec::new();
    let mut sequence: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
    for &(standard, category, probability, severity, count) in blocks {
        for _ in 0..count {
            let seq = sequence.entry(standard).or_insert(0);
            *seq += 1;
            concerns.push(Concern {
                id: format!("{standard}-{seq:03}"),
                standard: standard.to_string(),
                section: format!("{probability}.{severity}"),
                quoted_text: format!("excerpt {seq}"),
                description: format!("synthetic concern {seq}"),
                root_cause: RootCause::new(category),
                probability: ProbabilityLevel::from_value(i64::from(probability))
                    .expect("block probability in range"),
                severity: SeverityLevel::from_value(i64::from(severity))
                    .expect("block severity in range"),
                status: ConcernStatus::Active,
                ballot: None,
            });
        }
    }
    AuditDataset::new(concerns).expect("generated ids are unique")
}

/// Three standards whose comparative metrics land on round published-style
/// values:
///
/// * `NIST-AI-RMF` — 78 concerns, total risk 822, 54 rule-classified
///   high/extremely-high, four categories: RSI 10.54, AVPI 0.29,
///   CSGP 69.23 %, mean RCVS 0.25 (two-decimal display).
/// * `ALTAI` — 28 concerns, total risk 258, 21 high/extremely-high, three
///   categories: RSI 9.21, AVPI 0.51, CSGP 75.00 %, mean RCVS 0.33.
/// * `ICO-AIRT` — 30 concerns, total risk 303, 24 high/extremely-high, four
///   categories: RSI 10.10, AVPI 0.30, CSGP 80.00 %, mean RCVS 0.25.
pub fn comparative_dataset() -> AuditDataset {
    use RootCauseCategory::{
        AmbiguousSpecification as AS, DataVulnerability as DV,
        UnenforceableSecurityControl as UC, UnderDefinedProcess as UD,
    };
    expand(&[
        // NIST-AI-RMF: category counts 32/20/16/10, risk sums 337/211/169/105.
        ("NIST-AI-RMF", UD, 5, 4, 8),
        ("NIST-AI-RMF", UD, 4, 3, 8),
        ("NIST-AI-RMF", UD, 3, 3, 3),
        ("NIST-AI-RMF", UD, 2, 4, 3),
        ("NIST-AI-RMF", UD, 3, 1, 10),
        ("NIST-AI-RMF", AS, 5, 4, 6),
        ("NIST-AI-RMF", AS, 3, 3, 3),
        ("NIST-AI-RMF", AS, 2, 4, 5),
        ("NIST-AI-RMF", AS, 4, 1, 6),
        ("NIST-AI-RMF", DV, 5, 4, 5),
        ("NIST-AI-RMF", DV, 4, 4, 1),
        ("NIST-AI-RMF", DV, 3, 3, 3),
        ("NIST-AI-RMF", DV, 4, 2, 2),
        ("NIST-AI-RMF", DV, 2, 1, 5),
        ("NIST-AI-RMF", UC, 5, 4, 3),
        ("NIST-AI-RMF", UC, 4, 4, 1),
        ("NIST-AI-RMF", UC, 5, 2, 1),
        ("NIST-AI-RMF", UC, 2, 4, 2),
        ("NIST-AI-RMF", UC, 1, 1, 3),
        // ALTAI: category counts 19/5/4, risk sums 175/46/37.
        ("ALTAI", UD, 5, 4, 4),
        ("ALTAI", UD, 2, 4, 10),
        ("ALTAI", UD, 3, 1, 5),
        ("ALTAI", AS, 5, 4, 1),
        ("ALTAI", AS, 2, 4, 3),
        ("ALTAI", AS, 2, 1, 1),
        ("ALTAI", DV, 3, 3, 1),
        ("ALTAI", DV, 4, 4, 1),
        ("ALTAI", DV, 2, 4, 1),
        ("ALTAI", DV, 4, 1, 1),
        // ICO-AIRT: category counts 11/9/8/2, risk sums 111/91/81/20.
        ("ICO-AIRT", DV, 5, 4, 2),
        ("ICO-AIRT", DV, 4, 4, 1),
        ("ICO-AIRT", DV, 3, 3, 3),
        ("ICO-AIRT", DV, 2, 4, 3),
        ("ICO-AIRT", DV, 2, 1, 2),
        ("ICO-AIRT", UD, 5, 4, 2),
        ("ICO-AIRT", UD, 4, 3, 1),
        ("ICO-AIRT", UD, 3, 3, 1),
        ("ICO-AIRT", UD, 2, 4, 3),
        ("ICO-AIRT", UD, 3, 1, 2),
        ("ICO-AIRT", AS, 5, 4, 2),
        ("ICO-AIRT", AS, 3, 3, 1),
        ("ICO-AIRT", AS, 2, 4, 3),
        ("ICO-AIRT", AS, 4, 1, 2),
        ("ICO-AIRT", UC, 4, 3, 1),
        ("ICO-AIRT", UC, 2, 4, 1),
    ])
}

/// Three standards with fixed per-tier counts under the grid classifier:
///
/// * `STD-A` — 30 concerns: 3 extremely high, 16 high, 11 medium, 0 low.
/// * `STD-B` — 78 concerns: 19 extremely high, 30 high, 26 medium, 3 low.
/// * `STD-C` — 28 concerns: 0 extremely high, 17 high, 10 medium, 1 low.
pub fn tier_profile_dataset() -> AuditDataset {
    use RootCauseCategory::{
        AmbiguousSpecification as AS, DataVulnerability as DV,
        UnenforceableSecurityControl as UC, UnderDefinedProcess as UD,
    };
    expand(&[
        // STD-A
        ("STD-A", DV, 5, 4, 1),
        ("STD-A", UD, 4, 4, 1),
        ("STD-A", AS, 5, 3, 1),
        ("STD-A", DV, 3, 4, 4),
        ("STD-A", UD, 2, 4, 3),
        ("STD-A", AS, 4, 3, 3),
        ("STD-A", UC, 3, 3, 3),
        ("STD-A", DV, 5, 2, 3),
        ("STD-A", UD, 1, 4, 3),
        ("STD-A", AS, 2, 3, 3),
        ("STD-A", UC, 4, 2, 2),
        ("STD-A", DV, 3, 2, 2),
        ("STD-A", UD, 5, 1, 1),
        // STD-B
        ("STD-B", DV, 5, 4, 7),
        ("STD-B", UD, 4, 4, 6),
        ("STD-B", AS, 5, 3, 6),
        ("STD-B", UC, 3, 4, 6),
        ("STD-B", DV, 2, 4, 6),
        ("STD-B", UD, 4, 3, 6),
        ("STD-B", AS, 3, 3, 6),
        ("STD-B", UC, 5, 2, 6),
        ("STD-B", DV, 1, 4, 6),
        ("STD-B", UD, 2, 3, 5),
        ("STD-B", AS, 4, 2, 5),
        ("STD-B", UC, 3, 2, 5),
        ("STD-B", DV, 5, 1, 5),
        ("STD-B", UD, 1, 1, 1),
        ("STD-B", AS, 2, 2, 1),
        ("STD-B", UC, 3, 1, 1),
        // STD-C
        ("STD-C", DV, 3, 4, 4),
        ("STD-C", UD, 2, 4, 4),
        ("STD-C", AS, 4, 3, 3),
        ("STD-C", UC, 3, 3, 3),
        ("STD-C", DV, 5, 2, 3),
        ("STD-C", UD, 1, 4, 2),
        ("STD-C", AS, 2, 3, 2),
        ("STD-C", UC, 4, 2, 2),
        ("STD-C", DV, 3, 2, 2),
        ("STD-C", UD, 5, 1, 2),
        ("STD-C", AS, 1, 1, 1),
    ])
}
