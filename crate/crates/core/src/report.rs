//! Presentation artifacts built from classified datasets — per-standard tier
//! counts, comparative metric tables, severity × probability count grids, and
//! root-cause × tier heatmaps — plus their serializations.
//!
//! JSON is the canonical machine format and keeps full precision; markdown
//! tables round the comparative metrics to two decimals at render time only.
//! Rendering is deterministic: the same aggregate always yields the same
//! bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::MetricsSummary;
use crate::model::{AuditDataset, ProbabilityLevel, RootCauseCategory, SeverityLevel};
use crate::reliability::AlphaResult;
use crate::riskmatrix::{
    classification_diff, classify, ClassificationMode, DiffCell, RiskTier,
};

/// Output encodings understood by [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Svg,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "md",
            Format::Svg => "svg",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::UnsupportedFormat {
                format: s.to_string(),
            }),
        }
    }
}

/// One standard's row in the tier-count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TierCountRow {
    pub standard: String,
    pub total: usize,
    pub extremely_high: usize,
    pub high: usize,
    pub medium: usize,
    pub low: usize,
}

/// Per-standard tier counts under one classification mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TierCountTable {
    pub classification_mode: ClassificationMode,
    pub rows: Vec<TierCountRow>,
}

/// Counts active concerns per standard per tier. Standards sort
/// lexicographically; an empty dataset yields an empty table.
pub fn tier_counts(dataset: &AuditDataset, mode: ClassificationMode) -> TierCountTable {
    let rows = dataset
        .active_by_standard()
        .into_iter()
        .map(|(standard, concerns)| {
            let mut row = TierCountRow {
                standard: standard.to_string(),
                total: concerns.len(),
                extremely_high: 0,
                high: 0,
                medium: 0,
                low: 0,
            };
            for concern in concerns {
                match classify(concern.probability, concern.severity, mode) {
                    RiskTier::ExtremelyHigh => row.extremely_high += 1,
                    RiskTier::High => row.high += 1,
                    RiskTier::Medium => row.medium += 1,
                    RiskTier::Low => row.low += 1,
                }
            }
            row
        })
        .collect();
    TierCountTable {
        classification_mode: mode,
        rows,
    }
}

/// A labelled grid of counts. Cell `[i][j]` belongs to row label `i`, column
/// label `j`; the cell sum equals the number of concerns aggregated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeatmapGrid {
    pub row_axis: String,
    pub col_axis: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub counts: Vec<Vec<usize>>,
}

impl HeatmapGrid {
    /// Sum over every cell.
    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn row_total(&self, index: usize) -> usize {
        self.counts[index].iter().sum()
    }
}

/// Severity × probability counts over active concerns, both axes from most
/// to least severe — the layout of the assessment matrix.
pub fn matrix_grid(dataset: &AuditDataset) -> HeatmapGrid {
    let severities: Vec<SeverityLevel> = SeverityLevel::ALL.into_iter().rev().collect();
    let probabilities: Vec<ProbabilityLevel> = ProbabilityLevel::ALL.into_iter().rev().collect();
    let mut counts = vec![vec![0usize; probabilities.len()]; severities.len()];
    for concern in dataset.active() {
        let row = severities
            .iter()
            .position(|&s| s == concern.severity)
            .expect("severity covered");
        let col = probabilities
            .iter()
            .position(|&p| p == concern.probability)
            .expect("probability covered");
        counts[row][col] += 1;
    }
    HeatmapGrid {
        row_axis: "severity".to_string(),
        col_axis: "probability".to_string(),
        row_labels: severities.iter().map(|s| s.label().to_string()).collect(),
        col_labels: probabilities
            .iter()
            .map(|p| p.label().to_string())
            .collect(),
        counts,
    }
}

/// Root-cause × tier counts over active concerns, tiers under `mode`.
pub fn rootcause_heatmap(dataset: &AuditDataset, mode: ClassificationMode) -> HeatmapGrid {
    let categories = RootCauseCategory::ALL;
    let tiers = RiskTier::DESCENDING;
    let mut counts = vec![vec![0usize; tiers.len()]; categories.len()];
    for concern in dataset.active() {
        let row = categories
            .iter()
            .position(|&c| c == concern.root_cause.category)
            .expect("category covered");
        let tier = classify(concern.probability, concern.severity, mode);
        let col = tiers.iter().position(|&t| t == tier).expect("tier covered");
        counts[row][col] += 1;
    }
    HeatmapGrid {
        row_axis: "root_cause".to_string(),
        col_axis: "risk_tier".to_string(),
        row_labels: categories.iter().map(|c| c.label().to_string()).collect(),
        col_labels: tiers.iter().map(|t| t.label().to_string()).collect(),
        counts,
    }
}

/// The canonical comparative report: one metrics block per standard plus the
/// cells where the two classifiers disagree, so no report hides the
/// discrepancy.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub standards: Vec<MetricsSummary>,
    pub diff_cells: Vec<DiffCell>,
    pub tool_version: String,
}

impl MetricsReport {
    pub fn new(standards: Vec<MetricsSummary>) -> Self {
        MetricsReport {
            standards,
            diff_cells: classification_diff(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Serialize)]
struct StandardJson<'a> {
    standard: &'a str,
    n: usize,
    rsi: f64,
    avpi: f64,
    csgp_percent: f64,
    rcvs: &'a BTreeMap<RootCauseCategory, f64>,
    mean_rcvs: f64,
    k: usize,
    tier_counts: &'a BTreeMap<RiskTier, usize>,
    classification_mode: ClassificationMode,
}

#[derive(Serialize)]
struct MetricsReportJson<'a> {
    standards: Vec<StandardJson<'a>>,
    diff_cells: &'a [DiffCell],
    tool_version: &'a str,
}

fn metrics_json(report: &MetricsReport) -> MetricsReportJson<'_> {
    MetricsReportJson {
        standards: report
            .standards
            .iter()
            .map(|s| StandardJson {
                standard: &s.standard,
                n: s.n,
                rsi: s.rsi,
                avpi: s.avpi,
                csgp_percent: s.csgp_percent,
                rcvs: &s.rcvs_by_category,
                mean_rcvs: s.mean_rcvs,
                k: s.k,
                tier_counts: &s.tier_counts,
                classification_mode: s.classification_mode,
            })
            .collect(),
        diff_cells: &report.diff_cells,
        tool_version: &report.tool_version,
    }
}

/// Anything [`render`] can serialize.
#[derive(Debug, Clone, Copy)]
pub enum Artifact<'a> {
    Metrics(&'a MetricsReport),
    TierCounts(&'a TierCountTable),
    Heatmap(&'a HeatmapGrid),
    Alpha(&'a AlphaResult),
}

/// Serializes an artifact. SVG is only defined for heatmap grids; every
/// other combination of artifact and format is supported.
pub fn render(artifact: &Artifact<'_>, format: Format) -> Result<Vec<u8>> {
    let text = match (artifact, format) {
        (Artifact::Metrics(report), Format::Json) => json_text(&metrics_json(report))?,
        (Artifact::Metrics(report), Format::Csv) => metrics_csv(report),
        (Artifact::Metrics(report), Format::Markdown) => metrics_markdown(report),
        (Artifact::TierCounts(table), Format::Json) => json_text(table)?,
        (Artifact::TierCounts(table), Format::Csv) => tier_counts_csv(table),
        (Artifact::TierCounts(table), Format::Markdown) => tier_counts_markdown(table),
        (Artifact::Heatmap(grid), Format::Json) => json_text(grid)?,
        (Artifact::Heatmap(grid), Format::Csv) => heatmap_csv(grid),
        (Artifact::Heatmap(grid), Format::Markdown) => heatmap_markdown(grid),
        (Artifact::Heatmap(grid), Format::Svg) => heatmap_svg(grid),
        (Artifact::Alpha(result), Format::Json) => json_text(result)?,
        (Artifact::Alpha(result), Format::Csv) => alpha_csv(result),
        (Artifact::Alpha(result), Format::Markdown) => alpha_markdown(result),
        (_, Format::Svg) => {
            return Err(Error::UnsupportedFormat {
                format: "svg".to_string(),
            })
        }
    };
    Ok(text.into_bytes())
}

fn json_text<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::MalformedFile {
        reason: format!("serialization failed: {e}"),
    })?;
    text.push('\n');
    Ok(text)
}

fn csv_text(build: impl FnOnce(&mut csv::Writer<Vec<u8>>)) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    build(&mut writer);
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn metrics_markdown(report: &MetricsReport) -> String {
    let mut out = String::new();
    out.push_str("| Standard | RSI | AVPI | CSGP (%) | Total Concerns | RCVS |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for s in &report.standards {
        let _ = writeln!(
            out,
            "| {} | {:.2} | {:.2} | {:.2} | {} | {:.2} |",
            s.standard, s.rsi, s.avpi, s.csgp_percent, s.n, s.mean_rcvs
        );
    }
    if !report.diff_cells.is_empty() {
        out.push_str("\nClassifier disagreements (grid vs rules):\n\n");
        out.push_str("| Probability | Severity | Grid | Rules |\n|---|---|---|---|\n");
        for cell in &report.diff_cells {
            let _ = writeln!(
                out,
                "| {} ({}) | {} ({}) | {} | {} |",
                cell.probability.label(),
                cell.probability.value(),
                cell.severity.label(),
                cell.severity.value(),
                cell.grid.label(),
                cell.rules.label()
            );
        }
    }
    out
}

fn metrics_csv(report: &MetricsReport) -> String {
    csv_text(|writer| {
        let mut header = vec![
            "standard".to_string(),
            "n".to_string(),
            "rsi".to_string(),
            "avpi".to_string(),
            "csgp_percent".to_string(),
            "mean_rcvs".to_string(),
            "k".to_string(),
            "classification_mode".to_string(),
        ];
        for category in RootCauseCategory::ALL {
            header.push(format!("rcvs_{}", snake_case(category.label())));
        }
        for tier in RiskTier::DESCENDING {
            header.push(format!("tier_{}", snake_case(tier.label())));
        }
        writer.write_record(&header).expect("in-memory write");
        for s in &report.standards {
            let mut row = vec![
                s.standard.clone(),
                s.n.to_string(),
                s.rsi.to_string(),
                s.avpi.to_string(),
                s.csgp_percent.to_string(),
                s.mean_rcvs.to_string(),
                s.k.to_string(),
                s.classification_mode.to_string(),
            ];
            for category in RootCauseCategory::ALL {
                row.push(
                    s.rcvs_by_category
                        .get(&category)
                        .map(f64::to_string)
                        .unwrap_or_default(),
                );
            }
            for tier in RiskTier::DESCENDING {
                row.push(s.tier_counts.get(&tier).copied().unwrap_or(0).to_string());
            }
            writer.write_record(&row).expect("in-memory write");
        }
    })
}

fn tier_counts_markdown(table: &TierCountTable) -> String {
    let mut out = String::new();
    out.push_str("| Document | Total Concerns | Extremely High | High | Medium | Low |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for row in &table.rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            row.standard, row.total, row.extremely_high, row.high, row.medium, row.low
        );
    }
    out
}

fn tier_counts_csv(table: &TierCountTable) -> String {
    csv_text(|writer| {
        writer
            .write_record([
                "standard",
                "total",
                "extremely_high",
                "high",
                "medium",
                "low",
            ])
            .expect("in-memory write");
        for row in &table.rows {
            writer
                .write_record(&[
                    row.standard.clone(),
                    row.total.to_string(),
                    row.extremely_high.to_string(),
                    row.high.to_string(),
                    row.medium.to_string(),
                    row.low.to_string(),
                ])
                .expect("in-memory write");
        }
    })
}

fn heatmap_markdown(grid: &HeatmapGrid) -> String {
    let mut out = String::new();
    let _ = write!(out, "| {} \\ {} |", grid.row_axis, grid.col_axis);
    for label in &grid.col_labels {
        let _ = write!(out, " {label} |");
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in &grid.col_labels {
        out.push_str("---|");
    }
    out.push('\n');
    for (label, row) in grid.row_labels.iter().zip(&grid.counts) {
        let _ = write!(out, "| {label} |");
        for count in row {
            let _ = write!(out, " {count} |");
        }
        out.push('\n');
    }
    out
}

fn heatmap_csv(grid: &HeatmapGrid) -> String {
    csv_text(|writer| {
        let mut header = vec![format!("{}\\{}", grid.row_axis, grid.col_axis)];
        header.extend(grid.col_labels.iter().cloned());
        writer.write_record(&header).expect("in-memory write");
        for (label, row) in grid.row_labels.iter().zip(&grid.counts) {
            let mut record = vec![label.clone()];
            record.extend(row.iter().map(usize::to_string));
            writer.write_record(&record).expect("in-memory write");
        }
    })
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn heatmap_svg(grid: &HeatmapGrid) -> String {
    const CELL_W: usize = 88;
    const CELL_H: usize = 30;
    const TOP: usize = 46;
    const PAD: usize = 10;

    let label_chars = grid
        .row_labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(0)
        .max(grid.row_axis.len());
    let left = 24 + 7 * label_chars;
    let width = left + CELL_W * grid.col_labels.len() + PAD;
    let height = TOP + CELL_H * grid.row_labels.len() + PAD;
    let max = grid.counts.iter().flatten().copied().max().unwrap_or(0);
    let scale = max.max(1) as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"12\">"
    );
    let _ = writeln!(
        out,
        "<desc>{} by {} counts; cell fill-opacity = count / {max} (linear)</desc>",
        xml_escape(&grid.row_axis),
        xml_escape(&grid.col_axis)
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-weight=\"bold\">{}</text>",
        left - 8,
        TOP - 14,
        xml_escape(&grid.row_axis)
    );
    for (j, label) in grid.col_labels.iter().enumerate() {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            left + j * CELL_W + CELL_W / 2,
            TOP - 14,
            xml_escape(label)
        );
    }
    for (i, (label, row)) in grid.row_labels.iter().zip(&grid.counts).enumerate() {
        let y = TOP + i * CELL_H;
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            left - 8,
            y + CELL_H / 2 + 4,
            xml_escape(label)
        );
        for (j, count) in row.iter().enumerate() {
            let x = left + j * CELL_W;
            let opacity = *count as f64 / scale;
            let _ = writeln!(
                out,
                "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL_W}\" height=\"{CELL_H}\" fill=\"#2e6f9e\" fill-opacity=\"{opacity:.4}\" stroke=\"#b0b0b0\"/>"
            );
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"#111\">{count}</text>",
                x + CELL_W / 2,
                y + CELL_H / 2 + 4
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn alpha_markdown(result: &AlphaResult) -> String {
    let mut out = String::new();
    out.push_str(
        "| Alpha | Observed Disagreement | Expected Disagreement | Pairable Values | Degenerate |\n",
    );
    out.push_str("|---|---|---|---|---|\n");
    let _ = writeln!(
        out,
        "| {} | {} | {} | {} | {} |",
        result.alpha,
        result.observed_disagreement,
        result.expected_disagreement,
        result.pairable_values,
        result.degenerate
    );
    out
}

fn alpha_csv(result: &AlphaResult) -> String {
    csv_text(|writer| {
        writer
            .write_record([
                "alpha",
                "observed_disagreement",
                "expected_disagreement",
                "pairable_values",
                "degenerate",
            ])
            .expect("in-memory write");
        writer
            .write_record(&[
                result.alpha.to_string(),
                result.observed_disagreement.to_string(),
                result.expected_disagreement.to_string(),
                result.pairable_values.to_string(),
                result.degenerate.to_string(),
            ])
            .expect("in-memory write");
    })
}

fn snake_case(label: &str) -> String {
    label
        .to_ascii_lowercase()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Concern, ConcernStatus};

    fn concern(id: &str, standard: &str, cat: RootCauseCategory, p: u8, s: u8) -> Concern {
        Concern {
            id: id.to_string(),
            standard: standard.to_string(),
            section: String::new(),
            quoted_text: String::new(),
            description: String::new(),
            root_cause: cat.into(),
            probability: ProbabilityLevel::from_value(i64::from(p)).unwrap(),
            severity: SeverityLevel::from_value(i64::from(s)).unwrap(),
            status: ConcernStatus::Active,
            ballot: None,
        }
    }

    use RootCauseCategory::DataVulnerability as DV;

    #[test]
    fn tier_counts_single_extremely_high_concern() {
        let ds = AuditDataset::new(vec![concern("a", "STD", DV, 5, 4)]).unwrap();
        let table = tier_counts(&ds, ClassificationMode::Grid);
        assert_eq!(table.rows.len(), 1);
        let row = &table.rows[0];
        assert_eq!(
            (row.total, row.extremely_high, row.high, row.medium, row.low),
            (1, 1, 0, 0, 0)
        );
    }

    #[test]
    fn tier_counts_empty_dataset_is_empty_table() {
        let ds = AuditDataset::new(Vec::new()).unwrap();
        assert!(tier_counts(&ds, ClassificationMode::Grid).rows.is_empty());
    }

    #[test]
    fn matrix_grid_places_and_conserves() {
        let ds = AuditDataset::new(vec![concern("a", "STD", DV, 3, 2)]).unwrap();
        let grid = matrix_grid(&ds);
        assert_eq!(grid.total(), 1);
        // Severity rows descend from Catastrophic, probability columns from
        // Frequent; severity 2 is row 2, probability 3 is column 2.
        assert_eq!(grid.counts[2][2], 1);

        let many = AuditDataset::new(
            (0..40)
                .map(|i| {
                    concern(
                        &format!("c{i}"),
                        "STD",
                        DV,
                        1 + (i % 5) as u8,
                        1 + (i % 4) as u8,
                    )
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(matrix_grid(&many).total(), 40);
    }

    #[test]
    fn rootcause_heatmap_row_sums_match_category_counts() {
        let ds = AuditDataset::new(vec![
            concern("a", "STD", DV, 5, 4),
            concern("b", "STD", DV, 1, 1),
            concern("c", "STD", RootCauseCategory::UnderDefinedProcess, 3, 3),
        ])
        .unwrap();
        let grid = rootcause_heatmap(&ds, ClassificationMode::Grid);
        assert_eq!(grid.total(), 3);
        assert_eq!(grid.row_total(0), 2); // data vulnerability row
        assert_eq!(grid.row_total(2), 1); // under-defined process row
        assert_eq!(grid.row_total(1) + grid.row_total(3), 0);
    }

    #[test]
    fn render_is_deterministic_and_json_round_trips() {
        let ds = AuditDataset::new(vec![
            concern("a", "STD", DV, 5, 4),
            concern("b", "STD", RootCauseCategory::AmbiguousSpecification, 2, 2),
        ])
        .unwrap();
        let summaries =
            crate::metrics::summarize(&ds, true, ClassificationMode::Grid).unwrap();
        let report = MetricsReport::new(summaries);
        let a = render(&Artifact::Metrics(&report), Format::Json).unwrap();
        let b = render(&Artifact::Metrics(&report), Format::Json).unwrap();
        assert_eq!(a, b);

        let value: serde_json::Value = serde_json::from_slice(&a).unwrap();
        assert_eq!(value["standards"][0]["standard"], "STD");
        assert_eq!(value["standards"][0]["n"], 2);
        assert_eq!(value["standards"][0]["tier_counts"]["extremely_high"], 1);
        assert_eq!(value["diff_cells"][0]["rules"], "high");
        assert!(value["tool_version"].is_string());
    }

    #[test]
    fn markdown_rounds_to_two_decimals_json_keeps_precision() {
        let ds = AuditDataset::new(vec![
            concern("a", "STD", DV, 4, 3), // rs 12
            concern("b", "STD", DV, 1, 1), // rs 1
            concern("c", "STD", DV, 1, 2), // rs 2
        ])
        .unwrap();
        let summaries =
            crate::metrics::summarize(&ds, false, ClassificationMode::Grid).unwrap();
        let report = MetricsReport::new(summaries);
        let md = String::from_utf8(
            render(&Artifact::Metrics(&report), Format::Markdown).unwrap(),
        )
        .unwrap();
        // rsi = 5, csgp = 33.3333... (1 of 3 high under the rules)
        assert!(md.contains("| overall | 5.00 | 1.00 | 33.33 | 3 | 1.00 |"), "{md}");

        let json = String::from_utf8(
            render(&Artifact::Metrics(&report), Format::Json).unwrap(),
        )
        .unwrap();
        assert!(json.contains("33.33333333333333"), "{json}");
    }

    #[test]
    fn svg_is_only_for_heatmaps() {
        let ds = AuditDataset::new(vec![concern("a", "STD", DV, 5, 4)]).unwrap();
        let grid = matrix_grid(&ds);
        let svg =
            String::from_utf8(render(&Artifact::Heatmap(&grid), Format::Svg).unwrap()).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("fill-opacity"));

        let table = tier_counts(&ds, ClassificationMode::Grid);
        assert!(matches!(
            render(&Artifact::TierCounts(&table), Format::Svg),
            Err(Error::UnsupportedFormat { .. })
        ));
    }

    #[test]
    fn heatmap_csv_and_markdown_carry_all_cells() {
        let ds = AuditDataset::new(vec![
            concern("a", "STD", DV, 5, 4),
            concern("b", "STD", DV, 5, 4),
            concern("c", "STD", DV, 1, 1),
        ])
        .unwrap();
        let grid = matrix_grid(&ds);
        let csv_out =
            String::from_utf8(render(&Artifact::Heatmap(&grid), Format::Csv).unwrap()).unwrap();
        assert!(csv_out.lines().count() == 5); // header + 4 severity rows
        let md =
            String::from_utf8(render(&Artifact::Heatmap(&grid), Format::Markdown).unwrap())
                .unwrap();
        assert!(md.contains("| Catastrophic | 2 |"));
    }
}
