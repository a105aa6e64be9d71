//! Parsing and validation of delimited input files.
//!
//! Two schemas are understood:
//!
//! * `ConcernCSV` — UTF-8, comma-separated, RFC 4180 quoting, header
//!   `id,standard,section,quoted_text,description,root_cause,probability,severity`
//!   plus an optional `status` column and any number of `expert_<id>` verdict
//!   columns. Scale cells accept labels, matrix letters/numerals, or numbers.
//! * `CoderCSV` — header `item_id,<coder_id>,...`; cells are nominal codes,
//!   blank meaning missing.
//!
//! Parsing is strict per row but tolerant per file: a row with any
//! error-level problem is dropped and reported, the rest of the file still
//! loads. Structural problems (missing header columns, unreadable input)
//! fail the whole parse.

use std::collections::{BTreeMap, BTreeSet};
use std::io;

use serde::Serialize;

use crate::consensus::{ExpertBallot, Verdict};
use crate::error::{Error, Result};
use crate::model::{
    AuditDataset, Concern, ConcernStatus, ProbabilityLevel, RootCause, RootCauseCategory,
    SeverityLevel,
};

/// Columns every concern file must carry, in canonical order.
pub const REQUIRED_COLUMNS: [&str; 8] = [
    "id",
    "standard",
    "section",
    "quoted_text",
    "description",
    "root_cause",
    "probability",
    "severity",
];

const STATUS_COLUMN: &str = "status";
const EXPERT_PREFIX: &str = "expert_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticLevel {
    /// Tolerated; the row (or column) still loads.
    Warning,
    /// The affected row is not accepted.
    Error,
}

/// One problem found while parsing, tied to a file line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// 1-based line in the input file (the header is line 1).
    pub line: u64,
    /// Column the problem belongs to, empty for row-level problems.
    pub field: String,
    pub message: String,
    pub level: DiagnosticLevel,
}

/// What happened while parsing a concern file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub rows_read: usize,
    pub rows_accepted: usize,
    pub diagnostics: Vec<Diagnostic>,
}

impl IngestReport {
    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics
            .iter()
            .filter(|d| d.level == DiagnosticLevel::Error)
    }
}

/// Knobs for [`parse_concerns`].
#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Header renames applied before schema matching, e.g. a spreadsheet
    /// export column `Probability of Occurrence` mapped to `probability`.
    /// Keys match the raw header cell exactly (after trimming).
    pub column_map: BTreeMap<String, String>,
}

struct Layout {
    id: usize,
    standard: usize,
    section: usize,
    quoted_text: usize,
    description: usize,
    root_cause: usize,
    probability: usize,
    severity: usize,
    status: Option<usize>,
    /// (expert id, column index), in header order.
    experts: Vec<(String, usize)>,
}

fn resolve_layout(
    headers: &csv::StringRecord,
    options: &ParseOptions,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<Layout> {
    let mut named: BTreeMap<&str, usize> = BTreeMap::new();
    let mut canonical: Vec<String> = Vec::with_capacity(headers.len());
    let mut experts: Vec<(String, usize)> = Vec::new();
    let mut expert_ids = BTreeSet::new();

    for (index, cell) in headers.iter().enumerate() {
        let raw = cell.trim();
        let mapped = options
            .column_map
            .get(raw)
            .map(String::as_str)
            .unwrap_or(raw);
        let lower = mapped.trim().to_ascii_lowercase();
        canonical.push(lower.clone());

        if REQUIRED_COLUMNS.contains(&lower.as_str()) || lower == STATUS_COLUMN {
            let name = REQUIRED_COLUMNS
                .iter()
                .copied()
                .chain([STATUS_COLUMN])
                .find(|c| *c == lower)
                .expect("matched above");
            if named.insert(name, index).is_some() {
                return Err(Error::MalformedFile {
                    reason: format!("duplicate column `{name}`"),
                });
            }
        } else if lower.starts_with(EXPERT_PREFIX) {
            // Keep the id's original case; only the prefix match is
            // case-insensitive.
            let id = mapped.trim()[EXPERT_PREFIX.len()..].to_string();
            if id.is_empty() {
                diagnostics.push(Diagnostic {
                    line: 1,
                    field: raw.to_string(),
                    message: "expert column with empty id ignored".to_string(),
                    level: DiagnosticLevel::Warning,
                });
            } else if !expert_ids.insert(id.clone()) {
                return Err(Error::MalformedFile {
                    reason: format!("duplicate expert column `{mapped}`"),
                });
            } else {
                experts.push((id, index));
            }
        } else {
            diagnostics.push(Diagnostic {
                line: 1,
                field: raw.to_string(),
                message: "unknown column ignored".to_string(),
                level: DiagnosticLevel::Warning,
            });
        }
    }

    for required in REQUIRED_COLUMNS {
        if !named.contains_key(required) {
            return Err(Error::MalformedFile {
                reason: format!("missing required column `{required}`"),
            });
        }
    }
    let _ = canonical;

    Ok(Layout {
        id: named["id"],
        standard: named["standard"],
        section: named["section"],
        quoted_text: named["quoted_text"],
        description: named["description"],
        root_cause: named["root_cause"],
        probability: named["probability"],
        severity: named["severity"],
        status: named.get(STATUS_COLUMN).copied(),
        experts,
    })
}

/// Parses a concern file. Every accepted row becomes an active (unless its
/// status cell says otherwise) concern with normalized scales; everything
/// wrong with the input ends up in the report.
pub fn parse_concerns<R: io::Read>(
    reader: R,
    options: &ParseOptions,
) -> Result<(AuditDataset, IngestReport)> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(reader);

    let headers = csv_reader
        .headers()
        .map_err(|e| Error::MalformedFile {
            reason: e.to_string(),
        })?
        .clone();
    if headers.is_empty() || (headers.len() == 1 && headers[0].trim().is_empty()) {
        return Err(Error::MalformedFile {
            reason: "missing header row".to_string(),
        });
    }

    let mut diagnostics = Vec::new();
    let layout = resolve_layout(&headers, options, &mut diagnostics)?;

    let mut rows_read = 0usize;
    let mut rows_accepted = 0usize;
    let mut concerns: Vec<Concern> = Vec::new();
    let mut seen_ids: BTreeSet<String> = BTreeSet::new();

    for record in csv_reader.records() {
        rows_read += 1;
        let record = match record {
            Ok(record) => record,
            Err(err) => {
                let line = err.position().map_or(0, csv::Position::line);
                diagnostics.push(Diagnostic {
                    line,
                    field: String::new(),
                    message: format!("unreadable row: {err}"),
                    level: DiagnosticLevel::Error,
                });
                continue;
            }
        };
        let line = record.position().map_or(0, csv::Position::line);
        let mut row_diags: Vec<Diagnostic> = Vec::new();
        let mut fail = |row_diags: &mut Vec<Diagnostic>, field: &str, message: String| {
            row_diags.push(Diagnostic {
                line,
                field: field.to_string(),
                message,
                level: DiagnosticLevel::Error,
            });
        };

        if record.len() != headers.len() {
            fail(
                &mut row_diags,
                "",
                format!("expected {} fields, found {}", headers.len(), record.len()),
            );
            diagnostics.extend(row_diags);
            continue;
        }
        let cell = |index: usize| record.get(index).unwrap_or("");

        let id = cell(layout.id).trim().to_string();
        if id.is_empty() {
            fail(&mut row_diags, "id", "missing required value".to_string());
        }
        let standard = cell(layout.standard).trim().to_string();
        if standard.is_empty() {
            fail(
                &mut row_diags,
                "standard",
                "missing required value".to_string(),
            );
        }

        let mut parse_cell = |row_diags: &mut Vec<Diagnostic>,
                              field: &str,
                              raw: &str|
         -> Option<()> {
            if raw.trim().is_empty() {
                fail(row_diags, field, "missing required value".to_string());
                return None;
            }
            Some(())
        };

        let root_cause = parse_cell(&mut row_diags, "root_cause", cell(layout.root_cause))
            .and_then(|()| match RootCauseCategory::parse(cell(layout.root_cause)) {
                Ok(cat) => Some(cat),
                Err(err) => {
                    fail(&mut row_diags, "root_cause", err.to_string());
                    None
                }
            });
        let probability = parse_cell(&mut row_diags, "probability", cell(layout.probability))
            .and_then(|()| match ProbabilityLevel::parse(cell(layout.probability)) {
                Ok(level) => Some(level),
                Err(err) => {
                    fail(&mut row_diags, "probability", err.to_string());
                    None
                }
            });
        let severity = parse_cell(&mut row_diags, "severity", cell(layout.severity))
            .and_then(|()| match SeverityLevel::parse(cell(layout.severity)) {
                Ok(level) => Some(level),
                Err(err) => {
                    fail(&mut row_diags, "severity", err.to_string());
                    None
                }
            });

        let status = match layout.status {
            Some(index) if !cell(index).trim().is_empty() => {
                match ConcernStatus::parse(cell(index)) {
                    Ok(status) => Some(status),
                    Err(err) => {
                        fail(&mut row_diags, "status", err.to_string());
                        None
                    }
                }
            }
            _ => Some(ConcernStatus::Active),
        };

        let mut verdicts: BTreeMap<String, Verdict> = BTreeMap::new();
        for (expert_id, index) in &layout.experts {
            let raw = cell(*index).trim();
            if raw.is_empty() {
                continue;
            }
            match Verdict::parse(raw) {
                Ok(verdict) => {
                    verdicts.insert(expert_id.clone(), verdict);
                }
                Err(err) => {
                    fail(
                        &mut row_diags,
                        &format!("{EXPERT_PREFIX}{expert_id}"),
                        err.to_string(),
                    );
                }
            }
        }

        if !row_diags.is_empty() {
            diagnostics.extend(row_diags);
            continue;
        }
        if !seen_ids.insert(id.clone()) {
            diagnostics.push(Diagnostic {
                line,
                field: "id".to_string(),
                message: format!("duplicate concern id `{id}`"),
                level: DiagnosticLevel::Error,
            });
            continue;
        }

        rows_accepted += 1;
        concerns.push(Concern {
            id,
            standard,
            section: cell(layout.section).to_string(),
            quoted_text: cell(layout.quoted_text).to_string(),
            description: cell(layout.description).to_string(),
            root_cause: RootCause::new(root_cause.expect("checked above")),
            probability: probability.expect("checked above"),
            severity: severity.expect("checked above"),
            status: status.expect("checked above"),
            ballot: (!verdicts.is_empty()).then(|| ExpertBallot::new(verdicts)),
        });
    }

    let dataset = AuditDataset::new(concerns)?;
    Ok((
        dataset,
        IngestReport {
            rows_read,
            rows_accepted,
            diagnostics,
        },
    ))
}

/// Serializes a dataset back to the canonical concern CSV. Parsing the output
/// yields an equal dataset, with one caveat: a ballot with zero verdicts is
/// indistinguishable from no ballot.
pub fn write_concerns(dataset: &AuditDataset) -> String {
    let mut expert_ids: BTreeSet<&str> = BTreeSet::new();
    for concern in dataset.concerns() {
        if let Some(ballot) = &concern.ballot {
            expert_ids.extend(ballot.verdicts.keys().map(String::as_str));
        }
    }

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = REQUIRED_COLUMNS.iter().map(|c| (*c).to_string()).collect();
    header.push(STATUS_COLUMN.to_string());
    header.extend(expert_ids.iter().map(|id| format!("{EXPERT_PREFIX}{id}")));
    writer.write_record(&header).expect("in-memory write");

    for concern in dataset.concerns() {
        let mut row = vec![
            concern.id.clone(),
            concern.standard.clone(),
            concern.section.clone(),
            concern.quoted_text.clone(),
            concern.description.clone(),
            concern.root_cause.category.label().to_string(),
            concern.probability.label().to_string(),
            concern.severity.label().to_string(),
            concern.status.as_str().to_string(),
        ];
        for id in &expert_ids {
            row.push(
                concern
                    .ballot
                    .as_ref()
                    .and_then(|b| b.verdicts.get(*id))
                    .map(|v| v.as_str().to_string())
                    .unwrap_or_default(),
            );
        }
        writer.write_record(&row).expect("in-memory write");
    }

    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Items × coders grid of nominal codes, with missing cells represented
/// explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoderTable {
    item_ids: Vec<String>,
    coder_ids: Vec<String>,
    codes: Vec<Vec<Option<String>>>,
}

impl CoderTable {
    /// Builds a table, enforcing that the grid is `items × coders` and that
    /// item and coder ids are unique.
    pub fn new(
        item_ids: Vec<String>,
        coder_ids: Vec<String>,
        codes: Vec<Vec<Option<String>>>,
    ) -> Result<Self> {
        if codes.len() != item_ids.len() {
            return Err(Error::MalformedFile {
                reason: format!(
                    "code grid has {} rows for {} items",
                    codes.len(),
                    item_ids.len()
                ),
            });
        }
        for (index, row) in codes.iter().enumerate() {
            if row.len() != coder_ids.len() {
                return Err(Error::MalformedFile {
                    reason: format!(
                        "row {} has {} cells for {} coders",
                        index + 1,
                        row.len(),
                        coder_ids.len()
                    ),
                });
            }
        }
        let mut seen = BTreeSet::new();
        for id in &item_ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateItemId { id: id.clone() });
            }
        }
        let mut seen = BTreeSet::new();
        for id in &coder_ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::MalformedFile {
                    reason: format!("duplicate coder id `{id}`"),
                });
            }
        }
        Ok(CoderTable {
            item_ids,
            coder_ids,
            codes,
        })
    }

    pub fn item_ids(&self) -> &[String] {
        &self.item_ids
    }

    pub fn coder_ids(&self) -> &[String] {
        &self.coder_ids
    }

    /// Rows in item order; each row has one cell per coder.
    pub fn codes(&self) -> &[Vec<Option<String>>] {
        &self.codes
    }
}

/// Parses a coder table. Blank cells become missing values; row length must
/// match the header exactly.
pub fn parse_coder_table<R: io::Read>(reader: R) -> Result<CoderTable> {
    let mut csv_reader = csv::ReaderBuilder::new().from_reader(reader);
    let headers = csv_reader
        .headers()
        .map_err(|e| Error::MalformedFile {
            reason: e.to_string(),
        })?
        .clone();

    let mut cells = headers.iter();
    match cells.next() {
        Some(first) if first.trim().eq_ignore_ascii_case("item_id") => {}
        _ => {
            return Err(Error::MalformedFile {
                reason: "first column must be `item_id`".to_string(),
            })
        }
    }
    let coder_ids: Vec<String> = cells.map(|c| c.trim().to_string()).collect();
    if coder_ids.is_empty() {
        return Err(Error::MalformedFile {
            reason: "no coder columns".to_string(),
        });
    }
    if coder_ids.iter().any(String::is_empty) {
        return Err(Error::MalformedFile {
            reason: "empty coder id in header".to_string(),
        });
    }

    let mut item_ids = Vec::new();
    let mut codes = Vec::new();
    for record in csv_reader.records() {
        let record = record.map_err(|e| Error::MalformedFile {
            reason: e.to_string(),
        })?;
        let item_id = record.get(0).unwrap_or("").trim().to_string();
        if item_id.is_empty() {
            let line = record.position().map_or(0, csv::Position::line);
            return Err(Error::MalformedFile {
                reason: format!("empty item id on line {line}"),
            });
        }
        let row: Vec<Option<String>> = (1..record.len())
            .map(|i| {
                let cell = record.get(i).unwrap_or("").trim();
                (!cell.is_empty()).then(|| cell.to_string())
            })
            .collect();
        item_ids.push(item_id);
        codes.push(row);
    }

    CoderTable::new(item_ids, coder_ids, codes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(input: &str) -> (AuditDataset, IngestReport) {
        parse_concerns(input.as_bytes(), &ParseOptions::default()).unwrap()
    }

    const HEADER: &str = "id,standard,section,quoted_text,description,root_cause,probability,severity";

    #[test]
    fn accepts_and_normalizes_a_plain_row() {
        let input = format!(
            "{HEADER}\nC1,NIST,3.2,\"some, quoted text\",desc,Under-defined Process,Likely,Critical\n"
        );
        let (ds, report) = parse(&input);
        assert_eq!(report.rows_read, 1);
        assert_eq!(report.rows_accepted, 1);
        assert!(report.diagnostics.is_empty());
        let c = &ds.concerns()[0];
        assert_eq!(c.probability.value(), 4);
        assert_eq!(c.severity.value(), 3);
        assert_eq!(c.risk_score(), 12);
        assert_eq!(c.quoted_text, "some, quoted text");
        assert_eq!(c.status, ConcernStatus::Active);
        assert!(c.ballot.is_none());
    }

    #[test]
    fn rejects_unknown_probability_label() {
        let input = format!("{HEADER}\nC1,NIST,1,q,d,Data Vulnerability,Sometimes,Critical\n");
        let (ds, report) = parse(&input);
        assert!(ds.is_empty());
        assert_eq!(report.rows_read, 1);
        assert_eq!(report.rows_accepted, 0);
        let diag = &report.diagnostics[0];
        assert_eq!(diag.level, DiagnosticLevel::Error);
        assert_eq!(diag.field, "probability");
        assert!(diag.message.contains("Sometimes"));
    }

    #[test]
    fn empty_file_with_header_is_an_empty_dataset() {
        let (ds, report) = parse(&format!("{HEADER}\n"));
        assert!(ds.is_empty());
        assert_eq!(report.rows_read, 0);
        assert!(report.diagnostics.is_empty());
    }

    #[test]
    fn missing_required_column_is_malformed() {
        let result = parse_concerns(
            "id,standard,section,quoted_text,description,root_cause,probability\n".as_bytes(),
            &ParseOptions::default(),
        );
        assert!(
            matches!(result, Err(Error::MalformedFile { reason }) if reason.contains("severity"))
        );
    }

    #[test]
    fn empty_input_is_malformed() {
        assert!(matches!(
            parse_concerns("".as_bytes(), &ParseOptions::default()),
            Err(Error::MalformedFile { .. })
        ));
    }

    #[test]
    fn duplicate_ids_are_rejected_per_row() {
        let input = format!(
            "{HEADER}\nC1,A,1,q,d,Data Vulnerability,1,1\nC1,A,2,q,d,Data Vulnerability,2,2\n"
        );
        let (ds, report) = parse(&input);
        assert_eq!(ds.len(), 1);
        assert_eq!(report.rows_read, 2);
        assert_eq!(report.rows_accepted, 1);
        assert!(report.has_errors());
        assert!(report.errors().any(|d| d.message.contains("duplicate")));
    }

    #[test]
    fn unknown_columns_warn_but_load() {
        let input = format!("{HEADER},notes\nC1,A,1,q,d,Data Vulnerability,1,1,whatever\n");
        let (ds, report) = parse(&input);
        assert_eq!(ds.len(), 1);
        assert!(!report.has_errors());
        assert_eq!(report.diagnostics.len(), 1);
        assert_eq!(report.diagnostics[0].level, DiagnosticLevel::Warning);
        assert_eq!(report.diagnostics[0].field, "notes");
    }

    #[test]
    fn scale_aliases_accepted() {
        let input = format!(
            "{HEADER}\nC1,A,1,q,d,ambiguous_specification,B,III\nC2,A,1,q,d,Data Vulnerability,5,Marginal\n"
        );
        let (ds, report) = parse(&input);
        assert!(!report.has_errors());
        assert_eq!(ds.concerns()[0].probability.value(), 4);
        assert_eq!(ds.concerns()[0].severity.value(), 2);
        assert_eq!(ds.concerns()[1].probability.value(), 5);
        assert_eq!(ds.concerns()[1].severity, SeverityLevel::Moderate);
    }

    #[test]
    fn status_and_expert_columns() {
        let input = format!(
            "{HEADER},status,expert_1,expert_2\nC1,A,1,q,d,Data Vulnerability,1,1,discarded,confirmed,rejected\nC2,A,1,q,d,Data Vulnerability,1,1,,,\n"
        );
        let (ds, report) = parse(&input);
        assert!(!report.has_errors());
        let c1 = &ds.concerns()[0];
        assert_eq!(c1.status, ConcernStatus::Discarded);
        let ballot = c1.ballot.as_ref().unwrap();
        assert_eq!(ballot.verdicts["1"], Verdict::Confirmed);
        assert_eq!(ballot.verdicts["2"], Verdict::Rejected);
        let c2 = &ds.concerns()[1];
        assert_eq!(c2.status, ConcernStatus::Active);
        assert!(c2.ballot.is_none());
    }

    #[test]
    fn bad_verdict_rejects_row() {
        let input = format!(
            "{HEADER},expert_1\nC1,A,1,q,d,Data Vulnerability,1,1,maybe\n"
        );
        let (ds, report) = parse(&input);
        assert!(ds.is_empty());
        assert!(report.has_errors());
        assert!(report.errors().any(|d| d.field == "expert_1"));
    }

    #[test]
    fn short_rows_are_rejected_with_field_count_message() {
        let input = format!("{HEADER}\nC1,A,1\n");
        let (ds, report) = parse(&input);
        assert!(ds.is_empty());
        assert!(report
            .errors()
            .any(|d| d.message.contains("expected 8 fields")));
    }

    #[test]
    fn column_map_renames_headers() {
        let mut options = ParseOptions::default();
        options
            .column_map
            .insert("Likelihood".to_string(), "probability".to_string());
        let input =
            "id,standard,section,quoted_text,description,root_cause,Likelihood,severity\nC1,A,1,q,d,Data Vulnerability,Frequent,1\n";
        let (ds, report) = parse_concerns(input.as_bytes(), &options).unwrap();
        assert!(!report.has_errors());
        assert_eq!(ds.concerns()[0].probability.value(), 5);
    }

    #[test]
    fn diagnostics_carry_file_lines() {
        let input = format!(
            "{HEADER}\nC1,A,1,q,d,Data Vulnerability,1,1\nC2,A,1,q,d,Data Vulnerability,bogus,1\n"
        );
        let (_, report) = parse(&input);
        let diag = report.errors().next().unwrap();
        assert_eq!(diag.line, 3);
    }

    #[test]
    fn write_then_parse_round_trips() {
        let input = format!(
            "{HEADER},status,expert_a,expert_b\nC1,A,1.2,\"quote, with comma\",\"line\nbreak\",Under-defined Process,Likely,Critical,active,confirmed,\nC2,B,2,plain \"\"quoted\"\",d,Ambiguous Specification,1,IV,discarded,,rejected\n"
        );
        let (ds, report) = parse(&input);
        assert!(!report.has_errors());
        let written = write_concerns(&ds);
        let (reparsed, report2) =
            parse_concerns(written.as_bytes(), &ParseOptions::default()).unwrap();
        assert!(!report2.has_errors());
        assert_eq!(ds, reparsed);
    }

    #[test]
    fn parsing_is_deterministic() {
        let input = format!(
            "{HEADER}\nC1,A,1,q,d,Data Vulnerability,2,2\nC2,A,1,q,d,Ambiguous Specification,bad,2\n"
        );
        let (ds1, r1) = parse(&input);
        let (ds2, r2) = parse(&input);
        assert_eq!(ds1, ds2);
        assert_eq!(r1, r2);
    }

    #[test]
    fn coder_table_parses_codes_and_missing_cells() {
        let input = "item_id,c1,c2\ni1,1,1\ni2,1,\n";
        let table = parse_coder_table(input.as_bytes()).unwrap();
        assert_eq!(table.item_ids(), ["i1", "i2"]);
        assert_eq!(table.coder_ids(), ["c1", "c2"]);
        assert_eq!(table.codes()[0], vec![Some("1".into()), Some("1".into())]);
        assert_eq!(table.codes()[1], vec![Some("1".into()), None]);
    }

    #[test]
    fn coder_table_rejects_duplicate_items() {
        let input = "item_id,c1,c2\ni1,1,1\ni1,0,0\n";
        assert!(matches!(
            parse_coder_table(input.as_bytes()),
            Err(Error::DuplicateItemId { id }) if id == "i1"
        ));
    }

    #[test]
    fn coder_table_requires_item_id_header() {
        assert!(matches!(
            parse_coder_table("thing,c1\nx,1\n".as_bytes()),
            Err(Error::MalformedFile { .. })
        ));
        assert!(matches!(
            parse_coder_table("item_id\n".as_bytes()),
            Err(Error::MalformedFile { .. })
        ));
    }

    #[test]
    fn coder_table_rejects_uneven_rows() {
        let input = "item_id,c1,c2\ni1,1\n";
        assert!(matches!(
            parse_coder_table(input.as_bytes()),
            Err(Error::MalformedFile { .. })
        ));
    }
}
