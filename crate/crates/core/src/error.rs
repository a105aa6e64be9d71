use thiserror::Error;

/// Errors produced by parsing, dataset construction, and the metric computations.
#[derive(Debug, Error)]
pub enum Error {
    /// A probability or severity cell matched no label, alias, or in-range integer.
    #[error("unknown {scale} value `{raw}`")]
    UnknownScaleValue { scale: &'static str, raw: String },

    /// A categorical cell (root cause, status, verdict) matched no known label.
    #[error("unknown {field} label `{raw}`")]
    UnknownLabel { field: &'static str, raw: String },

    /// Two concerns in one dataset share an id.
    #[error("duplicate concern id `{id}`")]
    DuplicateId { id: String },

    /// Two rows in a coder table share an item id.
    #[error("duplicate item id `{id}` in coder table")]
    DuplicateItemId { id: String },

    /// The input is not a readable delimited file with the expected header.
    #[error("malformed file: {reason}")]
    MalformedFile { reason: String },

    /// A metric was requested over zero active concerns.
    #[error("dataset contains no active concerns")]
    EmptyDataset,

    /// Share-based metrics are undefined when the total risk score is zero.
    #[error("total risk score is zero")]
    ZeroTotalRisk,

    /// No item in the coder table carries two or more codes to pair.
    #[error("no item has two or more codes to pair")]
    InsufficientData,

    #[error("consensus threshold {value} outside (0, 1]")]
    InvalidThreshold { value: f64 },

    #[error("expert panel size must be at least 1")]
    InvalidPanelSize,

    #[error("unsupported output format `{format}` for this artifact")]
    UnsupportedFormat { format: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
