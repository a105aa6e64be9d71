//! Quantitative security-gap analysis over compliance-audit concern datasets.
//!
//! The pipeline: [`ingest`] parses concern and coder-table CSVs into
//! [`model`] types; [`consensus`] applies expert-validation outcomes;
//! [`riskmatrix`] classifies each concern into a four-tier impact level;
//! [`metrics`] computes the comparative numbers (risk severity index,
//! per-category vulnerability shares, attack-vector concentration, and the
//! compliance-security gap percentage); [`reliability`] measures inter-coder
//! agreement; [`report`] turns everything into tables, grids, and serialized
//! documents.
//!
//! Everything is deterministic: equal inputs (and seeds) produce equal
//! outputs, byte for byte.

pub mod consensus;
pub mod error;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod reliability;
pub mod report;
pub mod riskmatrix;
pub mod synth;

pub use error::{Error, Result};
