use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by triangle ingestion, registry lookups and criterion checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {msg}")]
    CsvFormat {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}:{line}: duplicate entry ({n},{k}) with conflicting values {existing} and {new}")]
    CsvConflict {
        path: PathBuf,
        line: usize,
        n: i64,
        k: i64,
        existing: String,
        new: String,
    },

    #[error("unknown triangle `{0}` (builtins: binomial, sun_a)")]
    UnknownTriangle(String),

    #[error("unknown weight sequence `{0}` (builtins: central_binomial, catalan, ones)")]
    UnknownWeights(String),

    #[error("unknown named polynomial `{0}`")]
    UnknownNamedPoly(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("triangle `{name}` stores rows only up to n={stored}, but the check needs rows up to n={needed}")]
    TriangleTooSmall {
        name: String,
        stored: i64,
        needed: i64,
    },

    #[error("negative entry at index {index}: {value}")]
    NegativeEntry { index: usize, value: String },

    #[error("invalid report JSON: {0}")]
    Json(#[from] serde_json::Error),
}
