use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by graph ingestion, model fitting, and the test pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: expected two whitespace-separated node tokens, got {content:?}")]
    MalformedEdgeLine {
        path: PathBuf,
        line: usize,
        content: String,
    },

    #[error("no edges in {path}")]
    NoEdges { path: PathBuf },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix not symmetric at ({i},{j}): {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },

    #[error("adjacency entry ({i},{j}) = {value} is not 0 or 1")]
    NotBinary { i: usize, j: usize, value: f64 },

    #[error("adjacency diagonal entry ({i},{i}) = {value} must be 0")]
    NonzeroDiagonal { i: usize, value: f64 },

    #[error("non-finite entry at ({i},{j})")]
    NonFinite { i: usize, j: usize },

    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("label {label} at position {index} outside 1..={k}")]
    LabelOutOfRange {
        index: usize,
        label: usize,
        k: usize,
    },

    #[error("community {k} is empty")]
    EmptyCommunity { k: usize },

    #[error("community {k} has a single member, within-community density is undefined")]
    SingletonCommunity { k: usize },

    #[error("probability entry ({a},{b}) = {value} outside open interval (0,1)")]
    ProbabilityOutOfRange { a: usize, b: usize, value: f64 },

    #[error("community count must be at least 1")]
    KZero,

    #[error("community count {k} exceeds point count {n}")]
    KTooLarge { k: usize, n: usize },

    #[error("k0 = {k0} infeasible for this graph: {source}")]
    InfeasibleK {
        k0: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("quantile requires p strictly inside (0,1), got {p}")]
    QuantileDomain { p: f64 },

    #[error("significance level must be in (0,1), got {alpha}")]
    AlphaDomain { alpha: f64 },

    #[error("invalid experiment config: {reason}")]
    InvalidConfig { reason: String },
}

impl Error {
    /// True when the error reports a hypothesized community count that cannot
    /// be fitted to the graph (empty or singleton fitted community).
    pub fn is_infeasible_k(&self) -> bool {
        matches!(self, Error::InfeasibleK { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
