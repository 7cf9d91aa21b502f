use std::path::PathBuf;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("graph has loops; operation requires a simple graph")]
    LoopsPresent,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension {requested} exceeds the maximum of {max}")]
    DimensionOverflow { requested: usize, max: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}
