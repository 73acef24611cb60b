use thiserror::Error;

use crate::MAX_DIM;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} exceeds the truth-table limit of {MAX_DIM}")]
    DimensionTooLarge(usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("coordinate {k} out of range 1..={n}")]
    CoordinateOutOfRange { k: usize, n: usize },

    #[error("class violation: {operand} not {requirement}")]
    ClassViolation {
        operand: &'static str,
        requirement: &'static str,
    },

    #[error("function has nonzero mean")]
    NonzeroMean,

    #[error("degenerate measure: {0}")]
    DegenerateMeasure(String),

    #[error("negative value at point {0:#b}")]
    NegativeValue(u32),

    /// A request exceeds an enumeration or solver limit.
    #[error("resource limit: {0}")]
    LimitExceeded(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unknown checker `{0}`")]
    UnknownChecker(String),

    /// An internal cross-check between two independent computations failed.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
