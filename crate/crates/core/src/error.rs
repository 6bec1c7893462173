use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps these onto exit codes: [`Error::Parse`] is a parse failure,
/// everything else is a precondition failure. Mathematical mismatches are
/// reported in result values, never as errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("({m}, {n}) lies in the excluded region (real root c = 1)")]
    ExcludedRegion { m: i64, n: i64 },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
