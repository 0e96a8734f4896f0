use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("row-major buffer has {found} entries, expected {expected}")]
    BadShape { expected: usize, found: usize },

    #[error("matrix is not Hermitian (asymmetry {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive definite (pivot {pivot:.3e} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPsd { eigenvalue: f64 },

    #[error("matrix is rank deficient (rank {rank} of {dim})")]
    SingularInput { rank: usize, dim: usize },

    #[error("Kraus set is empty")]
    EmptyKraus,

    #[error("channel is not trace preserving (deviation {deviation:.3e})")]
    NotTracePreserving { deviation: f64 },

    #[error("channel is not unital (deviation {deviation:.3e})")]
    NotUnital { deviation: f64 },

    #[error("invalid density matrix: {reason}")]
    InvalidState { reason: String },

    #[error("invalid Choi matrix: {reason}")]
    InvalidChoi { reason: String },

    #[error("invalid mixture weights: {reason}")]
    BadWeights { reason: String },

    #[error("tensor power dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },

    #[error("map is not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },

    #[error("no perfect matching on the support (residual max entry {residual:.3e})")]
    NoPerfectMatching { residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
