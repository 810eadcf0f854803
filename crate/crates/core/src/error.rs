use thiserror::Error;

/// Errors raised by the Bloch-space operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("level count must be at least 2 (got {0})")]
    InvalidLevelCount(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    NotUnitTrace(f64),

    #[error("generator {index} is not traceless (trace {trace:e})")]
    NotTraceless { index: usize, trace: f64 },

    #[error("generators {i} and {j} violate tr(λiλj) = 2δij (got {value})")]
    NotOrthogonal { i: usize, j: usize, value: f64 },

    #[error("matrix is not orthogonal (max |VᵀV - I| = {0:e})")]
    NotOrthogonalMatrix(f64),

    #[error("expectation value {index} has imaginary residue {residue:e}")]
    ImaginaryResidue { index: usize, residue: f64 },

    #[error("closed-form moment only available for q in 2..=4 (got {0})")]
    UnsupportedMoment(usize),

    #[error("need power sums up to q = {needed}, have {available}")]
    InsufficientMoments { needed: usize, available: usize },

    #[error("axis index {0} out of range 1..=8")]
    AxisOutOfRange(usize),

    #[error("section axes must differ (both are {0})")]
    RepeatedAxis(usize),

    #[error("invalid section grid: {0}")]
    InvalidSection(String),

    #[error("input is not a valid density matrix (coefficient a{index} = {value:e})")]
    NotAState { index: usize, value: f64 },

    #[error("unknown sample kind '{0}' (expected pure, mixed or ball-uniform)")]
    UnknownSampleKind(String),

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
