use thiserror::Error;

/// Which resource cap stopped a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Degree,
    Pairs,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VarIndexOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} rows, got {got}")]
    RowCountMismatch { expected: usize, got: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("resource cap exceeded ({kind:?} limit {limit})")]
    CapExceeded { kind: CapKind, limit: usize },
    #[error("{0} must vanish at the origin")]
    NotVanishing(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
