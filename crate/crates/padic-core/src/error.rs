use thiserror::Error;

/// Errors from constructing or combining p-adic values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("invalid rational literal {literal:?}: {reason}")]
    InvalidRational { literal: String, reason: String },
}
