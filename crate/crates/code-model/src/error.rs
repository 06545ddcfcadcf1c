use thiserror::Error;

use padic_core::CoreError;

/// Errors from building codes or separation specifications.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cos(theta) = {0} is outside [-1, 1]")]
    CosThetaOutOfRange(String),
    #[error("theta = {0} is outside [0, 2*pi)")]
    ThetaOutOfRange(String),
    #[error("a code needs at least one vector")]
    EmptyCode,
    #[error("vector {index} has dimension {found}, expected {expected}")]
    WrongDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("vector {index} has prime {found}, expected {expected}")]
    WrongPrime {
        index: usize,
        expected: u64,
        found: u64,
    },
    #[error("{0} requires an exact separation (rational cos(theta))")]
    ApproximateModeUnsupported(&'static str),
}

/// A line-numbered error from the code file parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{0} <value>`")]
    MissingHeader(&'static str),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("duplicate header `{0}`")]
    DuplicateHeader(&'static str),
    #[error("no vectors found")]
    NoVectors,
    #[error("{0}")]
    Model(ModelError),
}
