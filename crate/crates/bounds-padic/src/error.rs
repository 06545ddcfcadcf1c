use thiserror::Error;

use code_model::ModelError;
use padic_core::CoreError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("certificate constant c must be positive, got {0}")]
    NonPositiveC(String),
    #[error("phi must be defined at 0")]
    MissingZeroKey,
    #[error("code fails validation: {0}")]
    CodeInvalid(String),
    #[error("vector {index} has self inner product {value} != 1, outside the theorem")]
    SelfProductNotUnit { index: usize, value: String },
    #[error("phi is undefined at the occurring value {0}")]
    PhiUndefined(String),
    #[error("the off-diagonal multiset contains 0 (duplicated vectors or zero threshold)")]
    ZeroOffDiagonal,
    #[error("threshold rule cutoffs must be positive and strictly increasing")]
    BadThresholdRule,
}

/// A line-numbered error from the certificate file parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct CertParseError {
    pub line: usize,
    pub message: String,
}
