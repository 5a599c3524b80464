use thiserror::Error;

/// Errors for bound and entropy computations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid entropic index: {0}")]
    InvalidIndex(String),

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("invalid overlap triplet: {0}")]
    InvalidTriplet(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("matrix check failed: {0}")]
    Matrix(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
