use thiserror::Error;

/// Errors produced by ideal arithmetic, the axes-ideal fast paths and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("ideal is not squarefree; symbolic powers are only supported for squarefree monomial ideals")]
    NotSquarefree,

    #[error("operation is undefined for the {0} ideal")]
    TrivialIdeal(&'static str),

    #[error("monomial {vector} is not a member: {reason}")]
    NotAMember { vector: String, reason: String },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("resource guard: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical invariant that must hold was observed to fail.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
