//! Crate-wide error and result types.

use thiserror::Error;

/// Errors produced by kinematic, quadrature and operator routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An input sits on (or too close to) a singular configuration.
    #[error("singular input: {0}")]
    SingularInput(String),

    /// A numeric routine produced a non-finite value.
    #[error("non-finite value in {context}: {detail}")]
    NonFinite { context: &'static str, detail: String },

    /// A quadrature rule could not be constructed or applied.
    #[error("quadrature: {0}")]
    Quadrature(String),

    /// Dense linear algebra failed (non-symmetric input, failed factorization...).
    #[error("linear algebra: {0}")]
    Linalg(String),

    /// Binary operator-file I/O failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Binary operator-file contents are malformed.
    #[error("operator file: {0}")]
    Format(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn singular(msg: impl Into<String>) -> Self {
        Error::SingularInput(msg.into())
    }
}
