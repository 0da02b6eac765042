use thiserror::Error;

/// Errors raised by the library. Every variant is a caller error; the
/// arithmetic itself is total on its documented domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("invalid precision policy: {0}")]
    Policy(String),

    #[error("division by a ball that contains zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
