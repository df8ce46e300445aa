use thiserror::Error;

/// Errors raised by topology queries, closed forms and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cut construction failed: expected {expected} components, found {found}")]
    ConstructionFailure { expected: usize, found: usize },
    #[error("unsupported scale: {0}")]
    UnsupportedScale(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
