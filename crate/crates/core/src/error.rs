use thiserror::Error;

/// Errors raised by the algebraic and geometric routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the supported range (unknown kind, rank out of range, bad shape).
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Input is well-formed but does not satisfy the operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured resource cap (orbit size) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An internal invariant failed. Indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! param_err {
    ($($arg:tt)*) => { $crate::error::Error::Parameter(format!($($arg)*)) };
}
macro_rules! domain_err {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! internal_err {
    ($($arg:tt)*) => { $crate::error::Error::Internal(format!($($arg)*)) };
}
pub(crate) use {domain_err, internal_err, param_err};
