use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input lives outside the domain an operation is defined on
    /// (e.g. switching a graph with a third colour).
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller-supplied argument is invalid.
    #[error("argument error: {0}")]
    Argument(String),
    /// A documented precondition of the callee was violated.
    #[error("contract error: {0}")]
    Contract(String),
    /// The instance is too large for an exhaustive routine.
    #[error("size error: {0}")]
    Size(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
