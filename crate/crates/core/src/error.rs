use thiserror::Error;

/// Errors raised by the algebra engine and the manifest front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation (zero divisor, zero polynomial).
    #[error("domain error: {0}")]
    Domain(String),
    /// Caller misuse: mismatched rings, bad parameters, unmet preconditions.
    #[error("usage error: {0}")]
    Usage(String),
    /// Polynomial text that does not conform to the grammar. `position` is a byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    /// Manifest or ring description that failed to parse.
    #[error("manifest error at line {line}, column {column}: {message}")]
    Manifest {
        line: usize,
        column: usize,
        message: String,
    },
    /// A configured guard (step budget, word cap, exponent width) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Process exit code for a run aborted by this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) | Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
