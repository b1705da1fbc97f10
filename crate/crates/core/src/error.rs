use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit codes: parse errors exit with 2,
/// domain/context/argument/arithmetic errors with 3, resource caps with 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects living in different rings were combined.
    #[error("ring context mismatch: {0}")]
    Context(String),

    /// An operation was applied outside the hypotheses it is defined for.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller-supplied argument (index, permutation, partition) is invalid.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Exponent overflow, or a quotient of non-divisible monomials.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A configured computation cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// Malformed text or JSON input. `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
