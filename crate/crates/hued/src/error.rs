use thiserror::Error;

/// Errors produced by the library.
///
/// Verification outcomes (an invalid coloring, a broken design) are *not*
/// errors; they are reported through the return values of the verifiers.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph or design file could not be parsed. `offset` is the byte
    /// position of the offending input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The input violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An internal invariant failed. This signals a bug in the library,
    /// never a property of the input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn input(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
