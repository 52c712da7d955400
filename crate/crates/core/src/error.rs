use thiserror::Error;

/// Errors raised by constructors, parsers and size guards.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidField(u32),

    #[error("ground set of size {0} exceeds the {max} vertices a mask can hold", max = crate::mask::MAX_VERTICES)]
    GroundTooLarge(usize),

    #[error("ground set of size {n} exceeds the sweep limit of {limit}; pass --force to override")]
    SweepTooLarge { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
