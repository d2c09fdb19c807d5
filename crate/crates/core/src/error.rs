use thiserror::Error;

/// Errors raised by construction, verification and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments or data violate an operation's documented input contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A graph-level precondition (such as strong connectivity) does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive operation would exceed its size guard.
    #[error("cost guard: {0}")]
    CostGuard(String),

    /// The base set's victory count cannot be matched by single-label raises.
    #[error("unsupported base: {0}")]
    UnsupportedBase(String),

    /// A construction step observed a state its invariants rule out.
    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    /// Text input could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Internal failure that indicates a bug in this crate.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: msg.into(),
    }
}
