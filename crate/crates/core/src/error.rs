use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("length error: {0}")]
    Length(String),

    #[error("entry at position {0} is not zero")]
    NotZero(usize),

    #[error("frieze entry x[{i},{j}] is not 1 or -1")]
    NotUnit { i: usize, j: usize },

    #[error("index out of range: {0}")]
    Range(String),

    #[error("{element} is not a member of {subset}")]
    Membership { element: String, subset: String },

    #[error("not a lambda-cycle: {0}")]
    NotACycle(String),

    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(literal: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            literal: literal.to_string(),
            reason: reason.into(),
        }
    }

    /// Stable identifier printed by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Domain(_) => "E_DOMAIN",
            Error::Length(_) => "E_LENGTH",
            Error::NotZero(_) => "E_NOT_ZERO",
            Error::NotUnit { .. } => "E_NOT_UNIT",
            Error::Range(_) => "E_RANGE",
            Error::Membership { .. } => "E_MEMBERSHIP",
            Error::NotACycle(_) => "E_NOT_A_CYCLE",
            Error::MalformedTree(_) => "E_MALFORMED_TREE",
            Error::Io(_) => "E_IO",
        }
    }

    /// True for failures of a mathematical check rather than of the input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::NotACycle(_) | Error::NotUnit { .. } | Error::MalformedTree(_)
        )
    }
}
