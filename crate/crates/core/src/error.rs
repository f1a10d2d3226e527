use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A construction or formula was asked for parameters outside its proven range.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A request would exceed a configured size or work budget.
    #[error("resource limit exceeded: {what} ({requested} > {limit})")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge coloring is not proper: edges {first:?} and {second:?} share an endpoint and color")]
    ImproperColoring {
        first: (usize, usize),
        second: (usize, usize),
    },

    /// An internal consistency check on a constructed object failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Short machine-readable tag, used by the CLI on its error stream.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Precondition(_) => "precondition",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::InvalidGraph(_) => "invalid_graph",
            Error::Parse { .. } => "parse",
            Error::ImproperColoring { .. } => "improper_coloring",
            Error::Verification(_) => "verification",
        }
    }
}
