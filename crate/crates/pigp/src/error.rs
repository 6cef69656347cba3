use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Capacity` marks inputs beyond the supported search budgets (the CLI maps
/// it to exit code 2), while `Parse`, `Selector` and `Precondition` are input
/// problems (exit code 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("selector error: {0}")]
    Selector(String),

    #[error("verification failed: {0}")]
    Verify(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub fn selector(msg: impl Into<String>) -> Self {
        Error::Selector(msg.into())
    }
}
