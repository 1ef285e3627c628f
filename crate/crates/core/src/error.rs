use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live in distinct rings: `{left}` and `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected a class homogeneous of degree {expected}, got {found}")]
    Degree { expected: usize, found: String },

    #[error("inconsistent bundle data: {0}")]
    InconsistentData(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("sweep refused: at least {count} cases, above the cap of {cap}")]
    CaseCap { count: u64, cap: u64 },

    #[error("report format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
