use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("empty cut family: {0}")]
    EmptyFamily(String),

    #[error("rigid graph without extractable core: parameter mismatch (alpha, delta): {0}")]
    CoreExtraction(String),

    #[error("unknown catalog id: {0}")]
    UnknownCatalog(String),

    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
