use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series does not converge: {0}")]
    Convergence(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("coset mismatch: {0}")]
    CosetMismatch(String),
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("catalog mismatch: {0}")]
    CatalogMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
