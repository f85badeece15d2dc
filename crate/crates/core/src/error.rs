use laver_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LaverError {
    #[error("{what}: requested n = {requested} exceeds the cap of {cap}")]
    SizeLimit {
        what: &'static str,
        requested: u32,
        cap: u32,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arity mismatch: expected {expected}, got {actual}")]
    Arity { expected: usize, actual: usize },
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("malformed table file: {0}")]
    Format(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = LaverError> = std::result::Result<T, E>;
