use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("budget exceeded while {what} (limit {limit})")]
    BudgetExceeded { what: String, limit: u64 },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a resolution: {0}")]
    NotResolution(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
