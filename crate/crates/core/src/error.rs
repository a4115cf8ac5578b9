use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("scale guardrail exceeded: {what} = {size} (limit {limit})")]
    Scale {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Unavailable(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}
