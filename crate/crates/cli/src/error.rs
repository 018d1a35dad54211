use thiserror::Error;

use twin_core::TwinError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration field `{field}`: {msg}")]
    Config { field: &'static str, msg: String },
    #[error("unrecognized case id `{0}`")]
    CaseId(String),
    #[error(transparent)]
    Core(#[from] TwinError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

pub(crate) fn config_error<T>(field: &'static str, msg: impl Into<String>) -> Result<T> {
    Err(HarnessError::Config { field, msg: msg.into() })
}
