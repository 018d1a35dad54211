use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwinError {
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("degenerate edge {{{0}, {0}}}")]
    Loop(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search or enumeration would exceed its configured budget.
    #[error("{what} requires {required}, budget is {budget}")]
    Resource { what: &'static str, required: u128, budget: u128 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, TwinError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(TwinError::InvalidArgument(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(TwinError::Precondition(msg.into()))
}
