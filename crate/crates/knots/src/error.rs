use thiserror::Error;

#[derive(Debug, Error)]
pub enum KnotError {
    #[error("invalid value: {0}")]
    Invalid(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl KnotError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        KnotError::Invalid(msg.into())
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        KnotError::Parse { pos, msg: msg.into() }
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        KnotError::Precondition(msg.into())
    }
}
