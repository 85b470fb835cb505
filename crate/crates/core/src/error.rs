use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("braid error: {0}")]
    Braid(String),
    #[error("tangle error: {0}")]
    Tangle(String),
    #[error("classification error: {0}")]
    Classify(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
