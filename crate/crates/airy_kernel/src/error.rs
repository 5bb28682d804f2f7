use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AiryError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision error: {0}")]
    Precision(String),
    #[error("zero bracketing failed at index {index}")]
    Bracket { index: usize },
}

pub type Result<T> = std::result::Result<T, AiryError>;
