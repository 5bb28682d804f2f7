use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Airy(#[from] airy_kernel::AiryError),
}

pub type Result<T> = std::result::Result<T, ModelError>;
