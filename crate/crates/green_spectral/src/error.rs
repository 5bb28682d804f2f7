use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision error: {0}")]
    Precision(String),
    #[error(transparent)]
    Model(#[from] model_domain::ModelError),
    #[error(transparent)]
    Airy(#[from] airy_kernel::AiryError),
}

pub type Result<T> = std::result::Result<T, FieldError>;
