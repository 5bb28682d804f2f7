use thiserror::Error;

#[derive(Debug, Error)]
pub enum CausticError {
    #[error("domain: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error(transparent)]
    Field(#[from] green_spectral::FieldError),
    #[error(transparent)]
    Model(#[from] model_domain::ModelError),
}

pub type Result<T> = std::result::Result<T, CausticError>;
