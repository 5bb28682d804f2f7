use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Field(#[from] green_spectral::FieldError),
    #[error(transparent)]
    Model(#[from] model_domain::ModelError),
    #[error(transparent)]
    Caustic(#[from] wavefront_caustics::CausticError),
}

pub type Result<T> = std::result::Result<T, BenchError>;
