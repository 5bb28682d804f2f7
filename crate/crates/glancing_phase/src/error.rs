use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhaseError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("domain error: {0}")]
    Domain(String),
    /// The eikonal root left its neighbourhood; jets are valid for |Y| < max_valid.
    #[error("eikonal solve fails beyond |Y| = {max_valid}: {reason}")]
    DomainShrink { max_valid: f64, reason: String },
    #[error("singular transport: {0}")]
    SingularTransport(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, PhaseError>;
