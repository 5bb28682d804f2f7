use thiserror::Error;

/// Failure categories, each with its own exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision error: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Precision(_) => 4,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(format!("i/o: {e}"))
    }
}

impl From<airy_kernel::AiryError> for CliError {
    fn from(e: airy_kernel::AiryError) -> Self {
        use airy_kernel::AiryError::*;
        match e {
            Domain(m) => CliError::Domain(m),
            Precision(m) => CliError::Precision(m),
            e @ Bracket { .. } => CliError::Precision(e.to_string()),
        }
    }
}

impl From<model_domain::ModelError> for CliError {
    fn from(e: model_domain::ModelError) -> Self {
        use model_domain::ModelError::*;
        match e {
            Domain(m) => CliError::Domain(m),
            Config(m) => CliError::Config(m),
            Airy(a) => a.into(),
        }
    }
}

impl From<green_spectral::FieldError> for CliError {
    fn from(e: green_spectral::FieldError) -> Self {
        use green_spectral::FieldError::*;
        match e {
            Config(m) => CliError::Config(m),
            Domain(m) => CliError::Domain(m),
            Precision(m) => CliError::Precision(m),
            Model(m) => m.into(),
            Airy(a) => a.into(),
        }
    }
}

impl From<wavefront_caustics::CausticError> for CliError {
    fn from(e: wavefront_caustics::CausticError) -> Self {
        use wavefront_caustics::CausticError::*;
        match e {
            Domain(m) => CliError::Domain(m),
            Convergence(m) => CliError::Precision(m),
            Field(f) => f.into(),
            Model(m) => m.into(),
        }
    }
}

impl From<dispersion_bench::BenchError> for CliError {
    fn from(e: dispersion_bench::BenchError) -> Self {
        use dispersion_bench::BenchError::*;
        match e {
            Domain(m) => CliError::Domain(m),
            Field(f) => f.into(),
            Model(m) => m.into(),
            Caustic(c) => c.into(),
        }
    }
}

impl From<glancing_phase::PhaseError> for CliError {
    fn from(e: glancing_phase::PhaseError) -> Self {
        use glancing_phase::PhaseError::*;
        match e {
            Config(m) => CliError::Config(m),
            Domain(m) => CliError::Domain(m),
            e @ DomainShrink { .. } => CliError::Domain(e.to_string()),
            SingularTransport(m) | Verification(m) => CliError::Precision(m),
        }
    }
}
