//! The model half-space `x > 0` with Laplacian
//! `∂²_x + Δ_y + x Σ R₁^{jk} ∂_{y_j} ∂_{y_k}`: its quadratic form q, the
//! symbols ρ and τ, the eigenvalues λ_k(η) and the normalized gallery
//! modes.

mod error;
mod modes;
mod params;

pub use error::{ModelError, Result};
pub use modes::{lambda_k, mode_eval, rho, tau, GalleryMode};
pub use params::{AlphaCutoff, QForm, WaveParams};
