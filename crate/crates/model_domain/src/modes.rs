use std::f64::consts::PI;

use airy_kernel::{airy, AiryZeroTable};
use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};
use crate::params::QForm;

/// ρ(α, θ) = √(|θ|² + α q(θ)^{2/3}).
pub fn rho(alpha: f64, theta: &[f64], q: &QForm) -> Result<f64> {
    let t2: f64 = theta.iter().map(|t| t * t).sum();
    let qv = q.eval(theta)?;
    let s = t2 + alpha * qv.cbrt().powi(2);
    if s < 0.0 {
        return Err(ModelError::Domain(format!("ρ² = {s} < 0 at α = {alpha}")));
    }
    Ok(s.sqrt())
}

/// τ(ω, η) = √(|η|² + ω q(η)^{2/3}).
pub fn tau(omega: f64, eta: &[f64], q: &QForm) -> Result<f64> {
    rho(omega, eta, q)
}

fn check_k(k: usize, zeros: &AiryZeroTable) -> Result<()> {
    if k == 0 || k > zeros.zeros.len() {
        return Err(ModelError::Domain(format!("mode index {k} outside table of {}", zeros.zeros.len())));
    }
    Ok(())
}

fn nonzero_q(eta: &[f64], q: &QForm) -> Result<f64> {
    let qv = q.eval(eta)?;
    if qv <= 0.0 {
        return Err(ModelError::Domain("tangential frequency must be nonzero".into()));
    }
    Ok(qv)
}

/// λ_k(η) = |η|² + ω_k q(η)^{2/3}.
pub fn lambda_k(k: usize, eta: &[f64], q: &QForm, zeros: &AiryZeroTable) -> Result<f64> {
    check_k(k, zeros)?;
    let qv = nonzero_q(eta, q)?;
    let e2: f64 = eta.iter().map(|t| t * t).sum();
    Ok(e2 + zeros.zeros[k - 1] * qv.cbrt().powi(2))
}

/// Unit-norm Dirichlet eigenfunction `q^{1/6} Ai(q^{1/3} x - ω_k) / ‖Ai(· - ω_k)‖`.
pub fn mode_eval(k: usize, x: f64, eta: &[f64], q: &QForm, zeros: &AiryZeroTable) -> Result<f64> {
    check_k(k, zeros)?;
    if !(x >= 0.0) {
        return Err(ModelError::Domain(format!("modes live on x ≥ 0, got x = {x}")));
    }
    let qv = nonzero_q(eta, q)?;
    let mode = GalleryMode::from_table(k, zeros)?;
    Ok(mode.profile(x, qv)?)
}

/// One whispering-gallery mode: index, Airy zero, L′ at the zero and the
/// squared L² norm of `Ai(· - ω_k)` on the half-line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GalleryMode {
    pub k: usize,
    pub omega_k: f64,
    pub lprime: f64,
    pub norm_sq: f64,
}

impl GalleryMode {
    pub fn from_table(k: usize, zeros: &AiryZeroTable) -> Result<Self> {
        check_k(k, zeros)?;
        let lprime = zeros.lprimes[k - 1];
        Ok(GalleryMode { k, omega_k: zeros.zeros[k - 1], lprime, norm_sq: lprime / (2.0 * PI) })
    }

    /// The mode profile for a tangential frequency with `q(η) = qv`.
    pub fn profile(&self, x: f64, qv: f64) -> Result<f64> {
        let s = qv.cbrt();
        let ai = airy(s * x - self.omega_k)?.ai;
        Ok(s.sqrt() * ai / self.norm_sq.sqrt())
    }
}
