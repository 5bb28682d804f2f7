use airy_kernel::b_coefficients;
use model_domain::WaveParams;
use serde::{Deserialize, Serialize};

use crate::error::{CausticError, Result};

/// Below this value of u = ω^{3/2} the B correction is dropped.
pub const B_FROM_U: f64 = 5.0;

/// `L(ω) - π/2` as a sum of powers `c ω^p`: the leading `(4/3)ω^{3/2}`
/// and, when enabled, `-b_k ω^{-3k/2}` from the fitted B series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LModel {
    pub with_b: bool,
    terms: Vec<(f64, f64)>,
}

impl LModel {
    pub fn new(with_b: bool) -> Self {
        let mut terms = vec![(4.0 / 3.0, 1.5)];
        if with_b {
            for (k, b) in b_coefficients().coeffs.iter().enumerate() {
                terms.push((-b, -1.5 * (k + 1) as f64));
            }
        }
        LModel { with_b, terms }
    }

    /// B is kept when u = ω^{3/2} ≥ [`B_FROM_U`].
    pub fn for_omega(omega: f64) -> Self {
        Self::new(omega > 0.0 && omega * omega.sqrt() >= B_FROM_U)
    }

    /// n-th derivative in ω, n ≤ 3.
    pub fn deriv(&self, omega: f64, n: u32) -> f64 {
        self.terms
            .iter()
            .map(|&(c, p)| {
                let fall: f64 = (0..n).map(|j| p - j as f64).product();
                c * fall * omega.powf(p - n as f64)
            })
            .sum()
    }

    /// `1 - (3/4)B′(u)`, the factor multiplying 2√ω in L′.
    pub fn slope_factor(&self, omega: f64) -> f64 {
        self.deriv(omega, 1) / (2.0 * omega.sqrt())
    }
}

/// Model phase of V_N with the tangential frequency fixed to a unit
/// direction, as a function of (s, ϱ, α) at a space-time point (t, x):
/// `tρ(α) - N h L(α h^{-2/3}) + s³/3 + s(xκ - α) + ϱ³/3 + ϱ(aκ - α)`,
/// with κ = q^{1/3} and ρ = (1 + α q^{2/3})^{1/2}.
#[derive(Debug, Clone)]
pub struct ModelPhase {
    pub n: i64,
    pub h: f64,
    pub a: f64,
    pub q: f64,
    pub kappa: f64,
    /// ∇q at the direction.
    pub grad_q: Vec<f64>,
    pub dir: Vec<f64>,
    pub l: LModel,
}

/// Phase variables (s, ϱ, α) and the space-time point (t, x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub s: f64,
    pub varrho: f64,
    pub alpha: f64,
    pub t: f64,
    pub x: f64,
}

impl ModelPhase {
    pub fn new(params: &WaveParams, n: i64, dir: &[f64], l: LModel) -> Result<Self> {
        let norm: f64 = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        if dir.len() != params.d - 1 || (norm - 1.0).abs() > 1e-12 {
            return Err(CausticError::Domain(format!("direction must be a unit vector in dimension {}", params.d - 1)));
        }
        let q = params.q(dir)?;
        let rows = params.qform.rows();
        let grad_q = (0..dir.len()).map(|i| 2.0 * (0..dir.len()).map(|j| rows[i][j] * dir[j]).sum::<f64>()).collect();
        Ok(ModelPhase { n, h: params.h, a: params.a, q, kappa: q.cbrt(), grad_q, dir: dir.to_vec(), l })
    }

    fn rho_derivs(&self, alpha: f64) -> [f64; 4] {
        let c = self.kappa * self.kappa;
        let r = (1.0 + alpha * c).sqrt();
        [r, c / (2.0 * r), -c * c / (4.0 * r * r * r), 3.0 * c * c * c / (8.0 * r.powi(5))]
    }

    /// n-th α-derivative of `h L(α h^{-2/3})`.
    fn lh_deriv(&self, alpha: f64, n: u32) -> f64 {
        let h23 = self.h.powf(2.0 / 3.0);
        let omega = alpha / h23;
        if n == 0 {
            return self.h * (self.l.deriv(omega, 0) + std::f64::consts::FRAC_PI_2);
        }
        self.h * h23.powi(-(n as i32)) * self.l.deriv(omega, n)
    }

    pub fn value(&self, p: &PhasePoint) -> f64 {
        let r = self.rho_derivs(p.alpha)[0];
        p.t * r - self.n as f64 * self.lh_deriv(p.alpha, 0)
            + p.s.powi(3) / 3.0
            + p.s * (p.x * self.kappa - p.alpha)
            + p.varrho.powi(3) / 3.0
            + p.varrho * (self.a * self.kappa - p.alpha)
    }

    /// Gradient in (s, ϱ, α).
    pub fn gradient(&self, p: &PhasePoint) -> [f64; 3] {
        let r = self.rho_derivs(p.alpha);
        [
            p.s * p.s + p.x * self.kappa - p.alpha,
            p.varrho * p.varrho + self.a * self.kappa - p.alpha,
            p.t * r[1] - self.n as f64 * self.lh_deriv(p.alpha, 1) - p.s - p.varrho,
        ]
    }

    /// ∂²φ/∂α².
    pub fn c(&self, p: &PhasePoint) -> f64 {
        p.t * self.rho_derivs(p.alpha)[2] - self.n as f64 * self.lh_deriv(p.alpha, 2)
    }

    pub fn d3_alpha(&self, p: &PhasePoint) -> f64 {
        p.t * self.rho_derivs(p.alpha)[3] - self.n as f64 * self.lh_deriv(p.alpha, 3)
    }

    pub fn hessian(&self, p: &PhasePoint) -> [[f64; 3]; 3] {
        [[2.0 * p.s, 0.0, -1.0], [0.0, 2.0 * p.varrho, -1.0], [-1.0, -1.0, self.c(p)]]
    }

    pub fn hessian_det(&self, p: &PhasePoint) -> f64 {
        let c = self.c(p);
        4.0 * p.s * p.varrho * c - 2.0 * p.s - 2.0 * p.varrho
    }

    /// Null direction of the Hessian built from its first and third rows.
    pub fn kernel(&self, p: &PhasePoint) -> [f64; 3] {
        let c = self.c(p);
        [-1.0, 1.0 - 2.0 * p.s * c, -2.0 * p.s]
    }

    /// Third derivative of the phase along `v`.
    pub fn third_along(&self, p: &PhasePoint, v: [f64; 3]) -> f64 {
        2.0 * v[0].powi(3) + 2.0 * v[1].powi(3) + self.d3_alpha(p) * v[2].powi(3)
    }

    /// Tangential position on the projected Lagrangian.
    pub fn y(&self, p: &PhasePoint) -> Vec<f64> {
        let r = self.rho_derivs(p.alpha)[0];
        let q23 = self.kappa * self.kappa;
        let coef = (p.t * p.alpha * self.kappa / r + p.s * p.x + self.a * p.varrho) / (3.0 * q23);
        self.dir.iter().zip(&self.grad_q).map(|(w, g)| -(p.t * w / r + coef * g)).collect()
    }
}
