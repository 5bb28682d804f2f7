use serde::{Deserialize, Serialize};

use crate::error::{PhaseError, Result};
use crate::metric::{richardson, MetricJet};

/// R₀(Y, ω) may differ from 1 by at most this much on the grid.
pub const EIKONAL_WINDOW: f64 = 0.1;

/// β = BETA_FACTOR · γ, from the ξ(ϱ−1) terms of order 3.
pub const BETA_FACTOR: f64 = 2.0;

/// Uniform grid `i · y_max / n`, `|i| ≤ n`.
pub fn symmetric_grid(y_max: f64, n: usize) -> Vec<f64> {
    let n = n.max(1) as i64;
    (-n..=n).map(|i| y_max * i as f64 / n as f64).collect()
}

fn check_grid(y: &[f64]) -> Result<(usize, f64)> {
    if y.len() < 3 || y.len() % 2 == 0 {
        return Err(PhaseError::Config("Y grid needs an odd number of points, at least 3".into()));
    }
    let mid = y.len() / 2;
    let step = y[1] - y[0];
    if !(step > 0.0) || y[mid].abs() > 1e-14 || y.windows(2).any(|w| ((w[1] - w[0]) - step).abs() > 1e-12 * step.max(1.0)) {
        return Err(PhaseError::Config("Y grid must be uniform, increasing and centred on 0".into()));
    }
    Ok((mid, step))
}

fn check_omega(metric: &MetricJet, omega: f64) -> Result<()> {
    metric.validate()?;
    if (omega.abs() - 1.0).abs() > 1e-12 {
        return Err(PhaseError::Domain(format!("ω = {omega} is not a unit direction")));
    }
    Ok(())
}

/// Θ₀ = φ′(Y): the root of R₀(Y, p) = 1 continued from p = ω.
fn eikonal_root(metric: &MetricJet, y: f64, omega: f64) -> std::result::Result<f64, String> {
    let r = metric.r0.eval(y, omega);
    if !((r - 1.0).abs() <= EIKONAL_WINDOW) {
        return Err(format!("R0({y}, ω) = {r} is outside 1 ± {EIKONAL_WINDOW}"));
    }
    let mut p = omega;
    for _ in 0..60 {
        let f = metric.r0.eval(y, p) - 1.0;
        let g = metric.r0.d_eta(y, p);
        if g * omega <= 0.0 {
            return Err(format!("d_η R0 changes sign at Y = {y}"));
        }
        let dp = f / g;
        p -= dp;
        if (p - omega).abs() > 0.5 {
            return Err(format!("root left the neighbourhood of ω at Y = {y}"));
        }
        if dp.abs() <= 1e-16 * p.abs() {
            break;
        }
    }
    Ok(p)
}

/// Every jet at one (Y, ω), computed pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JetPoint {
    pub y: f64,
    pub theta0: f64,
    pub b0_y: f64,
    pub ell: f64,
    pub ell_y: f64,
    pub b2_y: f64,
    pub gamma: f64,
    pub beta: f64,
}

pub fn jet_point(metric: &MetricJet, omega: f64, y: f64) -> Result<JetPoint> {
    let theta0 = eikonal_root(metric, y, omega).map_err(|reason| PhaseError::DomainShrink { max_valid: y.abs(), reason })?;
    let q = metric.q(omega);
    let r1 = metric.r1.eval(y, theta0);
    if !(r1 / q > 0.0) {
        return Err(PhaseError::Domain(format!("R1/q = {} at Y = {y}", r1 / q)));
    }
    let ell = (r1 / q).cbrt() - 1.0;
    let g0 = metric.r0.d_eta(y, theta0);
    if g0.abs() < 1e-12 {
        return Err(PhaseError::SingularTransport(format!("d_Θ R0 vanishes at Y = {y}")));
    }
    // Θ₀′ from differentiating R₀(Y, Θ₀(Y)) = 1.
    let theta0_y = -metric.r0.d_y(y, theta0) / g0;
    let ell_y = (metric.r1.d_y(y, theta0) + metric.r1.d_eta(y, theta0) * theta0_y) / (3.0 * q * (1.0 + ell).powi(2));
    let b2_y = 2.0 * r1 / ((1.0 + ell) * q * g0) - omega;
    let gamma = g0 * ell_y * (1.0 + ell) / (4.0 * r1);
    Ok(JetPoint { y, theta0, b0_y: theta0 - omega, ell, ell_y, b2_y, gamma, beta: BETA_FACTOR * gamma })
}

fn points(metric: &MetricJet, omega: f64, y: &[f64]) -> Result<Vec<JetPoint>> {
    let mut out = Vec::with_capacity(y.len());
    let mut max_valid = f64::INFINITY;
    let mut failure = None;
    for &v in y {
        match jet_point(metric, omega, v) {
            Ok(p) => out.push(p),
            Err(PhaseError::DomainShrink { reason, .. }) => {
                max_valid = max_valid.min(v.abs());
                failure.get_or_insert(reason);
                out.push(JetPoint { y: v, theta0: f64::NAN, b0_y: 0.0, ell: 0.0, ell_y: 0.0, b2_y: 0.0, gamma: 0.0, beta: 0.0 });
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(reason) = failure {
        let valid = y.iter().map(|v| v.abs()).filter(|&v| v < max_valid).fold(0.0f64, f64::max);
        return Err(PhaseError::DomainShrink { max_valid: valid, reason });
    }
    Ok(out)
}

/// Integrates `f′` from Y = 0 outward with Simpson steps, which is the
/// RK4 step for an ODE whose right side depends on Y only.
fn integrate_from_zero<F: Fn(f64) -> Result<f64>>(y: &[f64], at_nodes: &[f64], mid: usize, step: f64, f: F) -> Result<Vec<f64>> {
    let mut out = vec![0.0; y.len()];
    for i in mid + 1..y.len() {
        let m = f(y[i] - 0.5 * step)?;
        out[i] = out[i - 1] + step / 6.0 * (at_nodes[i - 1] + 4.0 * m + at_nodes[i]);
    }
    for i in (0..mid).rev() {
        let m = f(y[i] + 0.5 * step)?;
        out[i] = out[i + 1] - step / 6.0 * (at_nodes[i + 1] + 4.0 * m + at_nodes[i]);
    }
    Ok(out)
}

/// φ with R₀(Y, φ′) = 1, φ(0) = 0, φ′(0) = ω; B₀ = φ − Yω.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct B0Data {
    pub omega: f64,
    pub y: Vec<f64>,
    pub theta0: Vec<f64>,
    pub b0: Vec<f64>,
    pub b0_y: Vec<f64>,
    pub eikonal_residual: f64,
}

pub fn solve_eikonal_b0(metric: &MetricJet, omega: f64, y: &[f64]) -> Result<B0Data> {
    check_omega(metric, omega)?;
    let (mid, step) = check_grid(y)?;
    let pts = points(metric, omega, y)?;
    let b0_y: Vec<f64> = pts.iter().map(|p| p.b0_y).collect();
    let b0 = integrate_from_zero(y, &b0_y, mid, step, |v| jet_point(metric, omega, v).map(|p| p.b0_y))?;
    let eikonal_residual = pts.iter().map(|p| (metric.r0.eval(p.y, p.theta0) - 1.0).abs()).fold(0.0, f64::max);
    if eikonal_residual > 1e-10 {
        return Err(PhaseError::Domain(format!("eikonal residual {eikonal_residual:e}")));
    }
    Ok(B0Data { omega, y: y.to_vec(), theta0: pts.iter().map(|p| p.theta0).collect(), b0, b0_y, eikonal_residual })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllData {
    pub ell: Vec<f64>,
    pub ell_y: Vec<f64>,
}

/// `(1+ℓ)³ = R₁(Y, ω + ∂_Y B₀) / q(ω)`.
pub fn compute_ell(metric: &MetricJet, b0: &B0Data) -> Result<EllData> {
    let pts = points(metric, b0.omega, &b0.y)?;
    Ok(EllData { ell: pts.iter().map(|p| p.ell).collect(), ell_y: pts.iter().map(|p| p.ell_y).collect() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct B2Data {
    pub b2: Vec<f64>,
    pub b2_y: Vec<f64>,
}

/// `∂_Θ R₀ (ω + ∂_Y B₂) = 2 R₁ / ((1+ℓ) q(ω))`, solved for ∂_Y B₂ and
/// integrated with B₂(0) = 0.
pub fn solve_transport_b2(metric: &MetricJet, b0: &B0Data, ell: &EllData) -> Result<B2Data> {
    let (mid, step) = check_grid(&b0.y)?;
    if ell.ell.len() != b0.y.len() {
        return Err(PhaseError::Config("ℓ and B0 grids differ".into()));
    }
    let pts = points(metric, b0.omega, &b0.y)?;
    let b2_y: Vec<f64> = pts.iter().map(|p| p.b2_y).collect();
    let b2 = integrate_from_zero(&b0.y, &b2_y, mid, step, |v| jet_point(metric, b0.omega, v).map(|p| p.b2_y))?;
    Ok(B2Data { b2, b2_y })
}

/// The three constants that appear for γ(0, ω) in terms of the Poisson
/// bracket {R₀, R₁}(0, ω), next to the computed values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaCandidates {
    pub bracket: f64,
    pub over_12: f64,
    pub over_6: f64,
    pub over_3: f64,
    pub gamma0: f64,
    pub beta0: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaBeta {
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
    pub alpha: Vec<f64>,
    pub candidates: GammaCandidates,
}

/// `γ = ∂_Θ R₀ ∂_Y ℓ (1+ℓ) / (4 R₁)`, β = 2γ, α = 0.
pub fn compute_gamma_beta(metric: &MetricJet, b0: &B0Data, ell: &EllData) -> Result<GammaBeta> {
    if ell.ell.len() != b0.y.len() {
        return Err(PhaseError::Config("ℓ and B0 grids differ".into()));
    }
    let pts = points(metric, b0.omega, &b0.y)?;
    let w = b0.omega;
    let bracket = metric.r0.d_eta(0.0, w) * metric.r1.d_y(0.0, w) - metric.r0.d_y(0.0, w) * metric.r1.d_eta(0.0, w);
    let r1 = metric.r1.eval(0.0, w);
    let p0 = jet_point(metric, w, 0.0)?;
    let candidates = GammaCandidates {
        bracket,
        over_12: bracket / (12.0 * r1 * r1),
        over_6: bracket / (6.0 * r1 * r1),
        over_3: bracket / (3.0 * r1 * r1),
        gamma0: p0.gamma,
        beta0: p0.beta,
    };
    Ok(GammaBeta {
        gamma: pts.iter().map(|p| p.gamma).collect(),
        beta: pts.iter().map(|p| p.beta).collect(),
        alpha: vec![0.0; pts.len()],
        candidates,
    })
}

/// Taylor coefficients at Y = 0, orders 0..=3.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaylorAtZero {
    pub b0: [f64; 4],
    pub b2: [f64; 4],
    pub ell: [f64; 4],
    pub gamma: [f64; 4],
    pub beta: [f64; 4],
}

/// `[f(0), f′(0), f″(0)/2, f‴(0)/6]` from five-point stencils with one
/// Richardson step.
fn taylor3<F: Fn(f64) -> Result<f64>>(f: F, s: f64) -> Result<[f64; 4]> {
    let stencil = |s: f64| -> Result<[f64; 3]> {
        let (m2, m1, z, p1, p2) = (f(-2.0 * s)?, f(-s)?, f(0.0)?, f(s)?, f(2.0 * s)?);
        Ok([
            (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * s),
            (-m2 + 16.0 * m1 - 30.0 * z + 16.0 * p1 - p2) / (12.0 * s * s),
            (-m2 + 2.0 * m1 - 2.0 * p1 + p2) / (2.0 * s * s * s),
        ])
    };
    let (a, b) = (stencil(s)?, stencil(s / 2.0)?);
    // First two stencils are fourth order, the third is second order.
    let d1 = (16.0 * b[0] - a[0]) / 15.0;
    let d2 = (16.0 * b[1] - a[1]) / 15.0;
    let d3 = (4.0 * b[2] - a[2]) / 3.0;
    Ok([f(0.0)?, d1, d2 / 2.0, d3 / 6.0])
}

fn antiderivative_taylor(c: [f64; 4]) -> [f64; 4] {
    [0.0, c[0], c[1] / 2.0, c[2] / 3.0]
}

/// All jets for one direction ω on a symmetric Y grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseJet {
    pub metric: String,
    pub omega: f64,
    pub y: Vec<f64>,
    pub theta0: Vec<f64>,
    pub b0: Vec<f64>,
    pub b0_y: Vec<f64>,
    pub b2: Vec<f64>,
    pub b2_y: Vec<f64>,
    pub ell: Vec<f64>,
    pub ell_y: Vec<f64>,
    pub gamma: Vec<f64>,
    pub beta: Vec<f64>,
    pub alpha: Vec<f64>,
    pub taylor: TaylorAtZero,
    pub eikonal_residual: f64,
    pub candidates: GammaCandidates,
}

impl PhaseJet {
    pub fn build(metric: &MetricJet, omega: f64, y: &[f64]) -> Result<Self> {
        let b0 = solve_eikonal_b0(metric, omega, y)?;
        let ell = compute_ell(metric, &b0)?;
        let b2 = solve_transport_b2(metric, &b0, &ell)?;
        let gb = compute_gamma_beta(metric, &b0, &ell)?;
        let at = |v: f64| jet_point(metric, omega, v);
        let s = 1e-2 * y[y.len() - 1].min(1.0);
        let taylor = TaylorAtZero {
            b0: antiderivative_taylor(taylor3(|v| at(v).map(|p| p.b0_y), s)?),
            b2: antiderivative_taylor(taylor3(|v| at(v).map(|p| p.b2_y), s)?),
            ell: taylor3(|v| at(v).map(|p| p.ell), s)?,
            gamma: taylor3(|v| at(v).map(|p| p.gamma), s)?,
            beta: taylor3(|v| at(v).map(|p| p.beta), s)?,
        };
        Ok(Self {
            metric: metric.name.clone(),
            omega,
            y: b0.y,
            theta0: b0.theta0,
            b0: b0.b0,
            b0_y: b0.b0_y,
            b2: b2.b2,
            b2_y: b2.b2_y,
            ell: ell.ell,
            ell_y: ell.ell_y,
            gamma: gb.gamma,
            beta: gb.beta,
            alpha: gb.alpha,
            taylor,
            eikonal_residual: b0.eikonal_residual,
            candidates: gb.candidates,
        })
    }

    /// The same jets with γ and β set to zero.
    pub fn with_gamma_zeroed(&self) -> Self {
        let mut j = self.clone();
        j.gamma.iter_mut().for_each(|v| *v = 0.0);
        j.beta.iter_mut().for_each(|v| *v = 0.0);
        j
    }

    /// The same jets with β = factor · γ.
    pub fn with_beta_factor(&self, factor: f64) -> Self {
        let mut j = self.clone();
        j.beta = j.gamma.iter().map(|g| factor * g).collect();
        j
    }

    /// Second derivative of B₀ at Y = 0 from its pointwise derivative.
    pub fn b0_second_at_zero(metric: &MetricJet, omega: f64) -> Result<f64> {
        jet_point(metric, omega, 0.0)?;
        Ok(richardson(|v| jet_point(metric, omega, v).map_or(f64::NAN, |p| p.b0_y), 0.0, 1e-4))
    }
}
