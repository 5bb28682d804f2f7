use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PhaseError, Result};
use crate::jets::PhaseJet;
use crate::metric::MetricJet;

/// Required residual order in the weighted scaling.
pub const SLOPE_THRESHOLD: f64 = 3.8;

/// Residuals below this count as exact.
pub const EXACT_LEVEL: f64 = 1e-12;

/// Residual floor below which samples are left out of a slope fit.
const ROUNDOFF: f64 = 1e-14;

/// `|Ξ² + R(X, Y, Θ) − 1|` at grid node `i`, with ξ and ϱ − 1 given.
///
/// X solves the model relation `x q(θ) = 1 − ξ² − ϱ²` with
/// `x = X(1 + ∂_ξ A)` and A truncated after its order-2 part; Θ and Ξ
/// follow the generating relations to the same order.
pub fn residual(metric: &MetricJet, jet: &PhaseJet, i: usize, xi: f64, rho_m1: f64) -> f64 {
    let (y, w) = (jet.y[i], jet.omega);
    let (ell, ell_y, gamma, beta, alpha) = (jet.ell[i], jet.ell_y[i], jet.gamma[i], jet.beta[i], jet.alpha[i]);
    let rho = 1.0 + rho_m1;
    let q = metric.q(w);
    let x_cap = (1.0 - xi * xi - rho * rho) / (rho * rho * q * (1.0 + ell + 2.0 * xi * gamma));
    let theta = jet.theta0[i] + rho_m1 * (w + jet.b2_y[i]) + x_cap * xi * ell_y;
    let big_xi = xi * (1.0 + ell) + 2.0 * alpha * x_cap + beta * rho_m1 + gamma * xi * xi;
    (big_xi * big_xi + metric.r0.eval(y, theta) + x_cap * metric.r1.eval(y, theta) - 1.0).abs()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualSample {
    pub y: f64,
    pub omega: f64,
    pub xi_hat: f64,
    pub rho_hat: f64,
    pub residuals: Vec<f64>,
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub metric: String,
    pub eps: Vec<f64>,
    pub samples: Vec<ResidualSample>,
    /// Slope of the sup over samples of the residual; `None` when every
    /// residual is exact.
    pub slope: Option<f64>,
    /// Sample with the largest residual at the smallest ε.
    pub worst: Option<usize>,
    pub max_residual: f64,
    pub exact: bool,
    pub passed: bool,
}

fn slope(eps: &[f64], res: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = eps.iter().zip(res).filter(|(_, &r)| r > ROUNDOFF).map(|(e, r)| (e.ln(), r.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Random (Y, ω, ξ̂, ϱ̂) with ξ = εξ̂, ϱ − 1 = ε²ϱ̂ over a decreasing ε
/// sequence. resid(ε) is the sup over samples, and the slope of
/// log resid against log ε must reach [`SLOPE_THRESHOLD`].
pub fn verify_generating_function(metric: &MetricJet, jets: &[PhaseJet], eps: &[f64], n_samples: usize, seed: u64) -> Result<ResidualReport> {
    if jets.is_empty() || n_samples == 0 {
        return Err(PhaseError::Config("need at least one jet and one sample".into()));
    }
    if eps.len() < 2 || eps.iter().any(|&e| !(e > 0.0 && e < 1.0)) || eps.windows(2).any(|w| w[1] >= w[0]) {
        return Err(PhaseError::Config("ε grid must decrease inside (0, 1) with at least two values".into()));
    }
    if jets.iter().any(|j| j.metric != metric.name) {
        return Err(PhaseError::Config("jets were built for a different metric".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let jet = &jets[rng.random_range(0..jets.len())];
        let i = rng.random_range(0..jet.y.len());
        let xi_hat: f64 = rng.random_range(-1.0..1.0);
        let rho_hat: f64 = rng.random_range(-1.0..1.0);
        let residuals: Vec<f64> = eps.iter().map(|&e| residual(metric, jet, i, e * xi_hat, e * e * rho_hat)).collect();
        let slope = slope(eps, &residuals);
        samples.push(ResidualSample { y: jet.y[i], omega: jet.omega, xi_hat, rho_hat, residuals, slope });
    }
    let sup: Vec<f64> = (0..eps.len()).map(|k| samples.iter().map(|s| s.residuals[k]).fold(0.0, f64::max)).collect();
    let max_residual = sup.iter().copied().fold(0.0, f64::max);
    let exact = max_residual <= EXACT_LEVEL;
    let slope = if exact { None } else { slope(eps, &sup) };
    let last = eps.len() - 1;
    let worst = (!exact).then(|| (0..samples.len()).max_by(|&a, &b| samples[a].residuals[last].total_cmp(&samples[b].residuals[last])).unwrap());
    let passed = exact || slope.is_some_and(|s| s >= SLOPE_THRESHOLD);
    Ok(ResidualReport { metric: metric.name.clone(), eps: eps.to_vec(), samples, slope, worst, max_residual, exact, passed })
}
