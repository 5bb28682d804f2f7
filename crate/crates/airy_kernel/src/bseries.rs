use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{AiryError, Result};
use crate::phase;

pub const B1: f64 = 5.0 / 24.0;
pub const MAX_ORDER: usize = 6;
const FIT_ORDER: usize = 11;

/// Coefficients b_1..b_6 of `B(u) = Σ b_k u^{-k}`; b_1 is exact, the rest
/// come from a least-squares fit on ω ∈ [10, 40].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BFit {
    pub coeffs: [f64; MAX_ORDER],
    pub rms_residual: f64,
    pub max_residual: f64,
    pub samples: usize,
}

pub fn b_coefficients() -> &'static BFit {
    static CELL: OnceLock<BFit> = OnceLock::new();
    CELL.get_or_init(fit)
}

fn fit() -> BFit {
    let samples = 301;
    let u0 = 10f64.powf(1.5);
    // Extra high-order columns absorb the tail so that b_2..b_6 are not biased by it.
    let free = FIT_ORDER - 1;
    let mut a = DMatrix::<f64>::zeros(samples, free);
    let mut y = DVector::<f64>::zeros(samples);
    let mut us = Vec::with_capacity(samples);
    for i in 0..samples {
        let omega = 10.0 + 30.0 * i as f64 / (samples - 1) as f64;
        let u = omega * omega.sqrt();
        us.push(u);
        y[i] = phase::remainder(omega) - B1 / u;
        for j in 0..free {
            a[(i, j)] = (u0 / u).powi(j as i32 + 2);
        }
    }
    let svd = a.clone().svd(true, true);
    let c = svd.solve(&y, 1e-14).expect("SVD with U and V computed");
    let r = &a * &c - &y;
    let mut coeffs = [0.0; MAX_ORDER];
    coeffs[0] = B1;
    for j in 0..MAX_ORDER - 1 {
        coeffs[j + 1] = c[j] * u0.powi(j as i32 + 2);
    }
    BFit {
        coeffs,
        rms_residual: (r.norm_squared() / samples as f64).sqrt(),
        max_residual: r.amax(),
        samples,
    }
}

fn check(u: f64, order: usize) -> Result<()> {
    if !(u >= 1.0) {
        return Err(AiryError::Domain(format!("B(u) needs u ≥ 1, got {u}")));
    }
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(AiryError::Domain(format!("B order must be in 1..={MAX_ORDER}, got {order}")));
    }
    Ok(())
}

/// Truncated series `Σ_{k≤order} b_k u^{-k}`.
pub fn b_series(u: f64, order: usize) -> Result<f64> {
    check(u, order)?;
    let b = &b_coefficients().coeffs;
    Ok((1..=order).map(|k| b[k - 1] * u.powi(-(k as i32))).sum())
}

pub(crate) fn b_series_du(u: f64, order: usize) -> Result<f64> {
    check(u, order)?;
    let b = &b_coefficients().coeffs;
    Ok((1..=order).map(|k| -(k as f64) * b[k - 1] * u.powi(-(k as i32) - 1)).sum())
}
