use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{AiryError, Result};
use crate::eval;
use crate::phase;

/// The first `k` zeros ω_k of Ai(-ω) with L′(ω_k).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AiryZeroTable {
    #[serde(rename = "K")]
    pub k: usize,
    pub zeros: Vec<f64>,
    pub lprimes: Vec<f64>,
    pub tolerance: f64,
}

impl AiryZeroTable {
    /// `∫₀^∞ Ai²(x - ω_k) dx = Ai′(-ω_k)²`, the squared norm of the k-th
    /// profile (1-based `k`). Equals `L′(ω_k) / 2π`.
    pub fn profile_norm(&self, k: usize) -> f64 {
        self.lprimes[k - 1] / (2.0 * PI)
    }
}

/// `∫₀^∞ Ai²(x - ω) dx = Ai′(-ω)² + ω Ai(-ω)²`.
pub fn ai_squared_integral(omega: f64) -> Result<f64> {
    let f = crate::airy(-omega)?;
    Ok(f.aip * f.aip + omega * f.ai * f.ai)
}

const ASYMPTOTIC_FROM: f64 = 9.0;
const TOLERANCE: f64 = 1e-13;

pub fn airy_zeros(k: usize) -> Result<AiryZeroTable> {
    if !(1..=100_000).contains(&k) {
        return Err(AiryError::Domain(format!("zero count must be in 1..=100000, got {k}")));
    }
    let mut zeros = Vec::with_capacity(k);
    let mut lprimes = Vec::with_capacity(k);
    for i in 1..=k {
        let z = zero(i)?;
        if let Some(&prev) = zeros.last() {
            if z <= prev {
                return Err(AiryError::Bracket { index: i });
            }
        }
        lprimes.push(phase::phase_l(z, 0)?.derivative);
        zeros.push(z);
    }
    Ok(AiryZeroTable { k, zeros, lprimes, tolerance: TOLERANCE })
}

fn zero(index: usize) -> Result<f64> {
    let guess = (3.0 * PI * (4.0 * index as f64 - 1.0) / 8.0).powf(2.0 / 3.0);
    let half = (0.4 * PI / guess.sqrt()).min(0.5);
    let target = 2.0 * PI * index as f64;
    let asym = guess > ASYMPTOTIC_FROM;
    // g is increasing through the zero in the asymptotic case and has the
    // sign of Ai(-ω) otherwise.
    let g = |w: f64| -> f64 {
        if asym {
            phase::phase_l(w, 0).map(|p| p.value - target).unwrap_or(f64::NAN)
        } else {
            eval::full(-w).ai
        }
    };
    let (mut lo, mut hi) = (guess - half, guess + half);
    let (glo, ghi) = (g(lo), g(hi));
    if !(glo * ghi < 0.0) {
        return Err(AiryError::Bracket { index });
    }
    let lo_sign = glo.signum();
    while hi - lo > 1e-7 * guess.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if g(mid).signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut w = 0.5 * (lo + hi);
    for _ in 0..6 {
        let step = if asym {
            let p = phase::phase_l(w, 0)?;
            -(p.value - target) / p.derivative
        } else {
            let f = eval::full(-w);
            f.ai / f.aip
        };
        w += step;
        if step.abs() <= 1e-16 * w {
            break;
        }
    }
    if !(w > lo - 1e-9 && w < hi + 1e-9) {
        return Err(AiryError::Bracket { index });
    }
    Ok(w)
}
