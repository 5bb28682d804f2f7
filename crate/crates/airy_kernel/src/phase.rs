use std::f64::consts::{FRAC_PI_2, PI};

use crate::bseries;
use crate::error::{AiryError, Result};
use crate::eval;

/// L(ω) and L′(ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseL {
    pub omega: f64,
    pub value: f64,
    pub derivative: f64,
}

const ASYMPTOTIC_FROM: f64 = 9.0;

/// `2 atan2(Q, P)` and `P² + Q²` for ω > 9, so that
/// `L = (4/3)ω^{3/2} + π/2 - remainder` and `L′ = 2√ω / (P² + Q²)`.
pub(crate) fn asymptotic_parts(omega: f64) -> (f64, f64) {
    let (_, p, q, _, _) = eval::oscillatory_pqrs(omega);
    (2.0 * q.atan2(p), p * p + q * q)
}

/// `(4/3)ω^{3/2} + π/2 - L(ω)` without cancellation, for ω > 9.
pub(crate) fn remainder(omega: f64) -> f64 {
    asymptotic_parts(omega).0
}

fn leading(omega: f64) -> f64 {
    4.0 / 3.0 * omega * omega.sqrt() + FRAC_PI_2
}

/// L(ω) on the continuous increasing branch with L(0) = π/3.
///
/// `b_order = 0` gives the full-accuracy value. For `b_order ≥ 1` and
/// ω ≥ 1 the value is instead the truncated expansion
/// `(4/3)ω^{3/2} + π/2 - Σ_{k≤b_order} b_k ω^{-3k/2}`, which is what the
/// truncation study compares against the exact value.
pub fn phase_l(omega: f64, b_order: usize) -> Result<PhaseL> {
    if !omega.is_finite() {
        return Err(AiryError::Domain(format!("non-finite ω {omega}")));
    }
    if b_order > 0 && omega >= 1.0 {
        let u = omega * omega.sqrt();
        let b = bseries::b_series(u, b_order)?;
        let db_du = bseries::b_series_du(u, b_order)?;
        return Ok(PhaseL {
            omega,
            value: leading(omega) - b,
            derivative: 2.0 * omega.sqrt() - db_du * 1.5 * omega.sqrt(),
        });
    }
    if omega > ASYMPTOTIC_FROM {
        let (rem, pq) = asymptotic_parts(omega);
        return Ok(PhaseL { omega, value: leading(omega) - rem, derivative: 2.0 * omega.sqrt() / pq });
    }
    let x = -omega;
    if x > 9.0 {
        // Deep shadow: L = 2 atan(Ai/Bi), L′ → 0 with Bi² growth.
        let r = eval::ai_over_bi(x);
        let f = eval::full(x);
        let derivative = if f.bi.is_finite() { 2.0 / (PI * f.bi * f.bi * (1.0 + r * r)) } else { 0.0 };
        return Ok(PhaseL { omega, value: 2.0 * r.atan(), derivative });
    }
    let f = eval::full(x);
    let derivative = 2.0 / (PI * (f.ai * f.ai + f.bi * f.bi));
    if omega <= 0.0 {
        // Same branch as below, written to avoid cancellation near 0.
        return Ok(PhaseL { omega, value: 2.0 * f.ai.atan2(f.bi), derivative });
    }
    let theta = f.bi.atan2(f.ai);
    let raw = PI - 2.0 * theta;
    if omega < 1.0 {
        return Ok(PhaseL { omega, value: raw, derivative });
    }
    let target = leading(omega) - 5.0 / (24.0 * omega * omega.sqrt());
    // arg A₊ is defined mod 2π, so L is defined mod 4π.
    let m = ((target - raw) / (4.0 * PI)).round();
    let value = raw + 4.0 * PI * m;
    if (value - target).abs() > FRAC_PI_2 {
        return Err(AiryError::Precision(format!(
            "branch tracking for L at ω = {omega}: offset {} from the asymptotic branch",
            value - target
        )));
    }
    Ok(PhaseL { omega, value, derivative })
}
