use std::f64::consts::PI;

use airy_kernel::{airy_zeros, phase_l};
use num_complex::Complex64;
use quadrature::{panels, PlateauTaper, Rule};
use serde::{Deserialize, Serialize};

use green_spectral::{FieldError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AiryPoissonReport {
    pub support: (f64, f64),
    /// Tapered reflection sum `Σ_N σ(N/N_max) ∫ φ e^{-iNL}`.
    pub lhs: Complex64,
    /// `2π Σ_k φ(ω_k) / L′(ω_k)`.
    pub rhs: Complex64,
    pub n_max: usize,
    pub k_max: usize,
    /// Taper plateau: σ = 1 for |N| ≤ `taper_flat` N_max.
    pub taper_flat: f64,
    /// Largest |∫ φ e^{-iNL}| over the tapered band, a bound on the neglected tail.
    pub tail_estimate: f64,
    pub abs_discrepancy: f64,
}

const TAPER_FLAT: f64 = 0.5;

/// Checks `Σ_N e^{-iNL(ω)} = 2π Σ_k δ(ω - ω_k) / L′(ω_k)` against a test
/// function supported in `support`.
pub fn airy_poisson_check<F: Fn(f64) -> f64>(
    phi: F,
    support: (f64, f64),
    n_max: usize,
    tol: f64,
) -> Result<AiryPoissonReport> {
    let (lo, hi) = support;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(FieldError::Domain(format!("bad support [{lo}, {hi}]")));
    }
    if n_max == 0 {
        return Err(FieldError::Domain("N_max must be at least 1".into()));
    }
    // Zeros up to hi, with one spare.
    let k_hi = ((hi.max(0.0).powf(1.5) * 8.0 / (3.0 * PI) + 1.0) / 4.0).ceil() as usize + 2;
    if k_hi > 100_000 {
        return Err(FieldError::Domain("support extends beyond the zero table".into()));
    }
    let table = airy_zeros(k_hi)?;
    let mut rhs = 0.0;
    let mut k_max = 0;
    for (k, (&w, &lp)) in table.zeros.iter().zip(&table.lprimes).enumerate() {
        if w > lo && w < hi {
            rhs += 2.0 * PI * phi(w) / lp;
            k_max = k + 1;
        }
    }
    // ω nodes resolving e^{-i N_max L}.
    let rule = Rule::new(12);
    let rate = |w: f64| n_max as f64 * phase_l(w, 0).map(|p| p.derivative).unwrap_or(1.0) + 1.0;
    let mut nodes = Vec::new();
    for p in panels(lo, hi, |w| 1.5 / rate(w)) {
        for (w, wt) in rule.nodes_on(p.a, p.b) {
            let l = phase_l(w, 0)?.value;
            nodes.push((wt * phi(w), l));
        }
    }
    let taper = PlateauTaper::new(TAPER_FLAT);
    let mut moments = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut phasor: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); nodes.len()];
    let steps: Vec<Complex64> = nodes.iter().map(|&(_, l)| Complex64::from_polar(1.0, -l)).collect();
    for m in moments.iter_mut() {
        let mut s = Complex64::new(0.0, 0.0);
        for (i, &(f, _)) in nodes.iter().enumerate() {
            s += f * phasor[i];
            phasor[i] *= steps[i];
        }
        *m = s;
    }
    // φ real: the N and -N moments are conjugate.
    let mut lhs = moments[0];
    let mut tail: f64 = 0.0;
    for n in 1..=n_max {
        let s = taper.eval(n as f64 / n_max as f64);
        lhs += s * (moments[n] + moments[n].conj());
        if n as f64 >= TAPER_FLAT * n_max as f64 {
            tail = tail.max(moments[n].norm());
        }
    }
    let rhs = Complex64::new(rhs, 0.0);
    let abs_discrepancy = (lhs - rhs).norm();
    let report = AiryPoissonReport {
        support,
        lhs,
        rhs,
        n_max,
        k_max,
        taper_flat: TAPER_FLAT,
        tail_estimate: tail,
        abs_discrepancy,
    };
    if abs_discrepancy > tol {
        return Err(FieldError::Precision(format!(
            "Airy-Poisson discrepancy {abs_discrepancy:.3e} exceeds {tol:.1e} at N_max = {n_max}"
        )));
    }
    Ok(report)
}

/// Doubles N_max from 8 until the discrepancy meets `tol` (cap 8192).
pub fn airy_poisson_adaptive<F: Fn(f64) -> f64>(phi: F, support: (f64, f64), tol: f64) -> Result<AiryPoissonReport> {
    let mut n = 8;
    loop {
        match airy_poisson_check(&phi, support, n, tol) {
            Ok(r) => return Ok(r),
            Err(FieldError::Precision(msg)) if n < 8192 => {
                let _ = msg;
                n *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}
