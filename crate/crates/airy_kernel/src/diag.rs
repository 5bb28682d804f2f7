use std::sync::Mutex;

use crate::error::{AiryError, Result};
use crate::eval;
use crate::zeros::{airy_zeros, AiryZeroTable};

/// Which weighted Airy sum to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagVariant {
    /// Σ k^{-1/3} Ai²(b-ω_k), compared with L^{1/3}.
    Ai,
    /// Σ k^{-1/3} h^{2/3} Ai′²(b-ω_k) for b ≥ 0, compared with h^{2/3} L.
    AipPos,
    /// The same sum for b ≤ 0, compared with h^{1/3} L^{2/3}.
    AipNeg,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostic {
    pub sum: f64,
    pub bound_shape: f64,
    pub ratio: f64,
}

fn cached_zeros(count: usize) -> Result<Vec<f64>> {
    static CACHE: Mutex<Vec<f64>> = Mutex::new(Vec::new());
    let mut guard = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if guard.len() < count {
        *guard = airy_zeros(count)?.zeros;
    }
    Ok(guard[..count].to_vec())
}

pub fn airy_sum_diagnostic(l_count: usize, b: f64, variant: DiagVariant, h: f64) -> Result<Diagnostic> {
    validate(l_count, b, h)?;
    let zeros = cached_zeros(l_count)?;
    Ok(sum(&zeros, b, variant, h))
}

/// As [`airy_sum_diagnostic`] with a caller-supplied table (its first
/// `l_count` zeros are used).
pub fn airy_sum_diagnostic_with(
    table: &AiryZeroTable,
    l_count: usize,
    b: f64,
    variant: DiagVariant,
    h: f64,
) -> Result<Diagnostic> {
    validate(l_count, b, h)?;
    if l_count > table.zeros.len() {
        return Err(AiryError::Domain(format!(
            "table holds {} zeros, {l_count} requested",
            table.zeros.len()
        )));
    }
    Ok(sum(&table.zeros[..l_count], b, variant, h))
}

fn validate(l_count: usize, b: f64, h: f64) -> Result<()> {
    if !(1..=10_000).contains(&l_count) {
        return Err(AiryError::Domain(format!("L must be in 1..=10000, got {l_count}")));
    }
    if !(h > 0.0 && h <= 1.0) {
        return Err(AiryError::Domain(format!("h must be in (0, 1], got {h}")));
    }
    if !b.is_finite() {
        return Err(AiryError::Domain("non-finite b".into()));
    }
    Ok(())
}

fn sum(zeros: &[f64], b: f64, variant: DiagVariant, h: f64) -> Diagnostic {
    let l = zeros.len() as f64;
    let h23 = h.powf(2.0 / 3.0);
    let mut s = 0.0;
    for (i, &w) in zeros.iter().enumerate() {
        let f = eval::full(b - w);
        let weight = ((i + 1) as f64).powf(-1.0 / 3.0);
        s += weight
            * match variant {
                DiagVariant::Ai => f.ai * f.ai,
                DiagVariant::AipPos | DiagVariant::AipNeg => h23 * f.aip * f.aip,
            };
    }
    let bound_shape = match variant {
        DiagVariant::Ai => l.powf(1.0 / 3.0),
        DiagVariant::AipPos => h23 * l,
        DiagVariant::AipNeg => h.powf(1.0 / 3.0) * l.powf(2.0 / 3.0),
    };
    Diagnostic { sum: s, bound_shape, ratio: s / bound_shape }
}
