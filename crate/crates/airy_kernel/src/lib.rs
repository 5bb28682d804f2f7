//! Real-line Airy machinery: Ai and Ai′, the rotated solutions A±, the zeros
//! of Ai(-ω), the phase function L and its large-ω expansion.

mod bseries;
mod diag;
mod error;
mod eval;
mod phase;
mod table;
mod zeros;

use num_complex::Complex64;

pub use bseries::{b_coefficients, b_series, BFit};
pub use diag::{airy_sum_diagnostic, airy_sum_diagnostic_with, DiagVariant, Diagnostic};
pub use error::{AiryError, Result};
pub use eval::AiryFull;
pub use phase::{phase_l, PhaseL};
pub use table::AiryTable;
pub use zeros::{airy_zeros, ai_squared_integral, AiryZeroTable};

/// Ai and Ai′ at one real point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue {
    pub z: f64,
    pub ai: f64,
    pub aip: f64,
    pub abs_err_est: f64,
}

fn finite(z: f64) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(AiryError::Domain(format!("non-finite Airy argument {z}")))
    }
}

pub fn airy(z: f64) -> Result<AiryValue> {
    finite(z)?;
    let f = eval::full(z);
    Ok(AiryValue { z, ai: f.ai, aip: f.aip, abs_err_est: eval::ai_error_estimate(&f) })
}

/// Ai, Ai′, Bi, Bi′ together. Bi is infinite past z ≈ 104.
pub fn airy_full(z: f64) -> Result<AiryFull> {
    finite(z)?;
    Ok(eval::full(z))
}

/// `(A₊(z), A₋(z))` with `A±(z) = e^{∓iπ/3} Ai(e^{∓iπ/3} z)`.
///
/// On the real line `A₊(z) = (Ai(-z) - i Bi(-z))/2` and `A₋` is its conjugate.
pub fn airy_rotated(z: f64) -> Result<(Complex64, Complex64)> {
    finite(z)?;
    let f = eval::full(-z);
    let p = Complex64::new(0.5 * f.ai, -0.5 * f.bi);
    Ok((p, p.conj()))
}
