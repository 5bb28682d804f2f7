use green_spectral::{spectral_green, FieldError, Grid, Result};
use model_domain::WaveParams;
use serde::{Deserialize, Serialize};

use crate::images::{images_green, TermEnergy};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub rel_linf: f64,
    pub spectral_max: f64,
    pub n_range: (i64, i64),
    pub k_max: usize,
    pub energies: Vec<TermEnergy>,
}

/// Relative sup-norm distance between the reflected-wave sum and the
/// spectral sum on one grid. `None` truncations are chosen adaptively.
pub fn equivalence_check(
    params: &WaveParams,
    grid: &Grid,
    n_max: Option<usize>,
    k_max: Option<usize>,
) -> Result<EquivalenceReport> {
    let spec = spectral_green(params, grid, k_max)?;
    let img = images_green(params, grid, n_max, 1e-4)?;
    let spectral_max = spec.max_abs();
    let rel_linf = if spectral_max == 0.0 {
        img.field.max_abs()
    } else {
        img.field
            .rel_linf_distance(&spec)
            .ok_or_else(|| FieldError::Domain("grid mismatch".into()))?
    };
    Ok(EquivalenceReport {
        rel_linf,
        spectral_max,
        n_range: img.field.truncation.n_range.unwrap_or((0, 0)),
        k_max: spec.truncation.k_max.unwrap_or(0),
        energies: img.energies,
    })
}
