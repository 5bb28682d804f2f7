use green_images::reflected_terms;
use green_spectral::{Axis, Grid};
use model_domain::WaveParams;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CausticError, Result};

/// Radius r₀ of the neighbourhood in units of √a.
pub const BALL_RADIUS: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapCount {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub count: usize,
    /// Reflection indices above threshold, ascending.
    pub contributing: Vec<i64>,
    /// sup over the ball of |V_N| for every scanned N.
    pub sups: Vec<(i64, f64)>,
    pub local_max: f64,
    /// T = t/√a and λ = a^{3/2}/h.
    pub t_scaled: f64,
    pub lambda: f64,
}

/// Sample grid for the ball {0 ≤ x′ ≤ a, |y′ - y| ≤ r₀√a, |t′ - t| ≤ r₀√a}.
pub fn ball_grid(params: &WaveParams, t: f64, y: f64) -> Grid {
    let r = BALL_RADIUS * params.a.sqrt();
    let ts = vec![t - r, t, t + r];
    let xs: Vec<f64> = (0..=4).map(|i| params.a * i as f64 / 4.0).collect();
    Grid::new(Axis::points(ts), Axis::points(xs), vec![Axis::covering(y - r, y + r, params.h / 8.0)])
}

/// Counts the N whose V_N exceeds `threshold` times the local field max
/// somewhere on the ball around (t, x, y). Scans N from -2 to
/// ⌈t/(4√a)⌉ + 3; the point x only enters through the ball, which spans
/// [0, a] in the normal direction. d = 2.
pub fn count_contributing(params: &WaveParams, t: f64, x: f64, y: f64, threshold: f64) -> Result<OverlapCount> {
    params.validate()?;
    if params.d != 2 {
        return Err(CausticError::Domain("overlap counts are implemented for d = 2".into()));
    }
    if !(threshold > 0.0 && threshold < 1.0) || !(t > 0.0) || !(x >= 0.0) {
        return Err(CausticError::Domain(format!("bad count request t = {t}, x = {x}, threshold = {threshold}")));
    }
    let ra = params.a.sqrt();
    let n_hi = (t / (4.0 * ra)).ceil() as i64 + 3;
    let n_lo = -2;
    let grid = ball_grid(params, t, y);
    let terms = reflected_terms(params, &grid, n_lo, n_hi)?;
    let mut total = vec![Complex64::new(0.0, 0.0); grid.len()];
    for term in &terms {
        for (acc, v) in total.iter_mut().zip(&term.field.values) {
            *acc += v;
        }
    }
    let local_max = total.iter().fold(0.0f64, |m, v| m.max(v.norm()));
    let sups: Vec<(i64, f64)> = terms.iter().map(|t| (t.n, t.field.max_abs())).collect();
    let contributing: Vec<i64> = sups.iter().filter(|(_, s)| *s > threshold * local_max).map(|(n, _)| *n).collect();
    Ok(OverlapCount {
        t,
        x,
        y,
        count: contributing.len(),
        contributing,
        sups,
        local_max,
        t_scaled: t / ra,
        lambda: params.a.powf(1.5) / params.h,
    })
}

/// Smallest C with count ≤ C(1 + Tλ^{-2}) at every sample.
pub fn fit_overlap_constant(samples: &[OverlapCount]) -> f64 {
    samples
        .iter()
        .map(|s| s.count as f64 / (1.0 + s.t_scaled / (s.lambda * s.lambda)))
        .fold(0.0, f64::max)
}
