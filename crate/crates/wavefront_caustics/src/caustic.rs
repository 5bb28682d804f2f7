use model_domain::WaveParams;
use serde::{Deserialize, Serialize};

use crate::error::{CausticError, Result};
use crate::phase::{LModel, ModelPhase, PhasePoint};

const NEWTON_ITERS: usize = 50;
const CONTINUATION_STEPS: usize = 8;

/// A degenerate critical point of the V_N phase: gradient, Hessian
/// determinant and the cubic term along the null direction all vanish.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CausticEvent {
    pub n: i64,
    pub t_n: f64,
    pub x_n: f64,
    pub y_n: Vec<f64>,
    pub predicted_amp: f64,
    pub hessian_residual: f64,
    pub gradient_residual: f64,
    /// Third derivative along the null direction.
    pub third_derivative: f64,
    /// First non-vanishing coefficient of the phase reduced to the null
    /// direction, `∂²φ/∂α² / 2` at the point.
    pub quartic_coefficient: f64,
    pub phase_point: PhasePoint,
    pub b_prime_dropped: bool,
    pub newton_iterations: usize,
}

/// Largest N for which the caustic is located: min(a^{-1/2}, a^{1/2}h^{-1/3}).
pub fn max_reflection(params: &WaveParams) -> usize {
    let a = params.a;
    (a.powf(-0.5)).min(a.sqrt() * params.h.powf(-1.0 / 3.0)).floor() as usize
}

/// `h^{-d}(h/t)^{(d-2)/2} N^{-1/4} a^{1/8} h^{1/4}`.
pub fn amplitude_law(params: &WaveParams, n: i64, t: f64) -> f64 {
    let d = params.d as f64;
    let h = params.h;
    h.powf(-d) * (h / t).powf((d - 2.0) / 2.0) * (n as f64).powf(-0.25) * params.a.powf(0.125) * h.powf(0.25)
}

fn residuals(ph: &ModelPhase, z: &[f64; 5]) -> [f64; 5] {
    let p = PhasePoint { s: z[0], varrho: z[1], alpha: z[2], t: z[3], x: z[4] };
    let g = ph.gradient(&p);
    [g[0], g[1], g[2], ph.hessian_det(&p), ph.third_along(&p, ph.kernel(&p))]
}

fn solve5(mut m: [[f64; 5]; 5], mut b: [f64; 5]) -> Option<[f64; 5]> {
    for c in 0..5 {
        let piv = (c..5).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))?;
        if m[piv][c].abs() < 1e-300 {
            return None;
        }
        m.swap(c, piv);
        b.swap(c, piv);
        for r in c + 1..5 {
            let f = m[r][c] / m[c][c];
            for k in c..5 {
                m[r][k] -= f * m[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = [0.0; 5];
    for r in (0..5).rev() {
        x[r] = (b[r] - (r + 1..5).map(|k| m[r][k] * x[k]).sum::<f64>()) / m[r][r];
    }
    Some(x)
}

fn newton(ph: &ModelPhase, z: &mut [f64; 5]) -> Result<usize> {
    for it in 0..NEWTON_ITERS {
        let f = residuals(ph, z);
        let scale = 1.0 + z.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if f.iter().all(|v| v.abs() < 1e-14 * scale) {
            return Ok(it);
        }
        let mut jac = [[0.0; 5]; 5];
        for j in 0..5 {
            let step = 1e-7 * (1.0 + z[j].abs());
            let mut zp = *z;
            let mut zm = *z;
            zp[j] += step;
            zm[j] -= step;
            let (fp, fm) = (residuals(ph, &zp), residuals(ph, &zm));
            for i in 0..5 {
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * step);
            }
        }
        let dz = solve5(jac, f.map(|v| -v))
            .ok_or_else(|| CausticError::Convergence("singular Newton system".into()))?;
        for j in 0..5 {
            z[j] += dz[j];
        }
    }
    let f = residuals(ph, z);
    Err(CausticError::Convergence(format!("Newton did not converge in {NEWTON_ITERS} iterations, residuals {f:?}")))
}

/// Locates the N-th degenerate point along the unit direction `dir`,
/// restricted to 1 ≤ N ≤ [`max_reflection`].
pub fn caustic_locate_dir(params: &WaveParams, n: i64, dir: &[f64]) -> Result<CausticEvent> {
    params.validate()?;
    let n_top = max_reflection(params);
    if n < 1 || n as usize > n_top {
        return Err(CausticError::Domain(format!("N = {n} outside 1..={n_top}")));
    }
    degenerate_point(params, n, dir)
}

/// The degenerate point of the N-th phase for any N ≥ 1, without the
/// range restriction. Newton starts from the a → 0 closed form
/// (s = ϱ = 0, T = 4N) and follows a from a/8 up to the target in eight
/// steps.
pub fn degenerate_point(params: &WaveParams, n: i64, dir: &[f64]) -> Result<CausticEvent> {
    params.validate()?;
    if n < 1 {
        return Err(CausticError::Domain(format!("N = {n} must be at least 1")));
    }
    let h23 = params.h.powf(2.0 / 3.0);
    let target = params.q(dir)?.cbrt() * params.a / h23;
    let l = LModel::for_omega(target);
    let mut z = [0.0; 5];
    let mut iterations = 0;
    let mut phase = None;
    for step in 1..=CONTINUATION_STEPS {
        let mut p = params.clone();
        p.a = params.a * step as f64 / CONTINUATION_STEPS as f64;
        let ph = ModelPhase::new(&p, n, dir, l.clone())?;
        if step == 1 {
            let ra = p.a.sqrt();
            z = [0.0, 0.0, p.a * ph.kappa, 4.0 * n as f64 * ra / ph.q.sqrt(), p.a];
        }
        iterations += newton(&ph, &mut z)?;
        phase = Some(ph);
    }
    let ph = phase.expect("at least one continuation step");
    let p = PhasePoint { s: z[0], varrho: z[1], alpha: z[2], t: z[3], x: z[4] };
    let g = ph.gradient(&p);
    let kernel = ph.kernel(&p);
    Ok(CausticEvent {
        n,
        t_n: p.t,
        x_n: p.x,
        y_n: ph.y(&p),
        predicted_amp: amplitude_law(params, n, p.t),
        hessian_residual: ph.hessian_det(&p).abs(),
        gradient_residual: g.iter().fold(0.0f64, |m, v| m.max(v.abs())),
        third_derivative: ph.third_along(&p, kernel),
        quartic_coefficient: 0.5 * ph.c(&p),
        phase_point: p,
        b_prime_dropped: !l.with_b,
        newton_iterations: iterations,
    })
}

/// [`caustic_locate_dir`] along the first coordinate direction.
pub fn caustic_locate(params: &WaveParams, n: i64) -> Result<CausticEvent> {
    let mut dir = vec![0.0; params.d - 1];
    dir[0] = 1.0;
    caustic_locate_dir(params, n, &dir)
}
