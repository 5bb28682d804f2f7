use airy_kernel::{airy, phase_l};
use green_spectral::{
    required_period, ComplexField, FieldError, Grid, Result, ThetaGrid, Truncation, AIRY_NEGLIGIBLE,
};
use model_domain::WaveParams;
use num_complex::Complex64;
use quadrature::{panels, PlateauTaper, Rule};
use std::f64::consts::PI;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// ω quadrature shared by every reflection index: Gauss–Legendre panels
/// sized to the fastest phase among `|N| ≤ n_cap` and `|t| ≤ t_max`.
#[derive(Debug, Clone)]
pub struct OmegaNodes {
    pub omega: Vec<f64>,
    /// Quadrature weight times the α cutoff.
    pub weight: Vec<f64>,
    /// e^{-iL(ω)} at each node.
    pub step: Vec<Complex64>,
    /// Smooth step in L: 0 below L = π/4, 1 above L = 3π/2. The complement
    /// holds no Airy zero, so its sum over all N vanishes.
    pub propagating: Vec<f64>,
    pub n_cap: usize,
    pub t_max: f64,
}

impl OmegaNodes {
    pub fn new(params: &WaveParams, n_cap: usize, t_max: f64) -> Result<Self> {
        let h = params.h;
        let h23 = h.powf(2.0 / 3.0);
        let inner = (1.0 - params.delta).max(1e-3);
        let q_min = params.qform.min_eigenvalue() * inner * inner;
        let mu_min = q_min.cbrt() / h23;
        let lo = (mu_min * params.a - AIRY_NEGLIGIBLE).min(-2.0);
        let hi = params.cutoff.zero / h23;
        let q_max = {
            let outer = 1.0 + params.delta;
            let r = params.qform.rows();
            let tr: f64 = (0..r.len()).map(|i| r[i][i]).sum();
            tr * outer * outer
        };
        let drho = 0.5 * h23 * q_max.powf(2.0 / 3.0) / inner / h;
        let rate = |w: f64| {
            let lp = phase_l(w, 0).map(|p| p.derivative).unwrap_or(0.0);
            n_cap as f64 * lp + t_max.abs() * drho + 2.0 * w.max(0.0).sqrt() + 1.0
        };
        let rule = Rule::new(12);
        let mut omega = Vec::new();
        let mut weight = Vec::new();
        let mut step = Vec::new();
        let mut propagating = Vec::new();
        let rise = PlateauTaper::new(0.0);
        let (l0, l1) = (0.25 * PI, 1.5 * PI);
        for p in panels(lo, hi, |w| PI / rate(w)) {
            for (w, wt) in rule.nodes_on(p.a, p.b) {
                let c = params.cutoff.eval(h23 * w);
                if c == 0.0 {
                    continue;
                }
                omega.push(w);
                weight.push(wt * c);
                let l = phase_l(w, 0)?.value;
                step.push(Complex64::from_polar(1.0, -l));
                propagating.push(1.0 - rise.eval(((l - l0) / (l1 - l0)).clamp(0.0, 1.0)));
            }
        }
        Ok(OmegaNodes { omega, weight, step, propagating, n_cap, t_max })
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

/// Per-θ reflected-wave sums: `out[n][ix][it]` for N = n_lo + n.
fn theta_terms(
    params: &WaveParams,
    nodes: &OmegaNodes,
    theta: &[f64],
    psi: f64,
    xs: &[f64],
    ts: &[f64],
    n_lo: i64,
    n_hi: i64,
    split: bool,
) -> Result<Vec<Vec<Vec<Complex64>>>> {
    let h = params.h;
    let h23 = h.powf(2.0 / 3.0);
    let q = params.q(theta)?;
    let q13 = q.cbrt();
    let mu = q13 / h23;
    let t2: f64 = theta.iter().map(|v| v * v).sum();
    let count = (n_hi - n_lo + 1) as usize;
    let mut out = vec![vec![vec![Complex64::new(0.0, 0.0); ts.len()]; xs.len()]; count];
    // Source factor and ρ per node.
    let mut src = Vec::with_capacity(nodes.len());
    let mut rho = Vec::with_capacity(nodes.len());
    for &w in &nodes.omega {
        let arg = mu * params.a - w;
        src.push(if arg > AIRY_NEGLIGIBLE { 0.0 } else { airy(arg)?.ai });
        rho.push((t2 + h23 * w * q13 * q13).max(0.0).sqrt());
    }
    let start: Vec<Complex64> = nodes.step.iter().map(|s| s.powi(n_lo as i32)).collect();
    let mut amp = vec![0.0; nodes.len()];
    let mut z = vec![Complex64::new(0.0, 0.0); nodes.len()];
    for (ix, &x) in xs.iter().enumerate() {
        for (i, &w) in nodes.omega.iter().enumerate() {
            let arg = mu * x - w;
            amp[i] = if src[i] == 0.0 || arg > AIRY_NEGLIGIBLE {
                0.0
            } else {
                let keep = if split { nodes.propagating[i] } else { 1.0 };
                keep * psi * nodes.weight[i] * mu * airy(arg)?.ai * src[i]
            };
        }
        for (it, &t) in ts.iter().enumerate() {
            for i in 0..nodes.len() {
                z[i] = if amp[i] == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    amp[i] * Complex64::from_polar(1.0, t * rho[i] / h) * start[i]
                };
            }
            for slot in out.iter_mut() {
                let mut s = Complex64::new(0.0, 0.0);
                for i in 0..nodes.len() {
                    s += z[i];
                    z[i] *= nodes.step[i];
                }
                slot[ix][it] = s;
            }
        }
    }
    Ok(out)
}

/// One reflected wave V_N on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReflectedWaveTerm {
    pub n: i64,
    pub field: ComplexField,
    pub alpha_support: (f64, f64),
}

/// Row of the per-N energy table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TermEnergy {
    pub n: i64,
    pub sup: f64,
    pub mean_square: f64,
}

fn theta_grid_for(params: &WaveParams, grid: &Grid) -> ThetaGrid {
    let ts = grid.t.values();
    let xs = grid.x.values();
    let t_max = ts.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    let x_max = xs.iter().fold(0.0f64, |m, &x| m.max(x));
    ThetaGrid::new(params, required_period(params, grid.y_extent(), t_max, x_max))
}

fn check(params: &WaveParams, grid: &Grid) -> Result<()> {
    params.validate()?;
    grid.check_nyquist(params.h, params.d - 1)
}

/// V_N for every N in `n_lo..=n_hi` on the grid, sharing all per-θ work.
pub fn reflected_terms(params: &WaveParams, grid: &Grid, n_lo: i64, n_hi: i64) -> Result<Vec<ReflectedWaveTerm>> {
    terms_impl(params, grid, n_lo, n_hi, false)
}

/// Propagating part of each V_N: the ω integrand is multiplied by the
/// smooth step in L from [`OmegaNodes::propagating`]. The discarded part
/// sums to zero over all N but decays only slowly in N.
pub fn propagating_terms(params: &WaveParams, grid: &Grid, n_lo: i64, n_hi: i64) -> Result<Vec<ReflectedWaveTerm>> {
    terms_impl(params, grid, n_lo, n_hi, true)
}

fn terms_impl(params: &WaveParams, grid: &Grid, n_lo: i64, n_hi: i64, split: bool) -> Result<Vec<ReflectedWaveTerm>> {
    check(params, grid)?;
    if n_hi < n_lo {
        return Err(FieldError::Domain(format!("empty reflection range {n_lo}..={n_hi}")));
    }
    let ts = grid.t.values();
    let xs = grid.x.values();
    let t_max = ts.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    let n_cap = n_lo.unsigned_abs().max(n_hi.unsigned_abs()) as usize;
    let nodes = OmegaNodes::new(params, n_cap, t_max)?;
    let tg = theta_grid_for(params, grid);
    let per_theta: Vec<Result<Vec<Vec<Vec<Complex64>>>>> = (0..tg.len())
        .into_par_iter()
        .map(|n| theta_terms(params, &nodes, &tg.theta(n), tg.window[n], &xs, &ts, n_lo, n_hi, split))
        .collect();
    let per_theta: Vec<_> = per_theta.into_iter().collect::<Result<_>>()?;
    let ys: Vec<Vec<f64>> = (0..grid.y_len()).map(|i| grid.y_point(i)).collect();
    let h23 = params.h.powf(2.0 / 3.0);
    let alpha_support = (nodes.omega.first().copied().unwrap_or(0.0) * h23, params.cutoff.zero);
    let mut terms = Vec::new();
    for (slot, n) in (n_lo..=n_hi).enumerate() {
        let mut values = Vec::with_capacity(grid.len());
        let mut g = vec![Complex64::new(0.0, 0.0); tg.len()];
        for it in 0..ts.len() {
            for ix in 0..xs.len() {
                for (k, th) in per_theta.iter().enumerate() {
                    g[k] = th[slot][ix][it];
                }
                values.extend(tg.synthesize(&g, &ys));
            }
        }
        terms.push(ReflectedWaveTerm {
            n,
            field: ComplexField {
                params: params.clone(),
                grid: grid.clone(),
                values,
                truncation: Truncation {
                    method: if split { "propagating_wave" } else { "reflected_wave" }.into(),
                    k_max: None,
                    n_range: Some((n, n)),
                    theta_nodes: tg.len(),
                    theta_step: tg.step,
                    tail_estimate: 0.0,
                    tolerance: 1e-9,
                },
            },
            alpha_support,
        });
    }
    Ok(terms)
}

pub fn v_n_field(params: &WaveParams, n: i64, grid: &Grid) -> Result<ReflectedWaveTerm> {
    Ok(reflected_terms(params, grid, n, n)?.remove(0))
}

/// Sum of reflected waves with the reflection range grown until three
/// consecutive terms on each side fall below `rel_stop` times the running
/// field maximum. Terms are the propagating parts, so `energies` describe
/// those.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageSum {
    pub field: ComplexField,
    pub energies: Vec<TermEnergy>,
}

pub fn images_green(params: &WaveParams, grid: &Grid, n_max: Option<usize>, rel_stop: f64) -> Result<ImageSum> {
    check(params, grid)?;
    let mut cap: i64 = n_max.map_or(4, |n| n as i64);
    loop {
        let terms = propagating_terms(params, grid, -cap, cap)?;
        let energies: Vec<TermEnergy> = terms
            .iter()
            .map(|t| TermEnergy {
                n: t.n,
                sup: t.field.max_abs(),
                mean_square: t.field.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / t.field.values.len() as f64,
            })
            .collect();
        let mut total = vec![Complex64::new(0.0, 0.0); grid.len()];
        // Ascending |N| from 0 outward, positive before negative.
        let order: Vec<usize> = {
            let mid = cap as usize;
            let mut o = vec![mid];
            for k in 1..=cap as usize {
                o.push(mid + k);
                o.push(mid - k);
            }
            o
        };
        for &i in &order {
            for (acc, v) in total.iter_mut().zip(&terms[i].field.values) {
                *acc += v;
            }
        }
        let field_max = total.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        let small = |e: &TermEnergy| e.sup < rel_stop * field_max;
        let n = energies.len();
        let converged = n_max.is_some()
            || (energies[n - 3..].iter().all(small) && energies[..3].iter().all(small));
        if converged || cap >= 64 {
            let first = &terms[0].field;
            let tail = energies.first().map_or(0.0, |e| e.sup).max(energies.last().map_or(0.0, |e| e.sup));
            let field = ComplexField {
                params: params.clone(),
                grid: grid.clone(),
                values: total,
                truncation: Truncation {
                    method: "images".into(),
                    k_max: None,
                    n_range: Some((-cap, cap)),
                    theta_nodes: first.truncation.theta_nodes,
                    theta_step: first.truncation.theta_step,
                    tail_estimate: tail,
                    tolerance: rel_stop * field_max,
                },
            };
            return Ok(ImageSum { field, energies });
        }
        cap *= 2;
    }
}
