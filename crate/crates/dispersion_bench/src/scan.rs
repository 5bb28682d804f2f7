use green_images::images_green;
use green_spectral::{fft_y, required_period, Axis, Grid, SpectralKernel, ThetaGrid};
use model_domain::WaveParams;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::fit::{Regime, Window};

/// Points with |y| < MASK_C0 · t lie behind the front and are skipped.
pub const MASK_C0: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Spectral,
    Images,
    /// Values handed in by the caller.
    Supplied,
}

/// Tangential search range at a given t sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YRange {
    /// `|y| ≤ c · t`.
    Shell(f64),
    Fixed(f64, f64),
    /// One centre per t sample, common half-width.
    Centered { centers: Vec<f64>, half: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanBox {
    pub x: (f64, f64),
    pub y: YRange,
    pub mask: f64,
}

impl ScanBox {
    /// x ∈ [0, 2a], |y| ≤ c·t.
    pub fn shell(params: &WaveParams, c: f64) -> Self {
        Self { x: (0.0, 2.0 * params.a), y: YRange::Shell(c), mask: MASK_C0 }
    }

    fn y_bounds(&self, i: usize, t: f64) -> (f64, f64) {
        match &self.y {
            YRange::Shell(c) => (-c * t, c * t),
            YRange::Fixed(lo, hi) => (*lo, *hi),
            YRange::Centered { centers, half } => (centers[i] - half, centers[i] + half),
        }
    }

    fn admits(&self, i: usize, t: f64, x: f64, y: f64) -> bool {
        let (lo, hi) = self.y_bounds(i, t);
        x >= self.x.0.max(0.0) && x <= self.x.1 && y >= lo && y <= hi && y.abs() >= self.mask * t
    }

    fn y_abs_max(&self, ts: &[f64]) -> f64 {
        (0..ts.len()).fold(0.0f64, |m, i| {
            let (lo, hi) = self.y_bounds(i, ts[i]);
            m.max(lo.abs()).max(hi.abs())
        })
    }
}

/// Steps are in units of h.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub x_step: f64,
    pub y_step: f64,
    pub tol: f64,
    pub max_refine: usize,
    pub images_rel_stop: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { x_step: 2.0, y_step: 0.5, tol: 0.02, max_refine: 4, images_rel_stop: 1e-8 }
    }
}

/// A decay scan, optionally carrying a power-law fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayFit {
    pub params: WaveParams,
    pub method: Method,
    pub t_samples: Vec<f64>,
    pub sup_values: Vec<f64>,
    /// (x, y) of the maximizer at each t.
    pub argmax: Vec<[f64; 2]>,
    pub refinements: Vec<usize>,
    /// Reflection index when the sample is a caustic peak.
    pub caustic: Vec<Option<i64>>,
    pub fitted_exponent: Option<f64>,
    pub fit_residual: Option<f64>,
    pub fit_samples: Vec<usize>,
    pub window: Option<Window>,
    pub regime: Vec<Regime>,
    pub warnings: Vec<String>,
}

impl DecayFit {
    /// A scan built from given samples, e.g. a fixture or an earlier run.
    pub fn from_samples(params: &WaveParams, t: Vec<f64>, sup: Vec<f64>) -> Self {
        let n = t.len();
        Self {
            params: params.clone(),
            method: Method::Supplied,
            t_samples: t,
            sup_values: sup,
            argmax: vec![[params.a, 0.0]; n],
            refinements: vec![0; n],
            caustic: vec![None; n],
            fitted_exponent: None,
            fit_residual: None,
            fit_samples: Vec::new(),
            window: None,
            regime: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Best {
    sup: f64,
    x: f64,
    y: f64,
}

impl Best {
    fn none() -> Self {
        Self { sup: 0.0, x: f64::NAN, y: f64::NAN }
    }

    fn offer(&mut self, v: f64, x: f64, y: f64) {
        if v > self.sup {
            *self = Self { sup: v, x, y };
        }
    }
}

struct Spectral {
    kernel: SpectralKernel,
    theta: ThetaGrid,
}

impl Spectral {
    fn new(params: &WaveParams, bx: &ScanBox, ts: &[f64]) -> Result<Self> {
        let kernel = SpectralKernel::new(params, None)?.with_airy_table()?;
        let t_max = ts.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        let theta = ThetaGrid::new(params, required_period(params, bx.y_abs_max(ts), t_max, bx.x.1));
        Ok(Self { kernel, theta })
    }

    fn block(&self, t: f64, xs: &[f64], ys: &[f64]) -> Result<Vec<Vec<f64>>> {
        let (prof, _) = self.kernel.theta_profiles(&self.theta, xs, &[t])?;
        let pts: Vec<Vec<f64>> = ys.iter().map(|&y| vec![y]).collect();
        Ok(prof.iter().map(|p| self.theta.synthesize(&p[0], &pts).iter().map(|v| v.norm()).collect()).collect())
    }

    /// Modulus along the admitted part of the y range at every x, using
    /// the FFT when the range is wide.
    fn coarse(&self, bx: &ScanBox, ts: &[f64], xs: &[f64], dy: f64) -> Result<Vec<Best>> {
        let mut best = vec![Best::none(); ts.len()];
        for chunk in xs.chunks(16) {
            let (prof, _) = self.kernel.theta_profiles(&self.theta, chunk, ts)?;
            for (ix, p) in prof.iter().enumerate() {
                let x = chunk[ix];
                for (it, &t) in ts.iter().enumerate() {
                    let (lo, hi) = bx.y_bounds(it, t);
                    let n = ((hi - lo) / dy).ceil() as usize + 1;
                    let m_fft = (2.0 * std::f64::consts::PI * self.theta.h / (self.theta.step * dy)).ceil().max(16.0);
                    if (n * self.theta.len()) as f64 > 4.0 * m_fft * m_fft.log2() {
                        let (step, vals) = self.theta.synthesize_fft(&p[it], dy);
                        for (k, v) in vals.iter().enumerate() {
                            let y = fft_y(k, vals.len(), step);
                            if bx.admits(it, t, x, y) {
                                best[it].offer(v.norm(), x, y);
                            }
                        }
                    } else {
                        let ys: Vec<Vec<f64>> = (0..n)
                            .map(|j| lo + (hi - lo) * j as f64 / (n - 1).max(1) as f64)
                            .filter(|&y| bx.admits(it, t, x, y))
                            .map(|y| vec![y])
                            .collect();
                        for (y, v) in ys.iter().zip(self.theta.synthesize(&p[it], &ys)) {
                            best[it].offer(v.norm(), x, y[0]);
                        }
                    }
                }
            }
        }
        Ok(best)
    }
}

fn images_block(params: &WaveParams, rel_stop: f64, t: f64, xs: &[f64], ys: &[f64]) -> Result<Vec<Vec<f64>>> {
    let grid = Grid::new(Axis::points(vec![t]), Axis::points(xs.to_vec()), vec![Axis::points(ys.to_vec())]);
    let sum = images_green(params, &grid, None, rel_stop)?;
    Ok((0..xs.len()).map(|ix| (0..ys.len()).map(|iy| sum.field.at(0, ix, iy).norm()).collect()).collect())
}

fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
}

/// Sup of |P(t, x, y)| over the box for each t. A coarse pass is followed
/// by local 9 × 9 refinements around the maximizer, each quartering the
/// steps, until the sup grows by less than `opts.tol`.
pub fn sup_scan(params: &WaveParams, t_grid: &[f64], bx: &ScanBox, method: Method, opts: &ScanOptions) -> Result<DecayFit> {
    params.validate()?;
    if params.d != 2 {
        return Err(BenchError::Domain(format!("scans are implemented for d = 2, got d = {}", params.d)));
    }
    let h = params.h;
    if t_grid.is_empty() || t_grid.iter().any(|&t| !(t > h) || !t.is_finite()) {
        return Err(BenchError::Domain("t samples must be finite and exceed h".into()));
    }
    if !(bx.x.1 > bx.x.0.max(0.0)) {
        return Err(BenchError::Domain(format!("empty x range {:?}", bx.x)));
    }
    if let YRange::Centered { centers, .. } = &bx.y {
        if centers.len() != t_grid.len() {
            return Err(BenchError::Domain("one y centre per t sample is required".into()));
        }
    }
    let xs = axis(bx.x.0.max(0.0), bx.x.1, opts.x_step * h);
    let dy = opts.y_step * h;
    let spectral = match method {
        Method::Spectral => Some(Spectral::new(params, bx, t_grid)?),
        Method::Images => None,
        Method::Supplied => return Err(BenchError::Domain("a supplied scan cannot be recomputed".into())),
    };
    let block = |t: f64, xs: &[f64], ys: &[f64]| match &spectral {
        Some(s) => s.block(t, xs, ys),
        None => images_block(params, opts.images_rel_stop, t, xs, ys),
    };
    let coarse = match &spectral {
        Some(s) => s.coarse(bx, t_grid, &xs, dy)?,
        None => {
            let mut out = Vec::with_capacity(t_grid.len());
            for (it, &t) in t_grid.iter().enumerate() {
                let (lo, hi) = bx.y_bounds(it, t);
                let ys = axis(lo, hi, dy);
                let vals = block(t, &xs, &ys)?;
                let mut b = Best::none();
                for (ix, row) in vals.iter().enumerate() {
                    for (iy, &v) in row.iter().enumerate() {
                        if bx.admits(it, t, xs[ix], ys[iy]) {
                            b.offer(v, xs[ix], ys[iy]);
                        }
                    }
                }
                out.push(b);
            }
            out
        }
    };

    let mut fit = DecayFit {
        params: params.clone(),
        method,
        t_samples: t_grid.to_vec(),
        sup_values: Vec::new(),
        argmax: Vec::new(),
        refinements: Vec::new(),
        caustic: vec![None; t_grid.len()],
        fitted_exponent: None,
        fit_residual: None,
        fit_samples: Vec::new(),
        window: None,
        regime: Vec::new(),
        warnings: Vec::new(),
    };
    for (it, &t) in t_grid.iter().enumerate() {
        let mut b = coarse[it];
        if b.sup <= 0.0 {
            return Err(BenchError::Domain(format!("no admitted point in the box at t = {t}")));
        }
        let (mut sx, mut sy) = (opts.x_step * h, dy);
        let mut levels = 0;
        let mut settled = false;
        while levels < opts.max_refine {
            levels += 1;
            let lx: Vec<f64> = (-4..=4).map(|i| b.x + i as f64 * sx / 4.0).filter(|&x| x >= bx.x.0.max(0.0) && x <= bx.x.1).collect();
            let ly: Vec<f64> = (-4..=4).map(|j| b.y + j as f64 * sy / 4.0).filter(|&y| bx.admits(it, t, b.x, y)).collect();
            sx /= 4.0;
            sy /= 4.0;
            let before = b.sup;
            for (ix, row) in block(t, &lx, &ly)?.iter().enumerate() {
                for (iy, &v) in row.iter().enumerate() {
                    b.offer(v, lx[ix], ly[iy]);
                }
            }
            if (b.sup - before) / before < opts.tol {
                settled = true;
                break;
            }
        }
        if !settled {
            fit.warnings.push(format!("t = {t}: sup still moving by more than {} after {levels} refinements", opts.tol));
        }
        fit.sup_values.push(b.sup);
        fit.argmax.push([b.x, b.y]);
        fit.refinements.push(levels);
    }
    Ok(fit)
}
