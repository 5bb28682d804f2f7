//! Uniform θ lattice carrying the window, and synthesis of the y dependence
//! `h^{-(d-1)} Σ_θ Δθ^{d-1} G(θ) e^{i y·θ/h}`.
//!
//! The trapezoid rule on a compactly supported smooth integrand is
//! spectrally accurate; its only artefact is periodic ghosting in y with
//! period `2πh/Δθ`, so the step is chosen from the y-extent that must stay
//! ghost-free.

use std::f64::consts::PI;

use model_domain::WaveParams;
use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

/// Lattice `θ = Δθ · j` restricted to the window annulus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaGrid {
    pub step: f64,
    /// Lattice indices, one entry per tangential dimension.
    pub index: Vec<Vec<i64>>,
    /// ψ(θ) at each node.
    pub window: Vec<f64>,
    pub h: f64,
}

/// y-period that keeps ghosts out of `|y| ≤ y_eval` for a field supported
/// where rays can reach by time `t_max`.
///
/// Beyond the ray support the field decays like the Fourier transform of
/// the window bump, roughly `exp(-√(2δ|y|/h))`; the margin makes that
/// factor about 1e-11.
pub fn required_period(params: &WaveParams, y_eval: f64, t_max: f64, x_max: f64) -> f64 {
    let margin = (300.0 * params.h / params.delta).max(1.0);
    y_eval + 1.25 * (t_max.abs() + x_max + params.a) + margin
}

impl ThetaGrid {
    pub fn new(params: &WaveParams, period: f64) -> Self {
        Self::with_step(params, 2.0 * PI * params.h / period)
    }

    pub fn with_step(params: &WaveParams, step: f64) -> Self {
        let dims = params.d - 1;
        let outer = 1.0 + params.delta;
        let jmax = (outer / step).ceil() as i64;
        let mut index = Vec::new();
        let mut window = Vec::new();
        let mut push = |idx: Vec<i64>| {
            let th: Vec<f64> = idx.iter().map(|&j| j as f64 * step).collect();
            let w = params.window(&th);
            if w > 0.0 {
                index.push(idx);
                window.push(w);
            }
        };
        if dims == 1 {
            for j in -jmax..=jmax {
                push(vec![j]);
            }
        } else {
            for i in -jmax..=jmax {
                for j in -jmax..=jmax {
                    push(vec![i, j]);
                }
            }
        }
        ThetaGrid { step, index, window, h: params.h }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.index.first().map_or(1, Vec::len)
    }

    pub fn theta(&self, n: usize) -> Vec<f64> {
        self.index[n].iter().map(|&j| j as f64 * self.step).collect()
    }

    pub fn period(&self) -> f64 {
        2.0 * PI * self.h / self.step
    }

    /// `h^{-(d-1)} Δθ^{d-1}`.
    pub fn scale(&self) -> f64 {
        (self.step / self.h).powi(self.dims() as i32)
    }

    /// Direct synthesis at arbitrary tangential points.
    pub fn synthesize(&self, g: &[Complex64], ys: &[Vec<f64>]) -> Vec<Complex64> {
        assert_eq!(g.len(), self.len());
        let scale = self.scale();
        ys.iter()
            .map(|y| {
                let mut s = Complex64::new(0.0, 0.0);
                if self.dims() == 1 {
                    // θ_j = jΔθ: advance the phasor z^j along runs of consecutive j.
                    let z = Complex64::from_polar(1.0, y[0] * self.step / self.h);
                    let mut cur = Complex64::new(0.0, 0.0);
                    let mut last: Option<i64> = None;
                    for (n, idx) in self.index.iter().enumerate() {
                        let j = idx[0];
                        cur = match last {
                            Some(l) if l + 1 == j => cur * z,
                            _ => Complex64::from_polar(1.0, y[0] * j as f64 * self.step / self.h),
                        };
                        last = Some(j);
                        s += g[n] * cur;
                    }
                } else {
                    for (n, idx) in self.index.iter().enumerate() {
                        let ph: f64 = idx.iter().zip(y).map(|(&j, &yy)| yy * j as f64).sum::<f64>() * self.step / self.h;
                        s += g[n] * Complex64::from_polar(1.0, ph);
                    }
                }
                s * scale
            })
            .collect()
    }

    /// FFT synthesis for d = 2 on the uniform y grid `y_m = m Δy`,
    /// `|m| ≤ M/2`, with `Δy ≤ max_dy` and `Δy Δθ / h = 2π / M`.
    /// Returns `(Δy, values)` with values ordered from `m = -M/2` upward.
    pub fn synthesize_fft(&self, g: &[Complex64], max_dy: f64) -> (f64, Vec<Complex64>) {
        assert_eq!(self.dims(), 1, "FFT synthesis is one-dimensional");
        let need = (2.0 * PI * self.h / (self.step * max_dy)).ceil() as usize;
        let m = need.next_power_of_two().max(16);
        let dy = 2.0 * PI * self.h / (self.step * m as f64);
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (n, idx) in self.index.iter().enumerate() {
            let j = idx[0].rem_euclid(m as i64) as usize;
            buf[j] += g[n];
        }
        // Σ_j g_j e^{2πi j m / M} is an inverse DFT without normalization.
        let mut planner = FftPlanner::new();
        planner.plan_fft_inverse(m).process(&mut buf);
        let scale = self.scale();
        let half = m / 2;
        let mut out = Vec::with_capacity(m);
        for k in 0..m {
            let src = (k + half) % m;
            out.push(buf[src] * scale);
        }
        (dy, out)
    }
}

/// y coordinate of entry `k` returned by [`ThetaGrid::synthesize_fft`].
pub fn fft_y(k: usize, m: usize, dy: f64) -> f64 {
    (k as f64 - (m / 2) as f64) * dy
}
