use quadrature::{Bump, PlateauTaper};
use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};

/// The symmetric positive-definite form R₁(0) acting on tangential frequencies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QForm {
    rows: Vec<Vec<f64>>,
}

impl QForm {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > 2 || rows.iter().any(|r| r.len() != n) {
            return Err(ModelError::Config(format!("q form must be 1x1 or 2x2, got {n} rows")));
        }
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Err(ModelError::Config("q form has non-finite entries".into()));
        }
        let q = QForm { rows };
        if n == 2 && (q.rows[0][1] - q.rows[1][0]).abs() > 1e-14 * (1.0 + q.rows[0][1].abs()) {
            return Err(ModelError::Config("q form must be symmetric".into()));
        }
        if q.min_eigenvalue() <= 0.0 {
            return Err(ModelError::Config("q form must be positive definite".into()));
        }
        Ok(q)
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim).map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
        QForm { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn min_eigenvalue(&self) -> f64 {
        match self.dim() {
            1 => self.rows[0][0],
            _ => {
                let (a, b, c) = (self.rows[0][0], self.rows[0][1], self.rows[1][1]);
                let m = 0.5 * (a + c);
                let r = (0.25 * (a - c) * (a - c) + b * b).sqrt();
                m - r
            }
        }
    }

    /// `q(θ) = θᵀ R θ`.
    pub fn eval(&self, theta: &[f64]) -> Result<f64> {
        if theta.len() != self.dim() {
            return Err(ModelError::Domain(format!(
                "frequency has {} components, form is {}-dimensional",
                theta.len(),
                self.dim()
            )));
        }
        let mut s = 0.0;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &r) in row.iter().enumerate() {
                s += theta[i] * r * theta[j];
            }
        }
        Ok(s)
    }
}

/// Smooth cutoff in the rescaled glancing variable α = h^{2/3} ω: equal to
/// 1 for α ≤ `full` and 0 for α ≥ `zero`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaCutoff {
    pub full: f64,
    pub zero: f64,
}

impl Default for AlphaCutoff {
    fn default() -> Self {
        AlphaCutoff { full: 1.0, zero: 1.5 }
    }
}

impl AlphaCutoff {
    pub fn eval(&self, alpha: f64) -> f64 {
        if alpha <= self.full {
            return 1.0;
        }
        if alpha >= self.zero {
            return 0.0;
        }
        // Taper on [full, zero] mapped to s ∈ [0, 1].
        PlateauTaper::new(0.0).eval((alpha - self.full) / (self.zero - self.full))
    }
}

/// One experiment: dimension, semiclassical parameter, source depth,
/// frequency window and tangential form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaveParams {
    pub d: usize,
    pub h: f64,
    pub a: f64,
    /// Half-width of the annulus `|θ| ∈ [1 - δ, 1 + δ]` carrying ψ.
    pub delta: f64,
    pub qform: QForm,
    pub cutoff: AlphaCutoff,
}

impl WaveParams {
    pub fn new(d: usize, h: f64, a: f64, delta: f64, qform: QForm) -> Result<Self> {
        let p = WaveParams { d, h, a, delta, qform, cutoff: AlphaCutoff::default() };
        p.validate()?;
        Ok(p)
    }

    /// Isotropic two-dimensional experiment with δ = 0.2.
    pub fn isotropic_2d(h: f64, a: f64) -> Result<Self> {
        Self::new(2, h, a, 0.2, QForm::identity(1))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.d == 2 || self.d == 3) {
            return Err(ModelError::Config(format!("dimension must be 2 or 3, got {}", self.d)));
        }
        if !(self.h > 0.0 && self.h <= 1.0) {
            return Err(ModelError::Config(format!("h must lie in (0, 1], got {}", self.h)));
        }
        if !(self.a >= 0.0 && self.a.is_finite()) {
            return Err(ModelError::Config(format!("a must be finite and ≥ 0, got {}", self.a)));
        }
        if !(self.delta > 0.0 && self.delta <= 0.2) {
            return Err(ModelError::Config(format!("window half-width must lie in (0, 0.2], got {}", self.delta)));
        }
        if self.qform.dim() != self.d - 1 {
            return Err(ModelError::Config(format!(
                "q form is {}x{}, expected {}x{}",
                self.qform.dim(),
                self.qform.dim(),
                self.d - 1,
                self.d - 1
            )));
        }
        if !(self.cutoff.full > 0.0 && self.cutoff.zero > self.cutoff.full) {
            return Err(ModelError::Config("α cutoff needs 0 < full < zero".into()));
        }
        Ok(())
    }

    /// ψ(θ): C∞ bump in |θ| on `[1 - δ, 1 + δ]`, equal to 1 at |θ| = 1.
    pub fn window(&self, theta: &[f64]) -> f64 {
        let r = theta.iter().map(|t| t * t).sum::<f64>().sqrt();
        Bump::unit_peak(1.0, self.delta).eval(r)
    }

    pub fn q(&self, theta: &[f64]) -> Result<f64> {
        self.qform.eval(theta)
    }
}
