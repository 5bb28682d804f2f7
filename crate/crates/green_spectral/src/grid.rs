use serde::{Deserialize, Serialize};

use crate::error::{FieldError, Result};

/// One coordinate axis: a uniform range or an explicit list of points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Axis {
    Uniform { start: f64, step: f64, count: usize },
    Points { values: Vec<f64> },
}

impl Axis {
    pub fn uniform(start: f64, step: f64, count: usize) -> Self {
        Axis::Uniform { start, step, count }
    }

    /// Uniform axis covering `[lo, hi]` with spacing at most `max_step`.
    pub fn covering(lo: f64, hi: f64, max_step: f64) -> Self {
        if hi <= lo {
            return Axis::Points { values: vec![lo] };
        }
        let n = ((hi - lo) / max_step).ceil() as usize;
        Axis::Uniform { start: lo, step: (hi - lo) / n as f64, count: n + 1 }
    }

    pub fn points(values: Vec<f64>) -> Self {
        Axis::Points { values }
    }

    pub fn len(&self) -> usize {
        match self {
            Axis::Uniform { count, .. } => *count,
            Axis::Points { values } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> f64 {
        match self {
            Axis::Uniform { start, step, .. } => start + step * i as f64,
            Axis::Points { values } => values[i],
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values().iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    fn uniform_step(&self) -> Option<f64> {
        match self {
            Axis::Uniform { step, count, .. } if *count > 1 => Some(step.abs()),
            _ => None,
        }
    }
}

/// Sample points in (t, x, y); `y` has one axis per tangential dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub t: Axis,
    pub x: Axis,
    pub y: Vec<Axis>,
}

impl Grid {
    pub fn new(t: Axis, x: Axis, y: Vec<Axis>) -> Self {
        Grid { t, x, y }
    }

    pub fn len(&self) -> usize {
        self.t.len() * self.x.len() * self.y_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn y_len(&self) -> usize {
        self.y.iter().map(Axis::len).product()
    }

    /// Tangential point number `i` in row-major order.
    pub fn y_point(&self, i: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.y.len()];
        let mut rem = i;
        for (k, ax) in self.y.iter().enumerate().rev() {
            out[k] = ax.get(rem % ax.len());
            rem /= ax.len();
        }
        out
    }

    pub fn y_extent(&self) -> f64 {
        self.y.iter().map(|a| a.max_abs().powi(2)).sum::<f64>().sqrt()
    }

    /// Uniform t and y axes must sample at spacing ≤ h/8.
    pub fn check_nyquist(&self, h: f64, dims: usize) -> Result<()> {
        if self.y.len() != dims {
            return Err(FieldError::Config(format!("grid has {} y axes, expected {dims}", self.y.len())));
        }
        if self.is_empty() {
            return Err(FieldError::Config("empty grid".into()));
        }
        let limit = h / 8.0 * (1.0 + 1e-12);
        if let Some(s) = self.t.uniform_step() {
            if s > limit {
                return Err(FieldError::Config(format!("Δt = {s} exceeds h/8 = {}", h / 8.0)));
            }
        }
        for ax in &self.y {
            if let Some(s) = ax.uniform_step() {
                if s > limit {
                    return Err(FieldError::Config(format!("Δy = {s} exceeds h/8 = {}", h / 8.0)));
                }
            }
        }
        if self.x.values().iter().any(|&x| x < 0.0) {
            return Err(FieldError::Domain("grid reaches x < 0".into()));
        }
        Ok(())
    }
}
