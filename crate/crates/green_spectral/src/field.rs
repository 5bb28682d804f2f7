use std::io::Write;

use model_domain::WaveParams;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::grid::Grid;

/// How a field was truncated and how large the neglected part may be.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Truncation {
    pub method: String,
    pub k_max: Option<usize>,
    pub n_range: Option<(i64, i64)>,
    pub theta_nodes: usize,
    pub theta_step: f64,
    pub tail_estimate: f64,
    pub tolerance: f64,
}

/// Complex samples on a (t, x, y) grid, stored t-major then x then y.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexField {
    pub params: WaveParams,
    pub grid: Grid,
    pub values: Vec<Complex64>,
    pub truncation: Truncation,
}

impl ComplexField {
    pub fn index(&self, it: usize, ix: usize, iy: usize) -> usize {
        (it * self.grid.x.len() + ix) * self.grid.y_len() + iy
    }

    pub fn at(&self, it: usize, ix: usize, iy: usize) -> Complex64 {
        self.values[self.index(it, ix, iy)]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Largest |value| on one time slice.
    pub fn max_abs_at_t(&self, it: usize) -> f64 {
        let n = self.grid.x.len() * self.grid.y_len();
        self.values[it * n..(it + 1) * n].iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Relative sup-norm distance to another field on the same grid.
    pub fn rel_linf_distance(&self, other: &ComplexField) -> Option<f64> {
        if self.grid != other.grid {
            return None;
        }
        let diff = self.values.iter().zip(&other.values).fold(0.0f64, |m, (a, b)| m.max((a - b).norm()));
        Some(diff / other.max_abs())
    }

    /// CSV with header `t,x,y,re,im` (an extra `y2` column in three dimensions).
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let three = self.grid.y.len() == 2;
        if three {
            writeln!(w, "t,x,y,y2,re,im")?;
        } else {
            writeln!(w, "t,x,y,re,im")?;
        }
        for it in 0..self.grid.t.len() {
            let t = self.grid.t.get(it);
            for ix in 0..self.grid.x.len() {
                let x = self.grid.x.get(ix);
                for iy in 0..self.grid.y_len() {
                    let y = self.grid.y_point(iy);
                    let v = self.at(it, ix, iy);
                    if three {
                        writeln!(w, "{t:.17e},{x:.17e},{:.17e},{:.17e},{:.17e},{:.17e}", y[0], y[1], v.re, v.im)?;
                    } else {
                        writeln!(w, "{t:.17e},{x:.17e},{:.17e},{:.17e},{:.17e}", y[0], v.re, v.im)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Metadata for the JSON sidecar: parameters, grid and truncation.
    pub fn sidecar(&self) -> serde_json::Value {
        serde_json::json!({
            "params": self.params,
            "grid": self.grid,
            "truncation": self.truncation,
            "samples": self.values.len(),
            "max_abs": self.max_abs(),
        })
    }
}
