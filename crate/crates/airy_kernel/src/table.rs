use crate::error::{AiryError, Result};
use crate::eval;

/// Ai tabulated on a uniform grid with Ai and Ai′ at each node, evaluated
/// by quintic Hermite interpolation (Ai″ = zAi). Relative error is about
/// 1e-9 on [-400, 14] with step 0.01. Arguments outside the table fall
/// back to the direct evaluation.
#[derive(Debug, Clone)]
pub struct AiryTable {
    lo: f64,
    step: f64,
    ai: Vec<f64>,
    aip: Vec<f64>,
}

impl AiryTable {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo < hi && step > 0.0 && lo.is_finite() && hi.is_finite()) {
            return Err(AiryError::Domain(format!("bad Airy table [{lo}, {hi}] step {step}")));
        }
        let n = ((hi - lo) / step).ceil() as usize + 1;
        let mut ai = Vec::with_capacity(n);
        let mut aip = Vec::with_capacity(n);
        for i in 0..n {
            let f = eval::full(lo + i as f64 * step);
            ai.push(f.ai);
            aip.push(f.aip);
        }
        Ok(AiryTable { lo, step, ai, aip })
    }

    pub fn hi(&self) -> f64 {
        self.lo + (self.ai.len() - 1) as f64 * self.step
    }

    pub fn ai(&self, z: f64) -> f64 {
        let u = (z - self.lo) / self.step;
        let i = u.floor();
        if !(i >= 0.0) || i as usize + 1 >= self.ai.len() {
            return eval::full(z).ai;
        }
        let i = i as usize;
        let t = u - i as f64;
        let s = self.step;
        let z0 = self.lo + i as f64 * s;
        let z1 = z0 + s;
        let (f0, d0) = (self.ai[i], self.aip[i]);
        let (f1, d1) = (self.ai[i + 1], self.aip[i + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        let t4 = t3 * t;
        let t5 = t4 * t;
        let h0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
        let h1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
        let h2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
        let h4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
        let h5 = 0.5 * (t3 - 2.0 * t4 + t5);
        f0 * h0 + s * d0 * h1 + s * s * z0 * f0 * h2 + f1 * (1.0 - h0) + s * d1 * h4 + s * s * z1 * f1 * h5
    }
}
