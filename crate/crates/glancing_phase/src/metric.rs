use std::fmt;
use std::sync::Arc;

use crate::error::{PhaseError, Result};

pub type SymbolFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Step for the finite-difference fallback.
pub const FD_STEP: f64 = 1e-5;

/// Central difference with one Richardson step.
pub fn richardson<F: Fn(f64) -> f64>(f: F, x: f64, step: f64) -> f64 {
    let d = |s: f64| (f(x + s) - f(x - s)) / (2.0 * s);
    (4.0 * d(step / 2.0) - d(step)) / 3.0
}

/// A principal symbol in (Y, η), d = 2, with optional closed-form
/// first derivatives.
#[derive(Clone)]
pub struct Symbol {
    f: SymbolFn,
    dy: Option<SymbolFn>,
    deta: Option<SymbolFn>,
}

impl Symbol {
    pub fn new(f: SymbolFn) -> Self {
        Self { f, dy: None, deta: None }
    }

    pub fn with_derivatives(f: SymbolFn, dy: SymbolFn, deta: SymbolFn) -> Self {
        Self { f, dy: Some(dy), deta: Some(deta) }
    }

    pub fn eval(&self, y: f64, eta: f64) -> f64 {
        (self.f)(y, eta)
    }

    pub fn d_y(&self, y: f64, eta: f64) -> f64 {
        match &self.dy {
            Some(g) => g(y, eta),
            None => richardson(|s| (self.f)(s, eta), y, FD_STEP),
        }
    }

    pub fn d_eta(&self, y: f64, eta: f64) -> f64 {
        match &self.deta {
            Some(g) => g(y, eta),
            None => richardson(|s| (self.f)(y, s), eta, FD_STEP),
        }
    }
}

/// Boundary data of the metric symbol: R₀ = R|_{x=0}, R₁ = ∂_x R|_{x=0}.
/// The full symbol is taken as R₀ + x R₁.
#[derive(Clone)]
pub struct MetricJet {
    pub name: String,
    pub d: usize,
    pub r0: Symbol,
    pub r1: Symbol,
}

impl fmt::Debug for MetricJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MetricJet").field("name", &self.name).field("d", &self.d).finish()
    }
}

fn poly(c: &[f64], y: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * y + v)
}

fn dpoly(c: &[f64], y: f64) -> f64 {
    c.iter().enumerate().skip(1).rev().fold(0.0, |acc, (k, &v)| acc * y + k as f64 * v)
}

impl MetricJet {
    pub fn new(name: &str, r0: Symbol, r1: Symbol) -> Result<Self> {
        let m = Self { name: name.into(), d: 2, r0, r1 };
        m.validate()?;
        Ok(m)
    }

    /// `R₀ = p(Y) η²`, `R₁ = r(Y) η²` with polynomial coefficients listed
    /// from the constant term up.
    pub fn polynomial(name: &str, p: &[f64], r: &[f64]) -> Result<Self> {
        if p.is_empty() || r.is_empty() {
            return Err(PhaseError::Config("empty coefficient list".into()));
        }
        let sym = |c: Vec<f64>| {
            let (c1, c2, c3) = (c.clone(), c.clone(), c);
            Symbol::with_derivatives(
                Arc::new(move |y, e| poly(&c1, y) * e * e),
                Arc::new(move |y, e| dpoly(&c2, y) * e * e),
                Arc::new(move |y, e| 2.0 * poly(&c3, y) * e),
            )
        };
        Self::new(name, sym(p.to_vec()), sym(r.to_vec()))
    }

    /// `friedlander`: R₀ = η², R₁ = η². `test`: R₀ = (1+Y²)η², R₁ = (1+Y)η².
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "friedlander" => Self::polynomial(name, &[1.0], &[1.0]),
            "test" => Self::polynomial(name, &[1.0, 0.0, 1.0], &[1.0, 1.0]),
            _ => Err(PhaseError::Config(format!("unknown metric '{name}'"))),
        }
    }

    pub fn q(&self, omega: f64) -> f64 {
        self.r1.eval(0.0, omega)
    }

    /// R₀(0,η) = η², ∂_Y R₀(0,η) = 0, and R₁ > 0 near Y = 0.
    pub fn validate(&self) -> Result<()> {
        if self.d != 2 {
            return Err(PhaseError::Domain(format!("only d = 2 is supported, got {}", self.d)));
        }
        for eta in [-2.0, -1.0, 1.0, 2.0f64] {
            let r0 = self.r0.eval(0.0, eta);
            if !((r0 - eta * eta).abs() <= 1e-12 * (1.0 + eta * eta)) {
                return Err(PhaseError::Config(format!("R0(0, {eta}) = {r0}, expected {}", eta * eta)));
            }
            let g = self.r0.d_y(0.0, eta);
            if !(g.abs() <= 1e-8) {
                return Err(PhaseError::Config(format!("d_Y R0(0, {eta}) = {g}, expected 0")));
            }
            for y in [-0.05, 0.0, 0.05] {
                if !(self.r1.eval(y, eta) > 0.0) {
                    return Err(PhaseError::Config(format!("R1({y}, {eta}) is not positive")));
                }
            }
        }
        Ok(())
    }
}
