use model_domain::WaveParams;
use serde::{Deserialize, Serialize};

use crate::error::{CausticError, Result};
use crate::phase::{LModel, ModelPhase, PhasePoint};

/// One point of the projected Lagrangian of V_N in rescaled variables:
/// x = aX, t = √a·T, with (𝒮, 𝒯) the rescaled s and ϱ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LagrangianPoint {
    pub n: i64,
    pub omega_dir: Vec<f64>,
    pub s: f64,
    pub t_script: f64,
    pub x_scaled: f64,
    pub t_scaled: f64,
    pub y: Vec<f64>,
    /// B′ was below its asymptotic range and left out of the T equation.
    pub b_prime_dropped: bool,
}

impl LagrangianPoint {
    /// The phase variables and space-time point this sample stands for.
    pub fn phase_point(&self, params: &WaveParams) -> Result<PhasePoint> {
        let q = params.q(&self.omega_dir)?;
        let ra = params.a.sqrt();
        let q16 = q.powf(1.0 / 6.0);
        Ok(PhasePoint {
            s: ra * q16 * self.s,
            varrho: ra * q16 * self.t_script,
            alpha: params.a * q.cbrt() * (1.0 + self.t_script * self.t_script),
            t: ra * self.t_scaled,
            x: params.a * self.x_scaled,
        })
    }

    /// Model phase matching the L expansion used for this point.
    pub fn phase(&self, params: &WaveParams) -> Result<ModelPhase> {
        ModelPhase::new(params, self.n, &self.omega_dir, LModel::new(!self.b_prime_dropped))
    }
}

/// Rectangular (𝒮, 𝒯) sample box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub omega_dir: Vec<f64>,
    pub s_range: (f64, f64),
    pub t_range: (f64, f64),
    pub s_count: usize,
    pub t_count: usize,
    /// Box bound M₀ on |𝒮| and |𝒯|.
    pub m0: f64,
}

impl SampleSpec {
    pub fn square(dim: usize, half: f64, count: usize) -> Self {
        let mut omega_dir = vec![0.0; dim];
        omega_dir[0] = 1.0;
        SampleSpec { omega_dir, s_range: (-half, half), t_range: (-half, half), s_count: count, t_count: count, m0: half }
    }

    fn axis(r: (f64, f64), n: usize) -> Vec<f64> {
        if n == 1 {
            return vec![0.5 * (r.0 + r.1)];
        }
        (0..n).map(|i| r.0 + (r.1 - r.0) * i as f64 / (n - 1) as f64).collect()
    }
}

/// Projection of the V_N Lagrangian at unit tangential frequency:
/// `X = 1 + 𝒯² - 𝒮²`,
/// `T = 2(1 + aq𝒜)^{1/2} q^{-1/2}(𝒮 + 𝒯 + 2N𝒜^{1/2}(1 - (3/4)B′(λq^{1/2}𝒜^{3/2})))`,
/// `-y = √a(F ω + a G ∇q)` with 𝒜 = 1 + 𝒯², λ = a^{3/2}/h. Samples with
/// X < 0 lie outside the domain and are skipped.
pub fn project_lagrangian(params: &WaveParams, n: i64, spec: &SampleSpec) -> Result<Vec<LagrangianPoint>> {
    params.validate()?;
    let box_ok = |r: (f64, f64)| r.0 <= r.1 && r.0.abs() <= spec.m0 && r.1.abs() <= spec.m0;
    if !box_ok(spec.s_range) || !box_ok(spec.t_range) || spec.s_count == 0 || spec.t_count == 0 {
        return Err(CausticError::Domain(format!("sample box exceeds M₀ = {}", spec.m0)));
    }
    let q = params.q(&spec.omega_dir)?;
    let a = params.a;
    let lambda = a.powf(1.5) / params.h;
    let mut out = Vec::new();
    for &tt in &SampleSpec::axis(spec.t_range, spec.t_count) {
        let calligraphic_a = 1.0 + tt * tt;
        let omega = a * q.cbrt() * calligraphic_a / params.h.powf(2.0 / 3.0);
        let u = lambda * q.sqrt() * calligraphic_a.powf(1.5);
        debug_assert!((u - omega.powf(1.5)).abs() <= 1e-9 * u.max(1.0));
        let l = LModel::for_omega(omega);
        let factor = if l.with_b { l.slope_factor(omega) } else { 1.0 };
        let stretch = (1.0 + a * q * calligraphic_a).sqrt();
        for &ss in &SampleSpec::axis(spec.s_range, spec.s_count) {
            let x_scaled = calligraphic_a - ss * ss;
            if x_scaled < 0.0 {
                continue;
            }
            let t_scaled = 2.0 * stretch / q.sqrt() * (ss + tt + 2.0 * n as f64 * calligraphic_a.sqrt() * factor);
            let f = t_scaled / stretch;
            let g = calligraphic_a * t_scaled / (3.0 * stretch) + (ss * x_scaled + tt) / (3.0 * q.sqrt());
            let phase = ModelPhase::new(params, n, &spec.omega_dir, LModel::new(false))?;
            let y = spec
                .omega_dir
                .iter()
                .zip(&phase.grad_q)
                .map(|(w, gq)| -a.sqrt() * (f * w + a * g * gq))
                .collect();
            out.push(LagrangianPoint {
                n,
                omega_dir: spec.omega_dir.clone(),
                s: ss,
                t_script: tt,
                x_scaled,
                t_scaled,
                y,
                b_prime_dropped: !l.with_b,
            });
        }
    }
    Ok(out)
}
