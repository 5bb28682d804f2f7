use glancing_phase::{symmetric_grid, verify_generating_function, MetricJet, PhaseJet, ResidualReport, EXACT_LEVEL};
use serde::Serialize;

use super::common::Output;
use crate::config::Config;
use crate::error::{CliError, Result};

/// `[phase]`: metric, jet grid and certificate sampling.
#[derive(Debug, Serialize)]
pub struct PhaseConfig {
    pub metric: String,
    /// Coefficients of p and r in R0 = p(Y)η², R1 = r(Y)η² for `polynomial`.
    pub p: Option<Vec<f64>>,
    pub r: Option<Vec<f64>>,
    pub omegas: Vec<f64>,
    pub y_max: f64,
    pub points: usize,
    pub eps: Vec<f64>,
    pub samples: usize,
    pub negative_control: bool,
}

impl PhaseConfig {
    pub fn read(cfg: &Config) -> Result<Self> {
        let metric = cfg.string("phase", "metric", "test");
        let (p, r) = (cfg.list("phase", "p")?, cfg.list("phase", "r")?);
        if (metric == "polynomial") != (p.is_some() && r.is_some()) {
            return Err(CliError::Config("[phase] p and r go together with metric = polynomial".into()));
        }
        let eps = match cfg.list("phase", "eps")? {
            Some(e) => e,
            None => (0..5).map(|k| 10f64.powf(-1.0 - 0.5 * k as f64)).collect(),
        };
        Ok(Self {
            metric,
            p,
            r,
            omegas: cfg.list("phase", "omegas")?.unwrap_or(vec![1.0, -1.0]),
            y_max: cfg.f64_or("phase", "y_max", 0.2)?,
            points: cfg.usize_or("phase", "points", 20)?,
            eps,
            samples: cfg.usize_or("phase", "samples", 60)?,
            negative_control: cfg.bool_or("phase", "negative_control", true)?,
        })
    }

    fn metric(&self) -> Result<MetricJet> {
        match (&self.p, &self.r) {
            (Some(p), Some(r)) => Ok(MetricJet::polynomial(&self.metric, p, r)?),
            _ => Ok(MetricJet::named(&self.metric)?),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PhaseResult {
    /// "exact", "passed" or "failed".
    pub status: &'static str,
    /// Largest |ℓ|, |B2|, |γ|, |β|, |α| over all jets.
    pub max_correction: f64,
    pub jets_zero: bool,
    pub report: ResidualReport,
    pub control: Option<ResidualReport>,
    pub jets: Vec<PhaseJet>,
}

pub fn run(conf: &PhaseConfig, seed: u64, out: &Output) -> Result<PhaseResult> {
    let metric = conf.metric()?;
    metric.validate()?;
    let grid = symmetric_grid(conf.y_max, conf.points);
    let jets = conf.omegas.iter().map(|&w| PhaseJet::build(&metric, w, &grid)).collect::<std::result::Result<Vec<_>, _>>()?;
    let max_correction = jets
        .iter()
        .flat_map(|j| [&j.ell, &j.b2, &j.gamma, &j.beta, &j.alpha].into_iter().flatten())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let report = verify_generating_function(&metric, &jets, &conf.eps, conf.samples, seed)?;
    let control = if conf.negative_control && !report.exact {
        let zeroed: Vec<PhaseJet> = jets.iter().map(PhaseJet::with_gamma_zeroed).collect();
        Some(verify_generating_function(&metric, &zeroed, &conf.eps, conf.samples, seed)?)
    } else {
        None
    };
    let status = if report.exact {
        "exact"
    } else if report.passed {
        "passed"
    } else {
        "failed"
    };
    let result = PhaseResult { status, max_correction, jets_zero: max_correction <= EXACT_LEVEL, report, control, jets };
    out.json("phase.json", conf, &result)?;
    if status == "failed" {
        return Err(CliError::Precision(format!("residual slope {:?} below the required order", result.report.slope)));
    }
    Ok(result)
}
