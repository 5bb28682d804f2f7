use std::fmt::Write;
use std::path::PathBuf;

use dispersion_bench::{
    caustic_scan, envelope_fit, fit_decay_exponent, sup_scan, DecayFit, EnvelopeFit, Method, ScanBox, ScanOptions, Window, YRange, MASK_C0,
};
use serde::Serialize;

use super::common::{Output, ParamsBlock};
use crate::config::{AxisSpec, Config};
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Sup over the wavefront shell at each t.
    Shell,
    /// Peak search around each degenerate time.
    Caustic,
    /// `t,sup` pairs read from a CSV file.
    Fixture,
}

/// `[scan]` of the decay command.
#[derive(Debug, Serialize)]
pub struct DecayConfig {
    pub params: ParamsBlock,
    pub mode: ScanMode,
    pub method: Method,
    pub t: Vec<f64>,
    pub x: (f64, f64),
    pub y_shell: f64,
    pub mask: f64,
    pub n: Vec<i64>,
    pub half: f64,
    pub fixture: Option<PathBuf>,
    pub options: ScanOptions,
    pub window: Window,
    pub envelope: bool,
}

fn t_samples(cfg: &Config) -> Result<Vec<f64>> {
    let spec = cfg.axis("scan", "t")?.ok_or_else(|| CliError::Config("[scan] t: missing".into()))?;
    let samples = cfg.usize_or("scan", "samples", 10)?;
    let spacing = cfg.string("scan", "spacing", "log");
    match spec {
        AxisSpec::Points(v) => Ok(v),
        AxisSpec::Range { lo, hi } => {
            if samples < 2 {
                return Err(CliError::Config("[scan] samples: at least 2 for a range".into()));
            }
            let f = |i: usize| i as f64 / (samples - 1) as f64;
            match spacing.as_str() {
                "log" if lo > 0.0 => Ok((0..samples).map(|i| lo * (hi / lo).powf(f(i))).collect()),
                "linear" => Ok((0..samples).map(|i| lo + (hi - lo) * f(i)).collect()),
                s => Err(CliError::Config(format!("[scan] spacing: expected log (with t > 0) or linear, got {s}"))),
            }
        }
    }
}

impl DecayConfig {
    pub fn read(cfg: &Config) -> Result<Self> {
        let params = ParamsBlock::read(cfg)?;
        let mode = match cfg.string("scan", "mode", "shell").as_str() {
            "shell" => ScanMode::Shell,
            "caustic" => ScanMode::Caustic,
            "fixture" => ScanMode::Fixture,
            m => return Err(CliError::Config(format!("[scan] mode: expected shell, caustic or fixture, got {m}"))),
        };
        let method = match cfg.string("scan", "method", "spectral").as_str() {
            "spectral" => Method::Spectral,
            "images" => Method::Images,
            m => return Err(CliError::Config(format!("[scan] method: expected spectral or images, got {m}"))),
        };
        let x = match cfg.axis("scan", "x")? {
            None => (0.0, 2.0 * params.a),
            Some(AxisSpec::Range { lo, hi }) => (lo, hi),
            Some(AxisSpec::Points(_)) => return Err(CliError::Config("[scan] x: expected lo : hi".into())),
        };
        let d = ScanOptions::default();
        let options = ScanOptions {
            x_step: cfg.f64_or("scan", "x_step", d.x_step)?,
            y_step: cfg.f64_or("scan", "y_step", d.y_step)?,
            tol: cfg.f64_or("scan", "tol", d.tol)?,
            max_refine: cfg.usize_or("scan", "max_refine", d.max_refine)?,
            images_rel_stop: cfg.f64_or("scan", "images_rel_stop", d.images_rel_stop)?,
        };
        let default_window = if mode == ScanMode::Caustic { "at_caustics" } else { "all" };
        let window = match cfg.string("scan", "window", default_window).as_str() {
            "all" => Window::All,
            "free" => Window::Free,
            "at_caustics" => Window::AtCaustics,
            w => return Err(CliError::Config(format!("[scan] window: expected all, free or at_caustics, got {w}"))),
        };
        let t = if mode == ScanMode::Shell { t_samples(cfg)? } else { Vec::new() };
        let n = match mode {
            ScanMode::Caustic => cfg.int_list("scan", "n")?.ok_or_else(|| CliError::Config("[scan] n: missing".into()))?,
            _ => Vec::new(),
        };
        let fixture = match mode {
            ScanMode::Fixture => Some(cfg.path("scan", "fixture").ok_or_else(|| CliError::Config("[scan] fixture: missing".into()))?),
            _ => None,
        };
        Ok(Self {
            params,
            mode,
            method,
            t,
            x,
            y_shell: cfg.f64_or("scan", "y_shell", 1.25)?,
            mask: cfg.f64_or("scan", "mask", MASK_C0)?,
            n,
            half: cfg.f64_or("scan", "half", 0.1)?,
            fixture,
            options,
            window,
            envelope: cfg.bool_or("scan", "envelope", mode == ScanMode::Caustic)?,
        })
    }
}

/// `t,sup` rows after a header line.
fn read_fixture(path: &PathBuf) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read fixture {}: {e}", path.display())))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next().map(str::trim) != Some("t,sup") {
        return Err(CliError::Config(format!("fixture {}: header must be t,sup", path.display())));
    }
    let (mut t, mut s) = (Vec::new(), Vec::new());
    for l in lines {
        let parsed = l.split_once(',').and_then(|(a, b)| Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?)));
        let (a, b) = parsed.ok_or_else(|| CliError::Config(format!("fixture {}: bad row {l}", path.display())))?;
        t.push(a);
        s.push(b);
    }
    Ok((t, s))
}

#[derive(Debug, Serialize)]
pub struct DecayResult {
    pub fit: DecayFit,
    pub envelope: Option<EnvelopeFit>,
    pub csv: &'static str,
}

pub fn run(conf: &DecayConfig, out: &Output) -> Result<DecayResult> {
    let params = conf.params.build()?;
    let scan = match conf.mode {
        ScanMode::Shell => {
            let bx = ScanBox { x: conf.x, y: YRange::Shell(conf.y_shell), mask: conf.mask };
            sup_scan(&params, &conf.t, &bx, conf.method, &conf.options)?
        }
        ScanMode::Caustic => caustic_scan(&params, &conf.n, conf.x, conf.half, conf.method, &conf.options)?,
        ScanMode::Fixture => {
            let (t, s) = read_fixture(conf.fixture.as_ref().expect("fixture path"))?;
            DecayFit::from_samples(&params, t, s)
        }
    };
    let fit = fit_decay_exponent(&scan, conf.window)?;
    let envelope = conf.envelope.then(|| envelope_fit(&fit)).transpose()?;
    let mut csv = String::from("t,sup,x,y\n");
    for i in 0..fit.t_samples.len() {
        let [x, y] = fit.argmax[i];
        writeln!(csv, "{:.17e},{:.17e},{x:.17e},{y:.17e}", fit.t_samples[i], fit.sup_values[i]).unwrap();
    }
    out.text("decay.csv", &csv)?;
    let result = DecayResult { fit, envelope, csv: "decay.csv" };
    out.json("decay.json", conf, &result)?;
    Ok(result)
}
