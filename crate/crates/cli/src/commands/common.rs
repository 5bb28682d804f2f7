use std::fs;
use std::path::{Path, PathBuf};

use green_spectral::{Axis, Grid};
use model_domain::{AlphaCutoff, QForm, WaveParams};
use serde::Serialize;

use crate::config::{AxisSpec, Config};
use crate::error::{CliError, Result};

/// `[params]`: the experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ParamsBlock {
    pub d: usize,
    pub h: f64,
    pub a: f64,
    pub delta: f64,
    pub q: Vec<Vec<f64>>,
    pub alpha_full: f64,
    pub alpha_zero: f64,
}

impl ParamsBlock {
    pub fn read(cfg: &Config) -> Result<Self> {
        let d = cfg.usize_or("params", "d", 2)?;
        let identity = (0..d.saturating_sub(1)).map(|i| (0..d - 1).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
        let cut = AlphaCutoff::default();
        Ok(Self {
            d,
            h: cfg.need_f64("params", "h")?,
            a: cfg.need_f64("params", "a")?,
            delta: cfg.f64_or("params", "delta", 0.2)?,
            q: cfg.matrix("params", "q")?.unwrap_or(identity),
            alpha_full: cfg.f64_or("params", "alpha_full", cut.full)?,
            alpha_zero: cfg.f64_or("params", "alpha_zero", cut.zero)?,
        })
    }

    pub fn build(&self) -> Result<WaveParams> {
        let mut p = WaveParams::new(self.d, self.h, self.a, self.delta, QForm::new(self.q.clone())?)?;
        p.cutoff = AlphaCutoff { full: self.alpha_full, zero: self.alpha_zero };
        p.validate()?;
        Ok(p)
    }
}

/// One grid axis after `auto` spacings are resolved.
#[derive(Debug, Clone, Serialize)]
pub struct AxisBlock {
    pub spec: AxisSpec,
    pub step: Option<f64>,
}

impl AxisBlock {
    fn read(cfg: &Config, key: &str, h: f64) -> Result<Self> {
        let spec = cfg.axis("grid", key)?.ok_or_else(|| CliError::Config(format!("[grid] {key}: missing")))?;
        let step_key = format!("{key}_step");
        let step = match (&spec, cfg.raw("grid", &step_key)) {
            (AxisSpec::Points(_), None) => None,
            (AxisSpec::Points(_), Some(_)) => return Err(CliError::Config(format!("[grid] {step_key}: only valid for a lo : hi axis"))),
            (AxisSpec::Range { .. }, None | Some("auto")) => Some(h / 8.0),
            (AxisSpec::Range { .. }, Some(_)) => Some(cfg.need_f64("grid", &step_key)?),
        };
        if step.is_some_and(|s| s <= 0.0) {
            return Err(CliError::Config(format!("[grid] {step_key}: must be positive")));
        }
        Ok(Self { spec, step })
    }

    fn axis(&self) -> Axis {
        match (&self.spec, self.step) {
            (AxisSpec::Points(v), _) => Axis::points(v.clone()),
            (AxisSpec::Range { lo, hi }, Some(s)) => Axis::covering(*lo, *hi, s),
            (AxisSpec::Range { lo, .. }, None) => Axis::points(vec![*lo]),
        }
    }
}

/// `[grid]`: `t`, `x`, `y` (and `y2` when d = 3), each with an optional
/// `<axis>_step` where `auto` means h/8.
#[derive(Debug, Clone, Serialize)]
pub struct GridBlock {
    pub t: AxisBlock,
    pub x: AxisBlock,
    pub y: Vec<AxisBlock>,
}

impl GridBlock {
    pub fn read(cfg: &Config, params: &ParamsBlock) -> Result<Self> {
        let h = params.h;
        let mut y = vec![AxisBlock::read(cfg, "y", h)?];
        if params.d == 3 {
            y.push(AxisBlock::read(cfg, "y2", h)?);
        }
        Ok(Self { t: AxisBlock::read(cfg, "t", h)?, x: AxisBlock::read(cfg, "x", h)?, y })
    }

    pub fn build(&self) -> Grid {
        Grid::new(self.t.axis(), self.x.axis(), self.y.iter().map(AxisBlock::axis).collect())
    }
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, R: Serialize> {
    build: &'a str,
    command: &'a str,
    seed: u64,
    config: &'a C,
    result: &'a R,
}

/// Writes report files under one directory. JSON reports carry the
/// resolved config, the seed and the build id.
pub struct Output {
    pub dir: PathBuf,
    pub build: &'static str,
    pub seed: u64,
    pub command: &'static str,
}

impl Output {
    pub fn new(dir: &Path, command: &'static str, seed: u64) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
        Ok(Self { dir: dir.to_path_buf(), build: crate::BUILD_ID, seed, command })
    }

    pub fn json<C: Serialize, R: Serialize>(&self, name: &str, config: &C, result: &R) -> Result<PathBuf> {
        let env = Envelope { build: self.build, command: self.command, seed: self.seed, config, result };
        let mut text = serde_json::to_string_pretty(&env).map_err(|e| CliError::Config(format!("serialize: {e}")))?;
        text.push('\n');
        self.text(name, &text)
    }

    pub fn text(&self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
        Ok(path)
    }
}
