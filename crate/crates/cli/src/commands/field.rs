use std::fmt::Write;

use green_images::{equivalence_check, images_green, EquivalenceReport, TermEnergy};
use green_spectral::spectral_green;
use serde::Serialize;

use super::common::{GridBlock, Output, ParamsBlock};
use crate::config::Config;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldMethod {
    Spectral,
    Images,
}

/// `[field]` of the green command.
#[derive(Debug, Serialize)]
pub struct GreenConfig {
    pub params: ParamsBlock,
    pub grid: GridBlock,
    pub method: FieldMethod,
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    pub rel_stop: f64,
}

impl GreenConfig {
    pub fn read(cfg: &Config) -> Result<Self> {
        let params = ParamsBlock::read(cfg)?;
        let grid = GridBlock::read(cfg, &params)?;
        let method = match cfg.string("field", "method", "spectral").as_str() {
            "spectral" => FieldMethod::Spectral,
            "images" => FieldMethod::Images,
            m => return Err(CliError::Config(format!("[field] method: expected spectral or images, got {m}"))),
        };
        Ok(Self {
            params,
            grid,
            method,
            k_max: cfg.auto_usize("field", "k_max")?,
            n_max: cfg.auto_usize("field", "n_max")?,
            rel_stop: cfg.f64_or("field", "rel_stop", 1e-4)?,
        })
    }
}

fn energy_csv(energies: &[TermEnergy]) -> String {
    let mut s = String::from("n,sup,mean_square\n");
    for e in energies {
        writeln!(s, "{},{:.17e},{:.17e}", e.n, e.sup, e.mean_square).unwrap();
    }
    s
}

pub fn run_green(conf: &GreenConfig, out: &Output) -> Result<f64> {
    let params = conf.params.build()?;
    let grid = conf.grid.build();
    let (field, energies) = match conf.method {
        FieldMethod::Spectral => (spectral_green(&params, &grid, conf.k_max)?, None),
        FieldMethod::Images => {
            let sum = images_green(&params, &grid, conf.n_max, conf.rel_stop)?;
            (sum.field, Some(sum.energies))
        }
    };
    let mut csv = Vec::new();
    field.write_csv(&mut csv)?;
    out.text("green.csv", std::str::from_utf8(&csv).expect("ascii csv"))?;
    let mut side = field.sidecar();
    side["csv"] = "green.csv".into();
    if let Some(e) = &energies {
        out.text("green_energies.csv", &energy_csv(e))?;
        side["energies_csv"] = "green_energies.csv".into();
    }
    out.json("green.json", conf, &side)?;
    Ok(field.max_abs())
}

/// `[compare]` of the compare command.
#[derive(Debug, Serialize)]
pub struct CompareConfig {
    pub params: ParamsBlock,
    pub grid: GridBlock,
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    pub tolerance: f64,
}

impl CompareConfig {
    pub fn read(cfg: &Config) -> Result<Self> {
        let params = ParamsBlock::read(cfg)?;
        let grid = GridBlock::read(cfg, &params)?;
        Ok(Self {
            params,
            grid,
            k_max: cfg.auto_usize("compare", "k_max")?,
            n_max: cfg.auto_usize("compare", "n_max")?,
            tolerance: cfg.f64_or("compare", "tolerance", 1e-3)?,
        })
    }
}

#[derive(Debug, Serialize)]
struct CompareResult<'a> {
    report: &'a EquivalenceReport,
    passed: bool,
}

pub fn run_compare(conf: &CompareConfig, out: &Output) -> Result<EquivalenceReport> {
    let params = conf.params.build()?;
    let report = equivalence_check(&params, &conf.grid.build(), conf.n_max, conf.k_max)?;
    let passed = report.rel_linf <= conf.tolerance;
    out.json("compare.json", conf, &CompareResult { report: &report, passed })?;
    if !passed {
        return Err(CliError::Precision(format!("discrepancy {:.3e} exceeds {:.1e}", report.rel_linf, conf.tolerance)));
    }
    Ok(report)
}
