use std::fmt::Write;

use serde::Serialize;
use wavefront_caustics::{caustic_locate, degenerate_point, project_lagrangian, CausticEvent, SampleSpec};

use super::common::{Output, ParamsBlock};
use crate::config::Config;
use crate::error::{CliError, Result};

/// `[caustics]`: reflection indices and the optional Lagrangian cloud.
#[derive(Debug, Serialize)]
pub struct CausticsConfig {
    pub params: ParamsBlock,
    pub n: Vec<i64>,
    /// Skip the reflection range check.
    pub unrestricted: bool,
    /// Half-width of the (𝒮, 𝒯) square; 0 disables the point cloud.
    pub cloud_half: f64,
    pub cloud_count: usize,
}

impl CausticsConfig {
    pub fn read(cfg: &Config) -> Result<Self> {
        let params = ParamsBlock::read(cfg)?;
        let n = cfg.int_list("caustics", "n")?.ok_or_else(|| CliError::Config("[caustics] n: missing".into()))?;
        Ok(Self {
            params,
            n,
            unrestricted: cfg.bool_or("caustics", "unrestricted", false)?,
            cloud_half: cfg.f64_or("caustics", "cloud_half", 0.0)?,
            cloud_count: cfg.usize_or("caustics", "cloud_count", 41)?,
        })
    }
}

pub fn run(conf: &CausticsConfig, out: &Output) -> Result<Vec<CausticEvent>> {
    let params = conf.params.build()?;
    let mut dir = vec![0.0; params.d - 1];
    dir[0] = 1.0;
    let events = conf
        .n
        .iter()
        .map(|&n| if conf.unrestricted { degenerate_point(&params, n, &dir) } else { caustic_locate(&params, n) })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut result = serde_json::json!({ "events": events });
    if conf.cloud_half > 0.0 {
        let spec = SampleSpec::square(params.d - 1, conf.cloud_half, conf.cloud_count);
        let mut csv = String::from(if params.d == 3 { "n,s,t_script,x,t,y,y2\n" } else { "n,s,t_script,x,t,y\n" });
        for &n in &conf.n {
            for p in project_lagrangian(&params, n, &spec)? {
                write!(csv, "{},{:.17e},{:.17e},{:.17e},{:.17e}", p.n, p.s, p.t_script, p.x_scaled, p.t_scaled).unwrap();
                for y in &p.y {
                    write!(csv, ",{y:.17e}").unwrap();
                }
                csv.push('\n');
            }
        }
        out.text("caustics_lagrangian.csv", &csv)?;
        result["lagrangian_csv"] = "caustics_lagrangian.csv".into();
    }
    out.json("caustics.json", conf, &result)?;
    Ok(events)
}
