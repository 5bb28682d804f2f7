use airy_kernel::{airy_zeros, AiryZeroTable};
use serde::Serialize;

use super::common::Output;
use crate::config::Config;
use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
pub struct AiryConfig {
    pub k: usize,
}

impl AiryConfig {
    pub fn read(cfg: &Config, k_flag: Option<usize>) -> Result<Self> {
        let k = match k_flag {
            Some(k) => k,
            None => cfg.usize("airy", "k")?.ok_or_else(|| CliError::Config("[airy] k: missing (or pass --k)".into()))?,
        };
        if k == 0 {
            return Err(CliError::Config("K must be at least 1".into()));
        }
        Ok(Self { k })
    }
}

pub fn run(conf: &AiryConfig, out: &Output) -> Result<AiryZeroTable> {
    let table = airy_zeros(conf.k)?;
    out.json("airy_table.json", conf, &table)?;
    Ok(table)
}
