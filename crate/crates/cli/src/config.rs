//! Run configuration files.
//!
//! Flat `key = value` text grouped under `[section]` headers; `#` and `;`
//! start comment lines. Numbers accept a power form (`h = 2^-8`), lists
//! are comma separated, integer ranges are written `1..6`, axes are either
//! a point list or `lo : hi`, and matrices are row lists
//! (`q = [[1.0, 0.2], [0.2, 1.5]]`). Every key must be consumed by the
//! command; leftovers are reported as configuration errors.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use ini::{Ini, ParseOption};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Default)]
pub struct Config {
    dir: PathBuf,
    values: BTreeMap<(String, String), String>,
    used: RefCell<BTreeSet<(String, String)>>,
}

fn bad(sec: &str, key: &str, what: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("[{sec}] {key}: {what}"))
}

/// A float, or `base^exponent`.
pub fn parse_number(s: &str) -> Option<f64> {
    let s = s.trim();
    let v = match s.split_once('^') {
        Some((b, e)) => b.trim().parse::<f64>().ok()?.powf(e.trim().parse::<f64>().ok()?),
        None => s.parse::<f64>().ok()?,
    };
    v.is_finite().then_some(v)
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, dir)
    }

    pub fn parse(text: &str, dir: PathBuf) -> Result<Self> {
        let opt = ParseOption { enabled_quote: false, enabled_escape: false, ..ParseOption::default() };
        let ini = Ini::load_from_str_opt(text, opt).map_err(|e| CliError::Config(format!("parse: {e}")))?;
        let mut values = BTreeMap::new();
        for (sec, props) in ini.iter() {
            let sec = sec.unwrap_or("");
            for (k, v) in props.iter() {
                if sec.is_empty() {
                    return Err(bad("", k, "keys must sit under a section header"));
                }
                if values.insert((sec.to_string(), k.to_string()), v.trim().to_string()).is_some() {
                    return Err(bad(sec, k, "given twice"));
                }
            }
        }
        Ok(Self { dir, values, used: RefCell::default() })
    }

    pub fn raw(&self, sec: &str, key: &str) -> Option<&str> {
        let k = (sec.to_string(), key.to_string());
        let v = self.values.get(&k)?;
        self.used.borrow_mut().insert(k);
        Some(v.as_str())
    }

    /// Path relative to the config file.
    pub fn path(&self, sec: &str, key: &str) -> Option<PathBuf> {
        self.raw(sec, key).map(|p| self.dir.join(p))
    }

    pub fn string(&self, sec: &str, key: &str, default: &str) -> String {
        self.raw(sec, key).unwrap_or(default).to_string()
    }

    pub fn f64(&self, sec: &str, key: &str) -> Result<Option<f64>> {
        self.raw(sec, key).map(|v| parse_number(v).ok_or_else(|| bad(sec, key, format!("not a number: {v}")))).transpose()
    }

    pub fn f64_or(&self, sec: &str, key: &str, default: f64) -> Result<f64> {
        Ok(self.f64(sec, key)?.unwrap_or(default))
    }

    pub fn need_f64(&self, sec: &str, key: &str) -> Result<f64> {
        self.f64(sec, key)?.ok_or_else(|| bad(sec, key, "missing"))
    }

    pub fn usize(&self, sec: &str, key: &str) -> Result<Option<usize>> {
        self.raw(sec, key).map(|v| v.parse::<usize>().map_err(|_| bad(sec, key, format!("not a count: {v}")))).transpose()
    }

    pub fn usize_or(&self, sec: &str, key: &str, default: usize) -> Result<usize> {
        Ok(self.usize(sec, key)?.unwrap_or(default))
    }

    /// A count, with `auto` (or absence) meaning `None`.
    pub fn auto_usize(&self, sec: &str, key: &str) -> Result<Option<usize>> {
        match self.raw(sec, key) {
            None | Some("auto") => Ok(None),
            Some(v) => v.parse::<usize>().map(Some).map_err(|_| bad(sec, key, format!("expected a count or auto: {v}"))),
        }
    }

    pub fn bool_or(&self, sec: &str, key: &str, default: bool) -> Result<bool> {
        match self.raw(sec, key) {
            None => Ok(default),
            Some("true" | "yes" | "1") => Ok(true),
            Some("false" | "no" | "0") => Ok(false),
            Some(v) => Err(bad(sec, key, format!("expected true or false: {v}"))),
        }
    }

    pub fn u64(&self, sec: &str, key: &str) -> Result<Option<u64>> {
        self.raw(sec, key).map(|v| v.parse::<u64>().map_err(|_| bad(sec, key, format!("not an integer: {v}")))).transpose()
    }

    pub fn list(&self, sec: &str, key: &str) -> Result<Option<Vec<f64>>> {
        let Some(v) = self.raw(sec, key) else { return Ok(None) };
        let out: Option<Vec<f64>> = v.split(',').map(parse_number).collect();
        match out {
            Some(l) if !l.is_empty() => Ok(Some(l)),
            _ => Err(bad(sec, key, format!("expected a number list: {v}"))),
        }
    }

    /// `1, 3, 4` or `1..6` (inclusive).
    pub fn int_list(&self, sec: &str, key: &str) -> Result<Option<Vec<i64>>> {
        let Some(v) = self.raw(sec, key) else { return Ok(None) };
        let err = || bad(sec, key, format!("expected integers or lo..hi: {v}"));
        if let Some((lo, hi)) = v.split_once("..") {
            let lo: i64 = lo.trim().parse().map_err(|_| err())?;
            let hi: i64 = hi.trim().parse().map_err(|_| err())?;
            if hi < lo {
                return Err(err());
            }
            return Ok(Some((lo..=hi).collect()));
        }
        v.split(',').map(|s| s.trim().parse::<i64>().map_err(|_| err())).collect::<Result<Vec<_>>>().map(Some)
    }

    pub fn matrix(&self, sec: &str, key: &str) -> Result<Option<Vec<Vec<f64>>>> {
        let Some(v) = self.raw(sec, key) else { return Ok(None) };
        if let Some(x) = parse_number(v) {
            return Ok(Some(vec![vec![x]]));
        }
        serde_json::from_str(v).map(Some).map_err(|_| bad(sec, key, format!("expected a row list such as [[1, 0], [0, 1]]: {v}")))
    }

    pub fn axis(&self, sec: &str, key: &str) -> Result<Option<AxisSpec>> {
        let Some(v) = self.raw(sec, key) else { return Ok(None) };
        if let Some((lo, hi)) = v.split_once(':') {
            let (lo, hi) = (parse_number(lo), parse_number(hi));
            return match (lo, hi) {
                (Some(lo), Some(hi)) if hi >= lo => Ok(Some(AxisSpec::Range { lo, hi })),
                _ => Err(bad(sec, key, format!("expected lo : hi with lo ≤ hi: {v}"))),
            };
        }
        Ok(self.list(sec, key)?.map(AxisSpec::Points))
    }

    /// Errors on any key no command looked at.
    pub fn finish(&self) -> Result<()> {
        let used = self.used.borrow();
        let left: Vec<String> = self.values.keys().filter(|k| !used.contains(*k)).map(|(s, k)| format!("[{s}] {k}")).collect();
        if left.is_empty() {
            Ok(())
        } else {
            Err(CliError::Config(format!("unknown keys: {}", left.join(", "))))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisSpec {
    Points(Vec<f64>),
    Range { lo: f64, hi: f64 },
}
