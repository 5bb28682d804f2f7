//! Command-line front end: run configurations in, CSV fields and JSON
//! reports out.
//!
//! Exit status: 0 on success, 2 for configuration errors (including bad
//! flags and unwritable outputs), 3 for domain errors, 4 for precision or
//! convergence failures.

pub mod commands;
pub mod config;
pub mod error;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::common::Output;
use config::Config;
use error::{CliError, Result};

/// `v<version>-<git describe>` of the build.
pub const BUILD_ID: &str = env!("WAVEBENCH_BUILD");

#[derive(Debug, Parser)]
#[command(name = "wavebench", version = BUILD_ID, about = "Green functions, caustics and decay rates near a glancing boundary")]
pub struct Cli {
    /// Run configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads (default: logical cores). Results do not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    /// Seed for randomized sampling; overrides `[run] seed`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate Airy zeros ω_k and L′(ω_k).
    AiryTable {
        /// Number of zeros; overrides `[airy] k`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Field on a grid, spectral or reflected-wave sum.
    Green,
    /// Spectral vs reflected-wave discrepancy.
    Compare,
    /// Degenerate points of the reflected-wave phases.
    Caustics,
    /// Sup-norm decay scan and exponent fit.
    Decay,
    /// Glancing-phase jets and residual certificate.
    Phase,
}

fn load(path: &Option<PathBuf>, required: bool) -> Result<Config> {
    match path {
        Some(p) => Config::load(p),
        None if required => Err(CliError::Config("--config is required for this command".into())),
        None => Ok(Config::default()),
    }
}

/// Runs one command and returns the summary line printed on success.
pub fn execute(cli: &Cli) -> Result<String> {
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(CliError::Config("--workers must be at least 1".into()));
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let required = !matches!(cli.command, Command::AiryTable { .. });
    let cfg = load(&cli.config, required)?;
    let seed = cli.seed.or(cfg.u64("run", "seed")?).unwrap_or(0);
    use commands::*;
    match &cli.command {
        Command::AiryTable { k } => {
            let conf = airy::AiryConfig::read(&cfg, *k)?;
            cfg.finish()?;
            let t = airy::run(&conf, &Output::new(&cli.out, "airy-table", seed)?)?;
            Ok(format!("{} zeros, ω_1 = {:.15}, ω_K = {:.15}", t.k, t.zeros[0], t.zeros[t.k - 1]))
        }
        Command::Green => {
            let conf = field::GreenConfig::read(&cfg)?;
            cfg.finish()?;
            let max = field::run_green(&conf, &Output::new(&cli.out, "green", seed)?)?;
            Ok(format!("field max {max:.6e}"))
        }
        Command::Compare => {
            let conf = field::CompareConfig::read(&cfg)?;
            cfg.finish()?;
            let r = field::run_compare(&conf, &Output::new(&cli.out, "compare", seed)?)?;
            Ok(format!("discrepancy {:.3e} (N ∈ [{}, {}], K = {})", r.rel_linf, r.n_range.0, r.n_range.1, r.k_max))
        }
        Command::Caustics => {
            let conf = caustics::CausticsConfig::read(&cfg)?;
            cfg.finish()?;
            let ev = caustics::run(&conf, &Output::new(&cli.out, "caustics", seed)?)?;
            let times: Vec<String> = ev.iter().map(|e| format!("t_{} = {:.6}", e.n, e.t_n)).collect();
            Ok(times.join(", "))
        }
        Command::Decay => {
            let conf = decay::DecayConfig::read(&cfg)?;
            cfg.finish()?;
            let r = decay::run(&conf, &Output::new(&cli.out, "decay", seed)?)?;
            let mut s = format!(
                "exponent {:.6}, residual {:.3e}, regime {:?}",
                r.fit.fitted_exponent.unwrap_or(f64::NAN),
                r.fit.fit_residual.unwrap_or(f64::NAN),
                r.fit.regime
            );
            if let Some(e) = &r.envelope {
                s += &format!(", envelope upper {:.4} lower {:.4}", e.upper, e.lower);
            }
            for w in &r.fit.warnings {
                s += &format!("\nwarning: {w}");
            }
            Ok(s)
        }
        Command::Phase => {
            let conf = phase::PhaseConfig::read(&cfg)?;
            cfg.finish()?;
            let r = phase::run(&conf, seed, &Output::new(&cli.out, "phase", seed)?)?;
            Ok(match r.report.slope {
                Some(s) => format!("certificate {}: slope {s:.3}", r.status),
                None => format!("certificate {}", r.status),
            })
        }
    }
}

/// Parses `args`, runs, prints, and returns the exit status.
pub fn main_with<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(summary) => {
            println!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("wavebench: {e}");
            e.exit_code()
        }
    }
}
