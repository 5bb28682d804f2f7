//! Sup-norm decay of the model-domain Green function: scans over a
//! wavefront box, power-law fits in h/t, regime labels and single-constant
//! envelope fits.

mod caustic;
mod error;
mod fit;
mod scan;

pub use caustic::caustic_scan;
pub use error::{BenchError, Result};
pub use fit::{classify, envelope_fit, first_reflection, fit_decay_exponent, EnvelopeFit, Regime, Window, EPSILON};
pub use scan::{sup_scan, DecayFit, Method, ScanBox, ScanOptions, YRange, MASK_C0};
