//! Half-wave Green function of the model domain as a sum over gallery
//! modes, plus the sampled-field container and the θ lattice shared with
//! the reflected-wave evaluator.

mod delta;
mod error;
mod field;
mod grid;
mod spectral;
mod theta;

pub use delta::{delta_recovery_test, DeltaReport, SeparableTest};
pub use error::{FieldError, Result};
pub use field::{ComplexField, Truncation};
pub use grid::{Axis, Grid};
pub use spectral::{spectral_green, ModeSet, SpectralKernel, AIRY_NEGLIGIBLE};
pub use theta::{fft_y, required_period, ThetaGrid};
