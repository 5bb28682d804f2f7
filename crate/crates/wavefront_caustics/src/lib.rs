//! Projected Lagrangians of the reflected waves, their degenerate
//! critical points, and counts of overlapping reflections.

mod caustic;
mod error;
mod lagrangian;
mod overlap;
mod phase;

pub use caustic::{amplitude_law, caustic_locate, caustic_locate_dir, degenerate_point, max_reflection, CausticEvent};
pub use error::{CausticError, Result};
pub use lagrangian::{project_lagrangian, LagrangianPoint, SampleSpec};
pub use overlap::{ball_grid, count_contributing, fit_overlap_constant, OverlapCount, BALL_RADIUS};
pub use phase::{LModel, ModelPhase, PhasePoint, B_FROM_U};
