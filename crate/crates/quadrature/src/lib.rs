//! Gauss–Legendre rules, panel composition and C∞ bump functions.
//!
//! Everything here is real-valued and allocation-light; complex integrands
//! are handled by callers through [`Rule::nodes_on`], which yields mapped
//! nodes and weights that can be reused across many integrands.

mod bump;
mod gauss;

pub use bump::{Bump, PlateauTaper};
pub use gauss::{adaptive, panels, Panel, Rule};
