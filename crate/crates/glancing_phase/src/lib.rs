//! Low-order jets of the generating function that straightens a glancing
//! boundary onto the model one, for d = 2, certified by the weighted
//! order of the residual of Ξ² + R − 1.

mod error;
mod jets;
mod metric;
mod verify;

pub use error::{PhaseError, Result};
pub use jets::{
    compute_ell, compute_gamma_beta, jet_point, solve_eikonal_b0, solve_transport_b2, symmetric_grid, B0Data, B2Data, EllData, GammaBeta,
    GammaCandidates, JetPoint, PhaseJet, TaylorAtZero, BETA_FACTOR, EIKONAL_WINDOW,
};
pub use metric::{richardson, MetricJet, Symbol, SymbolFn, FD_STEP};
pub use verify::{residual, verify_generating_function, ResidualReport, ResidualSample, EXACT_LEVEL, SLOPE_THRESHOLD};
