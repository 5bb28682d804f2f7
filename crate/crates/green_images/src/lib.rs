//! The model-domain Green function as a sum of reflected waves V_N, the
//! Airy–Poisson identity behind it, and the check that both routes agree.

mod equivalence;
mod images;
mod poisson;

pub use equivalence::{equivalence_check, EquivalenceReport};
pub use images::{images_green, propagating_terms, reflected_terms, v_n_field, ImageSum, OmegaNodes, ReflectedWaveTerm, TermEnergy};
pub use poisson::{airy_poisson_adaptive, airy_poisson_check, AiryPoissonReport};
