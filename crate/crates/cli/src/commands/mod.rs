pub mod airy;
pub mod caustics;
pub mod common;
pub mod decay;
pub mod field;
pub mod phase;
