//! Planted symmetric and near-symmetric Max-CSP instances, exact 1-step QAOA
//! success probabilities, saddle-point asymptotics, and classical baselines.

pub mod error;
pub mod numerics;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
