//! Domain types and elementary economic functions shared by all solvers:
//! isoelastic utility, quadratic abatement costs, quadratic climate damages,
//! and the static two-region economy built from them.
//!
//! Everything here is an immutable value after construction and every
//! operation is pure, so instances can be evaluated from any number of
//! concurrent workers.

mod cost;
mod damage;
mod region;
mod utility;

pub use cost::QuadraticCost;
pub use damage::{simplified_rice_damage, QuadraticDamage};
pub use region::{Consumption, EconomyStatic, RegionStatic};
pub use utility::UtilityParams;

use thiserror::Error;

/// Errors raised while constructing or evaluating economic primitives.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EconError {
    /// A parameter violates its domain restriction.
    #[error("invalid parameter {name}: {message} (got {value})")]
    InvalidParameter {
        name: &'static str,
        message: &'static str,
        value: f64,
    },
    /// A per-endowment damage shape is not decreasing and convex.
    #[error("damage shape for {name} is not strictly decreasing and convex in abatement")]
    InvalidDamageShape { name: String },
    /// An allocation drove some region's consumption to zero or below.
    #[error("infeasible allocation: region {region} has consumption {consumption}")]
    InfeasibleAllocation { region: String, consumption: f64 },
    /// Abatement outside `0 <= own <= global <= e_bar`.
    #[error("abatement out of range for region {region}: own {own}, global {global}")]
    AbatementOutOfRange {
        region: String,
        own: f64,
        global: f64,
    },
    /// The north region must be richer per capita than the south.
    #[error("north must be richer per capita than south ({north} <= {south})")]
    NorthNotRicher { north: f64, south: f64 },
}
