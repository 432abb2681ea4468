//! Optimal carbon prices under regional welfare weights.
//!
//! The crate has three layers:
//!
//! * [`econ`] holds the elementary economic building blocks shared by every
//!   solver: isoelastic utility, quadratic abatement cost and damage
//!   functions, and the two-region world they compose into.
//! * [`static_solver`] and [`dynamic_solver`] compute the exact one- and
//!   two-period carbon price regimes (Negishi-weighted, utilitarian uniform,
//!   utilitarian differentiated, per-region preferred, arbitrary weights)
//!   together with randomized checks of the ordering results that relate
//!   them.
//! * [`iam`] is an N-region, T-period integrated assessment simulator with
//!   RICE-style abatement cost and damage forms, driven by the
//!   derivative-free optimization stack in [`optimizer`].
//!
//! Proposition sweeps, oracle comparisons and multi-start optimization runs
//! are data-parallel; they run on rayon when the default `parallel` feature
//! is enabled and fall back to sequential execution otherwise (see [`exec`]).

// Parameter validation uses `!(x > 0.0)` deliberately: the negation also
// rejects NaN, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dynamic_solver;
pub mod econ;
pub mod exec;
pub mod iam;
pub mod optimizer;
mod roots;
pub mod static_solver;

pub use econ::{EconomyStatic, QuadraticCost, QuadraticDamage, RegionStatic, UtilityParams};
pub use static_solver::{PriceSolution, Regime};
