//! N-region, T-period integrated assessment simulator with RICE-style
//! abatement cost and damage forms.
//!
//! The model chain per period: control rates determine industrial
//! emissions and abatement costs; emissions accumulate; temperature follows
//! a linear map of cumulative emissions; each region loses a
//! temperature-dependent fraction of gross output to damages; what remains
//! after damages and abatement is consumed. Regions are autarkic (no
//! transfers), saving is not modeled, and gross output and population are
//! exogenous paths.

mod accounting;
pub mod calibration;
mod compare;
mod file;
mod optimize;
mod scenario;
mod simulate;
mod swf;

pub use accounting::{marginal_damage_pulse, welfare_equivalent_consumption_change, WeccScope};
pub use compare::{
    compare_regimes, preferred_uniform_prices, RegimeComparison, RegimeKind, RegimeReport,
};
pub use file::{trajectory_csv, PathSpec, RegionSpec, ScenarioFile, TRAJECTORY_CSV_HEADER};
pub use optimize::{
    as_differentiated, mean_price_path, optimize_negishi, optimize_policy,
    uniform_policy_from_prices, NegishiOutcome, Objective, PolicyOutcome,
};
pub use scenario::{IamScenario, PolicyMode, PolicyPath, RegionPath};
pub use simulate::{simulate, Trajectory, CONSUMPTION_FLOOR};
pub use swf::{
    evaluate_swf, negishi_weights, negishi_weights_at, wealth_discount_factors, weight_change, Swf,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum IamError {
    #[error("invalid scenario or policy: {0}")]
    Invalid(String),
    #[error("dimension mismatch: expected {expected:?}, got {got:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("scenario file did not parse: {0}")]
    Parse(String),
    #[error("unknown override key {0:?}")]
    UnknownKey(String),
    #[error(
        "Negishi weights did not converge after {iterations} iterations (change trace {trace:?})"
    )]
    WeightsNotConverged { iterations: usize, trace: Vec<f64> },
    #[error("welfare gap for {region} is below the utility range; equivalent change unboundedly negative")]
    WeccOutOfDomain { region: String },
    #[error("emissions pulse pushed consumption through the floor")]
    PulseDestabilized,
    #[error(transparent)]
    Optimizer(#[from] crate::optimizer::OptError),
}
