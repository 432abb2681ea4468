//! Derivative-free optimization stack: Subplex-style simplex search on
//! subspaces, augmented-Lagrangian handling of equality constraints, box
//! bounds, deterministic multi-start, and a grid-search oracle for
//! desk-scale verification.
//!
//! Everything here maximizes; minimization happens internally by negation.
//! Runs are deterministic given the seed: multi-start jitter comes from a
//! seeded generator and every tie-break is index-stable, so identical
//! configuration and objective reproduce identical results bit for bit.

mod grid;
mod nelder_mead;
mod subplex;
mod trace;

pub use grid::grid_oracle;
pub use trace::EvalTrace;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exec;

#[derive(Debug, Clone)]
pub struct OptimizerConfig {
    /// Evaluation budget per restart.
    pub max_evals: usize,
    /// Step-size convergence threshold.
    pub xtol: f64,
    /// Relative function-spread convergence threshold.
    pub ftol: f64,
    /// Maximum Nelder-Mead subspace dimension, >= 2.
    pub subspace_dim: usize,
    /// Number of jittered restarts; the best result wins.
    pub restarts: usize,
    pub seed: u64,
    /// Initial quadratic penalty for equality constraints.
    pub penalty_init: f64,
    /// Penalty growth factor, > 1.
    pub penalty_growth: f64,
    /// Constraint violation tolerance for declaring a constrained run
    /// converged.
    pub ctol: f64,
    /// Outer iteration cap for the augmented Lagrangian loop.
    pub max_outer: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            max_evals: 200_000,
            xtol: 1e-10,
            ftol: 1e-9,
            subspace_dim: 5,
            restarts: 3,
            seed: 0,
            penalty_init: 1.0,
            penalty_growth: 10.0,
            ctol: 1e-8,
            max_outer: 40,
        }
    }
}

impl OptimizerConfig {
    fn validate(&self) -> Result<(), OptError> {
        if !(self.xtol > 0.0) || !(self.ftol >= 0.0) {
            return Err(OptError::InvalidConfig("tolerances must be positive"));
        }
        if self.subspace_dim < 2 {
            return Err(OptError::InvalidConfig("subspace_dim must be >= 2"));
        }
        if !(self.penalty_growth > 1.0) {
            return Err(OptError::InvalidConfig("penalty_growth must exceed 1"));
        }
        if self.restarts == 0 || self.max_evals == 0 {
            return Err(OptError::InvalidConfig(
                "restarts and max_evals must be nonzero",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    pub x: Vec<f64>,
    /// Objective value at `x` (maximization).
    pub f: f64,
    pub evals: usize,
    pub converged: bool,
    /// Max-norm violation of the equality constraints; zero when none.
    pub constraint_violation: f64,
    /// Spread of restart objective values, `f_best - f_worst`, as a
    /// dispersion diagnostic for multimodality.
    pub restart_dispersion: f64,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OptError {
    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("bounds are inconsistent at coordinate {0}")]
    BadBounds(usize),
    #[error("constraint violation diverged across outer iterations: {trace:?}")]
    Divergence { trace: Vec<f64> },
    #[error("grid oracle supports at most 3 dimensions, got {0}")]
    DimensionTooHigh(usize),
}

fn check_bounds(lower: &[f64], upper: &[f64]) -> Result<(), OptError> {
    for i in 0..lower.len() {
        if !(lower[i] < upper[i]) {
            return Err(OptError::BadBounds(i));
        }
    }
    Ok(())
}

/// Maximizes `objective` over the box by multi-start Subplex. The first
/// start sits at the box center (or a caller-provided warm start), the rest
/// jitter uniformly within the box under the configured seed. Restarts run
/// concurrently; the best objective wins with index-stable tie-breaking.
pub fn maximize_bounded(
    objective: &(dyn Fn(&[f64]) -> f64 + Sync),
    lower: &[f64],
    upper: &[f64],
    cfg: &OptimizerConfig,
) -> Result<OptResult, OptError> {
    maximize_bounded_from(objective, None, lower, upper, cfg)
}

/// `maximize_bounded` with explicit warm starts prepended to the jittered
/// ones (each consumes one restart slot).
pub fn maximize_bounded_from(
    objective: &(dyn Fn(&[f64]) -> f64 + Sync),
    warm_starts: Option<&[Vec<f64>]>,
    lower: &[f64],
    upper: &[f64],
    cfg: &OptimizerConfig,
) -> Result<OptResult, OptError> {
    cfg.validate()?;
    check_bounds(lower, upper)?;
    let n = lower.len();

    // Warm starts each take a restart slot; the remainder begins at the box
    // center and then jitters uniformly under the configured seed.
    let mut starts: Vec<Vec<f64>> = Vec::with_capacity(cfg.restarts);
    if let Some(warm) = warm_starts {
        starts.extend(warm.iter().cloned());
    }
    if starts.is_empty() {
        starts.push((0..n).map(|i| 0.5 * (lower[i] + upper[i])).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while starts.len() < cfg.restarts {
        starts.push((0..n).map(|i| rng.gen_range(lower[i]..=upper[i])).collect());
    }

    let runs = exec::map_indexed(starts.len(), |r| {
        let mut f = |x: &[f64]| -objective(x);
        let out = subplex::minimize(
            &mut f,
            &starts[r],
            lower,
            upper,
            cfg.subspace_dim,
            cfg.xtol,
            cfg.ftol,
            cfg.max_evals,
        );
        (out.x, -out.f, out.evals, out.converged)
    });

    let mut best_idx = 0;
    let mut f_best = f64::NEG_INFINITY;
    let mut f_worst = f64::INFINITY;
    let mut evals = 0;
    for (i, run) in runs.iter().enumerate() {
        evals += run.2;
        f_worst = f_worst.min(run.1);
        if run.1 > f_best {
            f_best = run.1;
            best_idx = i;
        }
    }
    let best = &runs[best_idx];
    Ok(OptResult {
        x: best.0.clone(),
        f: best.1,
        evals,
        converged: best.3,
        constraint_violation: 0.0,
        restart_dispersion: if runs.len() > 1 {
            f_best - f_worst
        } else {
            0.0
        },
    })
}

/// Maximizes `objective` subject to `equalities(x) = 0` by an augmented
/// Lagrangian: multipliers and a growing quadratic penalty wrap the bounded
/// Subplex search. An outer iteration is accepted when it reduces the
/// violation; three consecutive rejections (or growth across them) is
/// divergence.
pub fn maximize_eq_constrained(
    objective: &(dyn Fn(&[f64]) -> f64 + Sync),
    equalities: &(dyn Fn(&[f64]) -> Vec<f64> + Sync),
    lower: &[f64],
    upper: &[f64],
    cfg: &OptimizerConfig,
) -> Result<OptResult, OptError> {
    cfg.validate()?;
    check_bounds(lower, upper)?;
    let n_con = equalities(lower).len();
    let mut lambda = vec![0.0_f64; n_con];
    let mut penalty = cfg.penalty_init;

    let mut best: Option<OptResult> = None;
    let mut violation_trace: Vec<f64> = Vec::new();
    let mut prev_violation = f64::INFINITY;
    let mut rejected_in_a_row = 0usize;
    let mut warm: Option<Vec<Vec<f64>>> = None;
    let mut total_evals = 0usize;

    for outer in 0..cfg.max_outer {
        let lam = lambda.clone();
        let pen = penalty;
        let lagrangian = move |x: &[f64]| -> f64 {
            let h = equalities(x);
            let mut v = objective(x);
            for (hj, lj) in h.iter().zip(&lam) {
                v -= lj * hj + 0.5 * pen * hj * hj;
            }
            v
        };
        // Full multi-start on the first outer pass, warm single start after.
        let inner_cfg = OptimizerConfig {
            restarts: if outer == 0 { cfg.restarts } else { 1 },
            seed: cfg.seed.wrapping_add(outer as u64),
            ..cfg.clone()
        };
        let inner = maximize_bounded_from(&lagrangian, warm.as_deref(), lower, upper, &inner_cfg)?;
        total_evals += inner.evals;

        let h = equalities(&inner.x);
        let violation = h.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        violation_trace.push(violation);

        let f_actual = objective(&inner.x);
        let accepted = violation < prev_violation || violation <= cfg.ctol;
        if accepted {
            rejected_in_a_row = 0;
            best = Some(OptResult {
                x: inner.x.clone(),
                f: f_actual,
                evals: total_evals,
                converged: violation <= cfg.ctol && inner.converged,
                constraint_violation: violation,
                restart_dispersion: inner.restart_dispersion,
            });
            if violation <= cfg.ctol && inner.converged {
                return Ok(best.expect("just set"));
            }
        } else {
            rejected_in_a_row += 1;
            if rejected_in_a_row >= 3 {
                return Err(OptError::Divergence {
                    trace: violation_trace,
                });
            }
        }

        for (lj, hj) in lambda.iter_mut().zip(&h) {
            *lj += penalty * hj;
        }
        if violation > 0.25 * prev_violation {
            penalty *= cfg.penalty_growth;
        }
        prev_violation = prev_violation.min(violation);
        warm = Some(vec![inner.x]);
    }

    match best {
        Some(result) if result.constraint_violation <= cfg.ctol => Ok(result),
        _ => Err(OptError::Divergence {
            trace: violation_trace,
        }),
    }
}
