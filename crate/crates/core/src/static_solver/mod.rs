//! Exact solvers for the static two-region carbon price regimes.
//!
//! Every uniform regime reduces to a scalar defect in the common price
//! `tau`: regions respond along their inverse marginal abatement cost
//! curves, so consumption and damages become functions of `tau` alone and
//! the defining equation is bracketed on `[0, tau_max]` and refined with
//! Brent. The differentiated regime is a two-equation system in
//! `(tau_N, tau_S)` solved by a damped fixed point with a Newton polish.
//!
//! Regimes:
//! * Negishi-weighted: `tau = -sum_i D_i'(A)` -- the Samuelson condition in
//!   monetary terms; reported weights are `1/u'(x_i)` at the solution.
//! * utilitarian uniform: marginal *welfare* benefits against the
//!   curvature-weighted marginal utilities of the cost burden.
//! * utilitarian differentiated: equalized marginal welfare costs,
//!   `u'(x_i) C_i'(A_i)` common across regions.
//! * preferred uniform price of one region: that region's own
//!   benefit/cost balance under the uniform-price response.
//! * arbitrary welfare weights, uniform or differentiated; the named
//!   regimes are specializations.

mod props;
mod sampler;

pub use props::{
    check_static_propositions, diagnostics_csv_header, run_static_props_sweep, PropositionVerdict,
    StaticPropositionReport, StaticSweepOutcome, StaticSweepSummary, VerdictCounts,
};
pub use sampler::{instance_seed, sample_static_economy, SamplerConfig};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::econ::{EconError, EconomyStatic, RegionStatic};
use crate::roots::{self, RootError};

/// Default absolute residual tolerance, in price units.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionId {
    North,
    South,
}

impl RegionId {
    pub fn other(self) -> Self {
        match self {
            RegionId::North => RegionId::South,
            RegionId::South => RegionId::North,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Regime {
    NegishiUniform,
    UtilitarianUniform,
    UtilitarianDifferentiated,
    Preferred(RegionId),
    ArbitraryUniform,
    ArbitraryDifferentiated,
}

/// A solved price regime with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSolution {
    pub regime: Regime,
    pub tau_north: f64,
    pub tau_south: f64,
    pub abatement_north: f64,
    pub abatement_south: f64,
    /// Per capita consumption at the solution.
    pub x_north: f64,
    pub x_south: f64,
    /// Welfare weights attached to the regime: converged Negishi weights,
    /// `(1, 1)` for utilitarian, edge weights for preferred, or the caller's.
    pub weights: (f64, f64),
    pub iterations: usize,
    /// Absolute residual of the defining equation(s), in price units.
    pub residual: f64,
    /// Set when the maintained assumption `x_N > x_S` fails at the solution.
    pub x_order_violated: bool,
    /// Set when restarts of the differentiated system disagree beyond
    /// `100 * tol`.
    pub multiple_solutions: bool,
}

impl PriceSolution {
    /// The common price of a uniform regime (both fields are equal there).
    pub fn tau(&self) -> f64 {
        self.tau_north
    }

    pub fn global_abatement(&self) -> f64 {
        self.abatement_north + self.abatement_south
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SolveError {
    #[error(
        "{regime}: defining equation has no sign change on [0, {tau_max}]; no interior optimum"
    )]
    NoInteriorOptimum { regime: &'static str, tau_max: f64 },
    #[error("infeasible candidate solution: {0}")]
    Infeasible(#[from] EconError),
    #[error(
        "no convergence after {iterations} iterations; residual {residual:.3e}, trace {trace:?}"
    )]
    NonConvergence {
        iterations: usize,
        residual: f64,
        trace: Vec<f64>,
    },
    #[error("invalid welfare weights ({0}, {1}): must be nonnegative and not both zero")]
    InvalidWeights(f64, f64),
}

/// State of the two-region world at a uniform carbon price.
#[derive(Debug, Clone, Copy)]
struct UniformPoint {
    tau: f64,
    a_north: f64,
    a_south: f64,
    a: f64,
    /// Aggregate consumptions (may be nonpositive on infeasible points).
    xagg_north: f64,
    xagg_south: f64,
}

fn eval_uniform(econ: &EconomyStatic, tau: f64) -> UniformPoint {
    let a_north = econ.north.cost.abatement_at_price(tau);
    let a_south = econ.south.cost.abatement_at_price(tau);
    let a = a_north + a_south;
    UniformPoint {
        tau,
        a_north,
        a_south,
        a,
        xagg_north: econ.north.consumption_unchecked(a_north, a),
        xagg_south: econ.south.consumption_unchecked(a_south, a),
    }
}

/// Upper end of the price bracket: the largest marginal abatement cost at
/// full abatement of the baseline. Abatement beyond baseline emissions is
/// meaningless, so no defining equation is solved past this price.
pub fn price_bracket_max(econ: &EconomyStatic) -> f64 {
    let n = &econ.north;
    let s = &econ.south;
    let m_n = n.cost.mac(n.damage.e_bar);
    let m_s = s.cost.mac(s.damage.e_bar);
    m_n.max(m_s)
}

fn marginal_utilities(econ: &EconomyStatic, p: &UniformPoint) -> Option<(f64, f64)> {
    if p.xagg_north <= 0.0 || p.xagg_south <= 0.0 {
        return None;
    }
    let u = &econ.utility;
    Some((
        u.marginal_utility(p.xagg_north / econ.north.population),
        u.marginal_utility(p.xagg_south / econ.south.population),
    ))
}

/// `tau - RHS(tau)` for the Negishi-weighted price: the price must equal the
/// sum of marginal abatement benefits in monetary terms.
fn negishi_defect(econ: &EconomyStatic, p: &UniformPoint) -> f64 {
    p.tau + econ.north.damage.slope(p.a) + econ.south.damage.slope(p.a)
}

/// `tau - RHS(tau)` for the weighted uniform price (utilitarian when both
/// weights are 1). NaN on infeasible points so the bracket scan skips them.
fn weighted_uniform_defect(econ: &EconomyStatic, weights: (f64, f64), p: &UniformPoint) -> f64 {
    let Some((up_n, up_s)) = marginal_utilities(econ, p) else {
        return f64::NAN;
    };
    let (alpha_n, alpha_s) = weights;
    let cpp_n = econ.north.cost.curvature();
    let cpp_s = econ.south.cost.curvature();
    let benefit = -(alpha_n * up_n * econ.north.damage.slope(p.a)
        + alpha_s * up_s * econ.south.damage.slope(p.a));
    let denom = alpha_n * up_n * cpp_s + alpha_s * up_s * cpp_n;
    p.tau - benefit * (cpp_s + cpp_n) / denom
}

/// `tau - RHS(tau)` for the preferred uniform price of `region`.
fn preferred_defect(econ: &EconomyStatic, region: RegionId, p: &UniformPoint) -> f64 {
    let (own, other): (&RegionStatic, &RegionStatic) = match region {
        RegionId::North => (&econ.north, &econ.south),
        RegionId::South => (&econ.south, &econ.north),
    };
    let cpp_own = own.cost.curvature();
    let cpp_other = other.cost.curvature();
    p.tau + own.damage.slope(p.a) * (cpp_own + cpp_other) / cpp_other
}

fn finish_uniform(
    econ: &EconomyStatic,
    regime: Regime,
    tau: f64,
    residual: f64,
    iterations: usize,
    weights: Option<(f64, f64)>,
) -> Result<PriceSolution, SolveError> {
    let p = eval_uniform(econ, tau);
    // Validates positivity and the abatement domain, attributing failures
    // to the offending region.
    let cons_n = econ.north.consumption(p.a_north, p.a)?;
    let cons_s = econ.south.consumption(p.a_south, p.a)?;
    let weights = weights.unwrap_or_else(|| match regime {
        Regime::NegishiUniform => (
            1.0 / econ.utility.marginal_utility(cons_n.per_capita),
            1.0 / econ.utility.marginal_utility(cons_s.per_capita),
        ),
        Regime::UtilitarianUniform => (1.0, 1.0),
        Regime::Preferred(RegionId::North) => (1.0, 0.0),
        Regime::Preferred(RegionId::South) => (0.0, 1.0),
        _ => (1.0, 1.0),
    });
    Ok(PriceSolution {
        regime,
        tau_north: tau,
        tau_south: tau,
        abatement_north: p.a_north,
        abatement_south: p.a_south,
        x_north: cons_n.per_capita,
        x_south: cons_s.per_capita,
        weights,
        iterations,
        residual,
        x_order_violated: cons_n.per_capita <= cons_s.per_capita,
        multiple_solutions: false,
    })
}

const BRACKET_SCAN_POINTS: usize = 128;

fn solve_uniform(
    econ: &EconomyStatic,
    regime: Regime,
    regime_name: &'static str,
    defect: impl Fn(&UniformPoint) -> f64,
    tol: f64,
    weights: Option<(f64, f64)>,
) -> Result<PriceSolution, SolveError> {
    let tau_max = price_bracket_max(econ);
    let f = |tau: f64| defect(&eval_uniform(econ, tau));
    let xtol = (tol * 1e-3).max(4.0 * f64::EPSILON * tau_max.max(1.0));
    let (tau, residual, iterations) =
        match roots::solve_scalar(f, 0.0, tau_max, BRACKET_SCAN_POINTS, xtol) {
            Ok(hit) => hit,
            Err(RootError::NoBracket) => {
                return Err(SolveError::NoInteriorOptimum {
                    regime: regime_name,
                    tau_max,
                })
            }
            Err(RootError::MaxIterations { best_x, residual }) => {
                return Err(SolveError::NonConvergence {
                    iterations: 200,
                    residual,
                    trace: vec![best_x, residual],
                })
            }
        };
    if residual > tol {
        return Err(SolveError::NonConvergence {
            iterations,
            residual,
            trace: vec![tau, residual],
        });
    }
    finish_uniform(econ, regime, tau, residual, iterations, weights)
}

/// Negishi-weighted carbon price: the uniform price equal to the sum of
/// monetary marginal benefits of abatement, with the converged Negishi
/// weights `1/u'(x_i)` reported alongside.
pub fn solve_negishi_static(econ: &EconomyStatic, tol: f64) -> Result<PriceSolution, SolveError> {
    solve_uniform(
        econ,
        Regime::NegishiUniform,
        "negishi",
        |p| negishi_defect(econ, p),
        tol,
        None,
    )
}

/// Utilitarian uniform carbon price.
pub fn solve_utilitarian_uniform_static(
    econ: &EconomyStatic,
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    solve_uniform(
        econ,
        Regime::UtilitarianUniform,
        "utilitarian-uniform",
        |p| weighted_uniform_defect(econ, (1.0, 1.0), p),
        tol,
        None,
    )
}

/// Preferred uniform carbon price of one region: the uniform price that
/// maximizes that region's own consumption, i.e. welfare weights fully
/// assigned to it.
pub fn solve_preferred_static(
    econ: &EconomyStatic,
    region: RegionId,
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    solve_uniform(
        econ,
        Regime::Preferred(region),
        "preferred",
        |p| preferred_defect(econ, region, p),
        tol,
        None,
    )
}

/// Utilitarian differentiated carbon prices, equalizing marginal welfare
/// costs of abatement across regions.
pub fn solve_utilitarian_differentiated_static(
    econ: &EconomyStatic,
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    let mut sol = solve_differentiated(econ, (1.0, 1.0), tol)?;
    sol.regime = Regime::UtilitarianDifferentiated;
    Ok(sol)
}

/// Optimal prices for arbitrary nonnegative welfare weights; specializing
/// the weights recovers the named regimes.
pub fn solve_arbitrary_weights_static(
    econ: &EconomyStatic,
    weights: (f64, f64),
    uniform: bool,
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    let (alpha_n, alpha_s) = weights;
    if !(alpha_n >= 0.0 && alpha_s >= 0.0) || (alpha_n == 0.0 && alpha_s == 0.0) {
        return Err(SolveError::InvalidWeights(alpha_n, alpha_s));
    }
    if uniform {
        solve_uniform(
            econ,
            Regime::ArbitraryUniform,
            "arbitrary-uniform",
            |p| weighted_uniform_defect(econ, weights, p),
            tol,
            Some(weights),
        )
    } else {
        solve_differentiated(econ, weights, tol)
    }
}

/// The fixed-point map of the differentiated system: given candidate prices,
/// the implied next prices `T_i = -(1/(alpha_i u'_i)) sum_j alpha_j u'_j D_j'`.
fn differentiated_map(
    econ: &EconomyStatic,
    weights: (f64, f64),
    tau: [f64; 2],
) -> Option<[f64; 2]> {
    let (alpha_n, alpha_s) = weights;
    let a_n = econ.north.cost.abatement_at_price(tau[0]);
    let a_s = econ.south.cost.abatement_at_price(tau[1]);
    let a = a_n + a_s;
    let x_n = econ.north.consumption_unchecked(a_n, a);
    let x_s = econ.south.consumption_unchecked(a_s, a);
    if x_n <= 0.0 || x_s <= 0.0 {
        return None;
    }
    let up_n = econ.utility.marginal_utility(x_n / econ.north.population);
    let up_s = econ.utility.marginal_utility(x_s / econ.south.population);
    let benefit = -(alpha_n * up_n * econ.north.damage.slope(a)
        + alpha_s * up_s * econ.south.damage.slope(a));
    Some([benefit / (alpha_n * up_n), benefit / (alpha_s * up_s)])
}

fn solve_differentiated(
    econ: &EconomyStatic,
    weights: (f64, f64),
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    let (alpha_n, alpha_s) = weights;
    if alpha_n == 0.0 || alpha_s == 0.0 {
        return solve_differentiated_edge(econ, weights, tol);
    }

    // The Negishi price is always solvable and feasible; it anchors the
    // restart points and the price scale.
    let negishi = solve_negishi_static(econ, tol)?;
    let anchor = negishi.tau();
    let caps = [
        econ.north.cost.mac(econ.north.damage.e_bar),
        econ.south.cost.mac(econ.south.damage.e_bar),
    ];
    let starts = [
        [anchor, anchor],
        [1.5 * anchor, 0.6 * anchor],
        [0.6 * anchor, 1.5 * anchor],
    ];

    let mut converged: Vec<([f64; 2], f64, usize)> = Vec::new();
    let mut last_trace: Vec<f64> = Vec::new();
    for start in starts {
        match differentiated_from(econ, weights, start, caps, tol) {
            Ok(hit) => converged.push(hit),
            Err(SolveError::NonConvergence { trace, .. }) => last_trace = trace,
            Err(e) => return Err(e),
        }
    }
    if converged.is_empty() {
        return Err(SolveError::NonConvergence {
            iterations: MAX_FIXED_POINT + MAX_NEWTON,
            residual: f64::NAN,
            trace: last_trace,
        });
    }
    let scale = anchor.max(1.0);
    let mut multiple = false;
    let best = converged[0];
    for other in &converged[1..] {
        let spread = (other.0[0] - best.0[0])
            .abs()
            .max((other.0[1] - best.0[1]).abs());
        if spread > 100.0 * tol * scale {
            multiple = true;
        }
    }

    let ([tau_n, tau_s], residual, iterations) = best;
    let a_n = econ.north.cost.abatement_at_price(tau_n);
    let a_s = econ.south.cost.abatement_at_price(tau_s);
    let a = a_n + a_s;
    let cons_n = econ.north.consumption(a_n, a)?;
    let cons_s = econ.south.consumption(a_s, a)?;
    Ok(PriceSolution {
        regime: Regime::ArbitraryDifferentiated,
        tau_north: tau_n,
        tau_south: tau_s,
        abatement_north: a_n,
        abatement_south: a_s,
        x_north: cons_n.per_capita,
        x_south: cons_s.per_capita,
        weights,
        iterations,
        residual,
        x_order_violated: cons_n.per_capita <= cons_s.per_capita,
        multiple_solutions: multiple,
    })
}

const MAX_FIXED_POINT: usize = 200;
const MAX_NEWTON: usize = 50;
const DAMPING: f64 = 0.5;

fn fixed_point_residual(tau: [f64; 2], mapped: [f64; 2]) -> f64 {
    (tau[0] - mapped[0]).abs().max((tau[1] - mapped[1]).abs())
}

fn differentiated_from(
    econ: &EconomyStatic,
    weights: (f64, f64),
    start: [f64; 2],
    caps: [f64; 2],
    tol: f64,
) -> Result<([f64; 2], f64, usize), SolveError> {
    let clamp = |t: [f64; 2]| [t[0].clamp(0.0, caps[0]), t[1].clamp(0.0, caps[1])];
    let mut tau = clamp(start);
    // Pull an infeasible start back toward zero until the map is defined.
    let mut guard = 0;
    while differentiated_map(econ, weights, tau).is_none() {
        tau = [0.5 * tau[0], 0.5 * tau[1]];
        guard += 1;
        if guard > 60 {
            return Err(SolveError::NonConvergence {
                iterations: guard,
                residual: f64::NAN,
                trace: vec![tau[0], tau[1]],
            });
        }
    }

    let mut iterations = 0;
    let mut trace = Vec::new();
    let mut residual = f64::INFINITY;

    // Damped fixed point to get into the Newton basin.
    for _ in 0..MAX_FIXED_POINT {
        iterations += 1;
        let Some(mapped) = differentiated_map(econ, weights, tau) else {
            break;
        };
        residual = fixed_point_residual(tau, mapped);
        trace.push(residual);
        if residual <= 1e-6 {
            break;
        }
        let next = clamp([
            (1.0 - DAMPING) * tau[0] + DAMPING * mapped[0],
            (1.0 - DAMPING) * tau[1] + DAMPING * mapped[1],
        ]);
        if differentiated_map(econ, weights, next).is_some() {
            tau = next;
        } else {
            tau = clamp([0.5 * (tau[0] + next[0]), 0.5 * (tau[1] + next[1])]);
        }
    }

    // Newton polish on G(tau) = tau - T(tau).
    let defect = |t: [f64; 2]| -> Option<[f64; 2]> {
        differentiated_map(econ, weights, t).map(|m| [t[0] - m[0], t[1] - m[1]])
    };
    for _ in 0..MAX_NEWTON {
        iterations += 1;
        let Some(g) = defect(tau) else { break };
        residual = g[0].abs().max(g[1].abs());
        trace.push(residual);
        if residual <= tol * 1e-2 {
            return Ok((tau, residual, iterations));
        }
        let h0 = 1e-7 * tau[0].abs().max(1.0);
        let h1 = 1e-7 * tau[1].abs().max(1.0);
        let (Some(gn0), Some(gn1)) = (defect([tau[0] + h0, tau[1]]), defect([tau[0], tau[1] + h1]))
        else {
            break;
        };
        let j = [
            [(gn0[0] - g[0]) / h0, (gn1[0] - g[0]) / h1],
            [(gn0[1] - g[1]) / h0, (gn1[1] - g[1]) / h1],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-300 {
            break;
        }
        let dx = [
            (g[0] * j[1][1] - g[1] * j[0][1]) / det,
            (g[1] * j[0][0] - g[0] * j[1][0]) / det,
        ];
        // Backtracking line search on the residual norm.
        let mut step = 1.0;
        let mut advanced = false;
        for _ in 0..30 {
            let cand = clamp([tau[0] - step * dx[0], tau[1] - step * dx[1]]);
            if let Some(gc) = defect(cand) {
                if gc[0].abs().max(gc[1].abs()) < residual {
                    tau = cand;
                    advanced = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !advanced {
            break;
        }
    }
    if residual <= tol {
        return Ok((tau, residual, iterations));
    }
    let tail: Vec<f64> = trace.iter().rev().take(8).copied().collect();
    Err(SolveError::NonConvergence {
        iterations,
        residual,
        trace: tail,
    })
}

/// Differentiated regime when one region carries zero weight: the ignored
/// region faces no price, and the weighted region's condition collapses to
/// its own benefit balance `tau_i = -D_i'(A_i(tau_i))`.
fn solve_differentiated_edge(
    econ: &EconomyStatic,
    weights: (f64, f64),
    tol: f64,
) -> Result<PriceSolution, SolveError> {
    let weighted = if weights.0 > 0.0 {
        RegionId::North
    } else {
        RegionId::South
    };
    let own: &RegionStatic = match weighted {
        RegionId::North => &econ.north,
        RegionId::South => &econ.south,
    };
    let tau_max = price_bracket_max(econ);
    let f = |tau: f64| {
        let a = own.cost.abatement_at_price(tau);
        tau + own.damage.slope(a)
    };
    let xtol = (tol * 1e-3).max(4.0 * f64::EPSILON * tau_max.max(1.0));
    let (tau, residual, iterations) =
        roots::solve_scalar(f, 0.0, tau_max, BRACKET_SCAN_POINTS, xtol).map_err(|e| match e {
            RootError::NoBracket => SolveError::NoInteriorOptimum {
                regime: "arbitrary-differentiated-edge",
                tau_max,
            },
            RootError::MaxIterations { best_x, residual } => SolveError::NonConvergence {
                iterations: 200,
                residual,
                trace: vec![best_x],
            },
        })?;
    let (tau_n, tau_s) = match weighted {
        RegionId::North => (tau, 0.0),
        RegionId::South => (0.0, tau),
    };
    let a_n = econ.north.cost.abatement_at_price(tau_n);
    let a_s = econ.south.cost.abatement_at_price(tau_s);
    let a = a_n + a_s;
    let cons_n = econ.north.consumption(a_n, a)?;
    let cons_s = econ.south.consumption(a_s, a)?;
    Ok(PriceSolution {
        regime: Regime::ArbitraryDifferentiated,
        tau_north: tau_n,
        tau_south: tau_s,
        abatement_north: a_n,
        abatement_south: a_s,
        x_north: cons_n.per_capita,
        x_south: cons_s.per_capita,
        weights,
        iterations,
        residual,
        x_order_violated: cons_n.per_capita <= cons_s.per_capita,
        multiple_solutions: false,
    })
}

/// All six named prices of one economy, solved together.
#[derive(Debug, Clone)]
pub struct RegimeSet {
    pub negishi: PriceSolution,
    pub utilitarian_uniform: PriceSolution,
    pub utilitarian_differentiated: PriceSolution,
    pub preferred_north: PriceSolution,
    pub preferred_south: PriceSolution,
}

pub fn solve_all_regimes(econ: &EconomyStatic, tol: f64) -> Result<RegimeSet, SolveError> {
    Ok(RegimeSet {
        negishi: solve_negishi_static(econ, tol)?,
        utilitarian_uniform: solve_utilitarian_uniform_static(econ, tol)?,
        utilitarian_differentiated: solve_utilitarian_differentiated_static(econ, tol)?,
        preferred_north: solve_preferred_static(econ, RegionId::North, tol)?,
        preferred_south: solve_preferred_static(econ, RegionId::South, tol)?,
    })
}

/// Second-line approximation of the utilitarian-to-Negishi uniform price
/// ratio as a function of South/North ratios alone:
/// population `L_S/L_N`, per capita endowment `w_S/w_N`, per-endowment
/// marginal damages `d_S'/d_N'`, cost curvatures `c_N''/c_S''` (note the
/// North-over-South orientation), and the utility curvature `eta`.
pub fn ratio_approx_static(
    l_ratio_sn: f64,
    w_ratio_sn: f64,
    d_ratio_sn: f64,
    c_ratio_ns: f64,
    eta: f64,
) -> f64 {
    let lw = l_ratio_sn * w_ratio_sn;
    let lw_eta = l_ratio_sn * w_ratio_sn.powf(1.0 - eta);
    let benefit = (lw_eta * d_ratio_sn + 1.0) / (lw * d_ratio_sn + 1.0);
    let burden = (lw * c_ratio_ns + 1.0) / (lw_eta * c_ratio_ns + 1.0);
    benefit * burden
}
