//! Side-by-side optimization of the three carbon price regimes on one
//! scenario, plus the welfare accounting that compares them.
//!
//! Warm-start seeding chains the regimes: the uniform search starts (among
//! other points) from the Negishi outcome's mean price path, and the
//! differentiated search from the uniform optimum embedded as per-region
//! control rates. Since a warm start is a feasible point of the larger
//! problem, the welfare ordering differentiated >= uniform holds by
//! construction up to optimizer tolerance, which is exactly the ordering
//! the constrained-optimum nesting implies.

use super::accounting::{welfare_equivalent_consumption_change, WeccScope};
use super::optimize::{
    as_differentiated, mean_price_path, optimize_negishi, optimize_policy,
    uniform_policy_from_prices, Objective, PolicyOutcome,
};
use super::scenario::{IamScenario, PolicyMode};
use super::swf::{evaluate_swf, Swf};
use super::IamError;
use crate::optimizer::OptimizerConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeKind {
    Negishi,
    UtilitarianUniform,
    UtilitarianDifferentiated,
}

impl RegimeKind {
    pub fn label(&self) -> &'static str {
        match self {
            RegimeKind::Negishi => "negishi",
            RegimeKind::UtilitarianUniform => "utilitarian-uniform",
            RegimeKind::UtilitarianDifferentiated => "utilitarian-differentiated",
        }
    }
}

/// One optimized regime with its welfare diagnostics.
#[derive(Debug, Clone)]
pub struct RegimeReport {
    pub kind: RegimeKind,
    pub outcome: PolicyOutcome,
    /// Welfare of this regime's trajectory under the utilitarian SWF.
    pub welfare_utilitarian: f64,
    /// Welfare under the Negishi run's converged weights.
    pub welfare_negishi_weighted: f64,
    pub mean_prices: Vec<f64>,
    pub peak_temperature: f64,
    pub cumulative_emissions: f64,
    /// Welfare-equivalent consumption change versus the Negishi trajectory,
    /// per region and as the global equal-distribution value.
    pub wecc_vs_negishi: Vec<f64>,
    pub wecc_global_vs_negishi: f64,
}

#[derive(Debug, Clone)]
pub struct RegimeComparison {
    pub negishi_weights: Vec<Vec<f64>>,
    pub negishi_outer_iterations: usize,
    pub reports: Vec<RegimeReport>,
}

impl RegimeComparison {
    pub fn report(&self, kind: RegimeKind) -> Option<&RegimeReport> {
        self.reports.iter().find(|r| r.kind == kind)
    }
}

/// Optimizes the requested regimes and assembles the comparison. The
/// Negishi regime always runs: it anchors the weights, the warm starts and
/// the welfare-equivalent consumption changes.
pub fn compare_regimes(
    scenario: &IamScenario,
    kinds: &[RegimeKind],
    cfg: &OptimizerConfig,
    negishi_weight_tol: f64,
) -> Result<RegimeComparison, IamError> {
    scenario.validate()?;
    let negishi = optimize_negishi(scenario, cfg, negishi_weight_tol, 50)?;

    let uniform_warm =
        uniform_policy_from_prices(scenario, &mean_price_path(scenario, &negishi.trajectory));
    let uniform = if kinds.contains(&RegimeKind::UtilitarianUniform)
        || kinds.contains(&RegimeKind::UtilitarianDifferentiated)
    {
        Some(optimize_policy(
            scenario,
            Objective::Utilitarian,
            PolicyMode::Uniform,
            cfg,
            &[uniform_warm],
        )?)
    } else {
        None
    };

    let differentiated = if kinds.contains(&RegimeKind::UtilitarianDifferentiated) {
        let mut warm = vec![as_differentiated(scenario, &negishi.policy)];
        if let Some(u) = &uniform {
            warm.insert(0, as_differentiated(scenario, &u.policy));
        }
        Some(optimize_policy(
            scenario,
            Objective::Utilitarian,
            PolicyMode::Differentiated,
            cfg,
            &warm,
        )?)
    } else {
        None
    };

    let negishi_outcome = PolicyOutcome {
        policy: negishi.policy,
        trajectory: negishi.trajectory,
        result: negishi.result,
    };
    let mut reports = Vec::new();
    for (kind, outcome) in [
        (RegimeKind::Negishi, Some(negishi_outcome)),
        (RegimeKind::UtilitarianUniform, uniform),
        (RegimeKind::UtilitarianDifferentiated, differentiated),
    ] {
        let Some(outcome) = outcome else { continue };
        if kind != RegimeKind::Negishi && !kinds.contains(&kind) {
            continue;
        }
        let report = build_report(scenario, kind, outcome, &negishi.weights, &reports)?;
        reports.push(report);
    }
    Ok(RegimeComparison {
        negishi_weights: negishi.weights,
        negishi_outer_iterations: negishi.outer_iterations,
        reports,
    })
}

fn build_report(
    scenario: &IamScenario,
    kind: RegimeKind,
    outcome: PolicyOutcome,
    negishi_weights: &[Vec<f64>],
    prior: &[RegimeReport],
) -> Result<RegimeReport, IamError> {
    let welfare_utilitarian = evaluate_swf(
        scenario,
        &outcome.trajectory,
        Swf::Utilitarian,
        scenario.rho,
    )?;
    let welfare_negishi_weighted = evaluate_swf(
        scenario,
        &outcome.trajectory,
        Swf::NegishiWeighted(negishi_weights),
        scenario.rho,
    )?;
    let negishi_traj = prior
        .iter()
        .find(|r| r.kind == RegimeKind::Negishi)
        .map(|r| &r.outcome.trajectory);
    let (wecc_vs_negishi, wecc_global_vs_negishi) = match negishi_traj {
        Some(reference) => {
            let per_region = (0..scenario.n_regions())
                .map(|i| {
                    welfare_equivalent_consumption_change(
                        scenario,
                        &outcome.trajectory,
                        reference,
                        WeccScope::Region(i),
                    )
                })
                .collect::<Result<Vec<f64>, IamError>>()?;
            let global = welfare_equivalent_consumption_change(
                scenario,
                &outcome.trajectory,
                reference,
                WeccScope::GlobalEqual,
            )?;
            (per_region, global)
        }
        None => (vec![0.0; scenario.n_regions()], 0.0),
    };
    Ok(RegimeReport {
        kind,
        mean_prices: mean_price_path(scenario, &outcome.trajectory),
        peak_temperature: outcome.trajectory.peak_temperature(),
        cumulative_emissions: outcome.trajectory.total_cumulative_emissions(),
        welfare_utilitarian,
        welfare_negishi_weighted,
        wecc_vs_negishi,
        wecc_global_vs_negishi,
        outcome,
    })
}

/// Per-region preferred uniform price paths: each region's own welfare
/// maximized over the shared uniform price.
pub fn preferred_uniform_prices(
    scenario: &IamScenario,
    cfg: &OptimizerConfig,
) -> Result<Vec<PolicyOutcome>, IamError> {
    (0..scenario.n_regions())
        .map(|i| {
            optimize_policy(
                scenario,
                Objective::Regional(i),
                PolicyMode::Uniform,
                cfg,
                &[],
            )
        })
        .collect()
}
