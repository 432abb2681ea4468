use super::scenario::{IamScenario, PolicyMode, PolicyPath};
use super::simulate::{simulate, Trajectory};
use super::swf::{evaluate_swf, negishi_weights_at, weight_change, Swf};
use super::IamError;
use crate::optimizer::{maximize_bounded_from, OptResult, OptimizerConfig};

/// Objective of a single policy optimization run.
#[derive(Debug, Clone, Copy)]
pub enum Objective<'a> {
    /// Discounted utilitarian welfare.
    Utilitarian,
    /// One region's own discounted welfare (preferred-price runs).
    Regional(usize),
    /// Discounted welfare under fixed region-period weights.
    FixedWeights(&'a [Vec<f64>]),
}

/// A solved policy optimization.
#[derive(Debug, Clone)]
pub struct PolicyOutcome {
    pub policy: PolicyPath,
    pub trajectory: Trajectory,
    pub result: OptResult,
}

fn swf_of<'a>(objective: &'a Objective<'_>) -> Swf<'a> {
    match objective {
        Objective::Utilitarian => Swf::Utilitarian,
        Objective::Regional(i) => Swf::Regional(*i),
        Objective::FixedWeights(w) => Swf::NegishiWeighted(w),
    }
}

/// Maximizes the chosen welfare objective over bounded control rates (or
/// normalized uniform prices) with the Subplex stack. `warm_starts` seed
/// the first restart slots; remaining slots jitter under the config seed.
pub fn optimize_policy(
    scenario: &IamScenario,
    objective: Objective<'_>,
    mode: PolicyMode,
    cfg: &OptimizerConfig,
    warm_starts: &[PolicyPath],
) -> Result<PolicyOutcome, IamError> {
    scenario.validate()?;
    let dim = match mode {
        PolicyMode::Differentiated => scenario.n_regions() * scenario.periods,
        PolicyMode::Uniform => scenario.periods,
    };
    let lower = vec![0.0; dim];
    let upper = vec![1.0; dim];
    let swf = swf_of(&objective);
    let objective_fn = |x: &[f64]| -> f64 {
        let policy = PolicyPath::from_vector(scenario, mode, x);
        match simulate(scenario, &policy) {
            Ok(traj) => {
                evaluate_swf(scenario, &traj, swf, scenario.rho).unwrap_or(f64::NEG_INFINITY)
            }
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let warm_vectors: Vec<Vec<f64>> = warm_starts
        .iter()
        .map(|p| {
            p.check_dimensions(scenario)?;
            if p.mode != mode {
                return Err(IamError::Invalid(
                    "warm start has the wrong policy mode".into(),
                ));
            }
            Ok(p.to_vector())
        })
        .collect::<Result<_, IamError>>()?;
    let result = maximize_bounded_from(
        &objective_fn,
        if warm_vectors.is_empty() {
            None
        } else {
            Some(&warm_vectors)
        },
        &lower,
        &upper,
        cfg,
    )?;
    let policy = PolicyPath::from_vector(scenario, mode, &result.x);
    let trajectory = simulate(scenario, &policy)?;
    Ok(PolicyOutcome {
        policy,
        trajectory,
        result,
    })
}

/// Converged Negishi regime: the weight fixed point wrapped around the
/// differentiated policy optimization.
#[derive(Debug, Clone)]
pub struct NegishiOutcome {
    pub policy: PolicyPath,
    pub trajectory: Trajectory,
    pub weights: Vec<Vec<f64>>,
    pub result: OptResult,
    pub outer_iterations: usize,
    pub final_weight_change: f64,
}

/// Iterates: optimize the weighted SWF, refresh the weights from the
/// optimal trajectory, repeat until the largest relative weight change
/// falls below `weight_tol`. Later inner runs warm-start from the previous
/// optimum with a single restart, so the loop spends its budget up front.
pub fn optimize_negishi(
    scenario: &IamScenario,
    cfg: &OptimizerConfig,
    weight_tol: f64,
    max_outer: usize,
) -> Result<NegishiOutcome, IamError> {
    scenario.validate()?;
    let baseline = simulate(
        scenario,
        &PolicyPath::zero(scenario, PolicyMode::Differentiated),
    )?;
    let mut weights = negishi_weights_at(scenario, &baseline);
    let mut warm: Vec<PolicyPath> = Vec::new();
    let mut change_trace: Vec<f64> = Vec::new();

    for outer in 0..max_outer {
        let inner_cfg = OptimizerConfig {
            restarts: if outer == 0 { cfg.restarts } else { 1 },
            seed: cfg.seed.wrapping_add(outer as u64),
            ..cfg.clone()
        };
        let outcome = optimize_policy(
            scenario,
            Objective::FixedWeights(&weights),
            PolicyMode::Differentiated,
            &inner_cfg,
            &warm,
        )?;
        let next = negishi_weights_at(scenario, &outcome.trajectory);
        let change = weight_change(&weights, &next);
        change_trace.push(change);
        if change <= weight_tol {
            // Return the weights the final optimization actually used, so
            // the equalization property is a statement about convergence
            // rather than a construction artifact.
            return Ok(NegishiOutcome {
                policy: outcome.policy,
                trajectory: outcome.trajectory,
                weights,
                result: outcome.result,
                outer_iterations: outer + 1,
                final_weight_change: change,
            });
        }
        weights = next;
        warm = vec![outcome.policy.clone()];
    }
    Err(IamError::WeightsNotConverged {
        iterations: max_outer,
        trace: change_trace,
    })
}

/// Builds a uniform policy whose per-period price approximates a target
/// price path (clamped into the normalized decision box). Used to seed the
/// uniform optimization from another regime's outcome.
pub fn uniform_policy_from_prices(scenario: &IamScenario, prices: &[f64]) -> PolicyPath {
    let rates = vec![(0..scenario.periods)
        .map(|t| (prices[t] / scenario.max_backstop(t)).clamp(0.0, 1.0))
        .collect()];
    PolicyPath {
        mode: PolicyMode::Uniform,
        rates,
    }
}

/// Output-share-weighted average carbon price per period of a trajectory.
pub fn mean_price_path(scenario: &IamScenario, trajectory: &Trajectory) -> Vec<f64> {
    (0..scenario.periods)
        .map(|t| {
            let total: f64 = scenario.regions.iter().map(|r| r.output_gross[t]).sum();
            scenario
                .regions
                .iter()
                .enumerate()
                .map(|(i, r)| trajectory.carbon_price[i][t] * r.output_gross[t] / total)
                .sum()
        })
        .collect()
}

/// Re-expresses a policy as differentiated control rates (identity for
/// differentiated policies). The embedding lets the differentiated search
/// start exactly at a uniform optimum.
pub fn as_differentiated(scenario: &IamScenario, policy: &PolicyPath) -> PolicyPath {
    let rates = (0..scenario.n_regions())
        .map(|i| {
            (0..scenario.periods)
                .map(|t| policy.control_rate(scenario, i, t))
                .collect()
        })
        .collect();
    PolicyPath {
        mode: PolicyMode::Differentiated,
        rates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iam::calibration::bundled_scenario;

    fn quick_cfg(seed: u64) -> OptimizerConfig {
        OptimizerConfig {
            max_evals: 30_000,
            xtol: 1e-7,
            ftol: 1e-9,
            restarts: 2,
            seed,
            ..OptimizerConfig::default()
        }
    }

    #[test]
    fn zero_damages_make_idleness_optimal() {
        let mut scenario = bundled_scenario();
        for r in &mut scenario.regions {
            r.damage_linear = 0.0;
            r.damage_quadratic = 0.0;
        }
        let out = optimize_policy(
            &scenario,
            Objective::Utilitarian,
            PolicyMode::Uniform,
            &quick_cfg(3),
            &[],
        )
        .unwrap();
        for t in 0..scenario.periods {
            let tau = out.policy.rates[0][t] * scenario.max_backstop(t);
            assert!(tau < 1e-3, "period {t} price {tau}");
        }
    }

    #[test]
    fn warm_start_guarantees_no_regression() {
        let scenario = bundled_scenario();
        let uniform = optimize_policy(
            &scenario,
            Objective::Utilitarian,
            PolicyMode::Uniform,
            &quick_cfg(5),
            &[],
        )
        .unwrap();
        let f_uniform = evaluate_swf(
            &scenario,
            &uniform.trajectory,
            Swf::Utilitarian,
            scenario.rho,
        )
        .unwrap();
        let embedded = as_differentiated(&scenario, &uniform.policy);
        let diff = optimize_policy(
            &scenario,
            Objective::Utilitarian,
            PolicyMode::Differentiated,
            &quick_cfg(6),
            &[embedded],
        )
        .unwrap();
        assert!(diff.result.f >= f_uniform - 1e-9 * f_uniform.abs());
    }

    #[test]
    fn negishi_outer_loop_converges() {
        let scenario = bundled_scenario();
        let out = optimize_negishi(&scenario, &quick_cfg(7), 1e-5, 50).unwrap();
        assert!(out.outer_iterations <= 50);
        assert!(out.final_weight_change <= 1e-5);
        // Weighted marginal utilities equalize within each period at the
        // converged trajectory.
        for t in 0..scenario.periods {
            let vals: Vec<f64> = (0..scenario.n_regions())
                .map(|i| {
                    out.weights[i][t]
                        * scenario
                            .utility
                            .marginal_utility(out.trajectory.per_capita[i][t])
                })
                .collect();
            let mean = vals.iter().sum::<f64>() / vals.len() as f64;
            for v in &vals {
                assert!(
                    (v - mean).abs() / mean <= 1e-4,
                    "period {t}: weighted marginal utilities {vals:?}"
                );
            }
        }
    }
}
