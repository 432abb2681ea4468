//! Welfare accounting: welfare-equivalent consumption changes between
//! trajectories and marginal-damage pulse experiments.

use super::scenario::{IamScenario, PolicyPath};
use super::simulate::{simulate, Trajectory};
use super::IamError;

/// Whose welfare gap to express as an initial-period consumption change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeccScope {
    /// One region's own welfare gap, expressed in its own period-0
    /// consumption.
    Region(usize),
    /// The global welfare gap, expressed in the period-0 consumption of the
    /// world-average consumer (consumption distributed equally).
    GlobalEqual,
}

/// Aggregate initial-period consumption change (money) that replicates the
/// discounted welfare difference `W(a) - W(b)`: positive when trajectory
/// `a` is the better one. Computed by inverting the utility function around
/// trajectory `b`'s initial consumption; a gap too negative for the utility
/// range reports an unboundedly-negative-equivalent error.
pub fn welfare_equivalent_consumption_change(
    scenario: &IamScenario,
    traj_a: &Trajectory,
    traj_b: &Trajectory,
    scope: WeccScope,
) -> Result<f64, IamError> {
    let u = &scenario.utility;
    let npv_gap = |i: usize| -> f64 {
        (0..scenario.periods)
            .map(|t| {
                scenario.regions[i].population[t]
                    * scenario.discount_factor(t)
                    * (u.utility(traj_a.per_capita[i][t]) - u.utility(traj_b.per_capita[i][t]))
            })
            .sum()
    };
    match scope {
        WeccScope::Region(i) => {
            if i >= scenario.n_regions() {
                return Err(IamError::Invalid(format!("no region with index {i}")));
            }
            let l0 = scenario.regions[i].population[0];
            let delta = npv_gap(i) / l0;
            if delta == 0.0 {
                return Ok(0.0);
            }
            let x0 = traj_b.per_capita[i][0];
            let target = u.utility(x0) + delta;
            let x_cf =
                u.consumption_for_utility(target)
                    .ok_or_else(|| IamError::WeccOutOfDomain {
                        region: scenario.regions[i].name.clone(),
                    })?;
            Ok(l0 * (x_cf - x0))
        }
        WeccScope::GlobalEqual => {
            let l0_total: f64 = scenario.regions.iter().map(|r| r.population[0]).sum();
            let total_gap: f64 = (0..scenario.n_regions()).map(npv_gap).sum();
            if total_gap == 0.0 {
                return Ok(0.0);
            }
            let x_bar = (0..scenario.n_regions())
                .map(|i| scenario.regions[i].population[0] * traj_b.per_capita[i][0])
                .sum::<f64>()
                / l0_total;
            let target = u.utility(x_bar) + total_gap / l0_total;
            let x_cf = u
                .consumption_for_utility(target)
                .ok_or(IamError::WeccOutOfDomain {
                    region: "world-average".into(),
                })?;
            Ok(l0_total * (x_cf - x_bar))
        }
    }
}

/// Per-region present value of the damage stream caused by one extra unit
/// of emissions released in `pulse_period`, on top of a fixed policy.
///
/// Each region's consumption losses are discounted back to the pulse period
/// with its own factor `beta^(t - pulse) u'(x_it)/u'(x_i,pulse)` along the
/// base trajectory, then scaled per unit of pulse mass. Period flows are
/// annual, so each period contributes `step_years` years of the flow.
pub fn marginal_damage_pulse(
    scenario: &IamScenario,
    policy: &PolicyPath,
    pulse_period: usize,
    pulse_size: f64,
) -> Result<Vec<f64>, IamError> {
    if pulse_period >= scenario.periods {
        return Err(IamError::Invalid(format!(
            "pulse period {pulse_period} outside horizon {}",
            scenario.periods
        )));
    }
    if !(pulse_size > 0.0) {
        return Err(IamError::Invalid("pulse size must be positive".into()));
    }
    let base = simulate(scenario, policy)?;
    let mut pulsed_scenario = scenario.clone();
    // The exogenous path is an annual flow; spreading the pulse mass over
    // the period raises cumulative emissions by exactly `pulse_size`.
    pulsed_scenario.exogenous_emissions[pulse_period] += pulse_size / scenario.step_years;
    let pulsed = simulate(&pulsed_scenario, policy)?;
    if pulsed.floor_violations > base.floor_violations {
        return Err(IamError::PulseDestabilized);
    }

    let u = &scenario.utility;
    let values = (0..scenario.n_regions())
        .map(|i| {
            let u_prime_at_pulse = u.marginal_utility(base.per_capita[i][pulse_period]);
            (pulse_period..scenario.periods)
                .map(|t| {
                    let loss = base.consumption[i][t] - pulsed.consumption[i][t];
                    let years = (t - pulse_period) as f64 * scenario.step_years;
                    let discount = (1.0 + scenario.rho).powf(-years)
                        * u.marginal_utility(base.per_capita[i][t])
                        / u_prime_at_pulse;
                    loss * scenario.step_years * discount
                })
                .sum::<f64>()
                / pulse_size
        })
        .collect();
    Ok(values)
}
