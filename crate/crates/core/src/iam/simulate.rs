use super::scenario::{IamScenario, PolicyPath};
use super::IamError;

/// Relative consumption floor: per capita consumption is floored at this
/// fraction of per capita gross output before utility is evaluated, so
/// derivative-free search never feeds `u` a nonpositive argument.
pub const CONSUMPTION_FLOOR: f64 = 1e-9;

/// A deterministic forward run of the model.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// Aggregate consumption `X_it = Y_it (1 - d_it(T_t)) - C_it` as
    /// computed, possibly below the floor (the accounting identity holds on
    /// this field).
    pub consumption: Vec<Vec<f64>>,
    /// Floored per capita consumption used for welfare evaluation.
    pub per_capita: Vec<Vec<f64>>,
    /// Industrial emissions (annual flow).
    pub emissions: Vec<Vec<f64>>,
    pub abatement_cost: Vec<Vec<f64>>,
    /// Damages `Y_it * d_it(T_t)` (money).
    pub damage: Vec<Vec<f64>>,
    /// Region carbon price `b mu^(theta-1)`.
    pub carbon_price: Vec<Vec<f64>>,
    pub control_rate: Vec<Vec<f64>>,
    /// Global cumulative emissions (mass) through each period, including
    /// the exogenous path.
    pub cumulative_emissions: Vec<f64>,
    pub temperature: Vec<f64>,
    /// Number of region-periods that hit the consumption floor.
    pub floor_violations: usize,
    /// Sum of squared relative shortfalls below the floor; welfare
    /// evaluation penalizes this so optimizers retreat from the region.
    pub floor_penalty: f64,
}

impl Trajectory {
    pub fn total_cumulative_emissions(&self) -> f64 {
        *self
            .cumulative_emissions
            .last()
            .expect("trajectory has at least one period")
    }

    pub fn peak_temperature(&self) -> f64 {
        self.temperature
            .iter()
            .fold(f64::NEG_INFINITY, |m, t| m.max(*t))
    }
}

/// Runs the model forward: emissions accumulate, temperature follows the
/// linear cumulative-emissions map, damages and abatement costs come out of
/// gross output, and the remainder is consumed.
pub fn simulate(scenario: &IamScenario, policy: &PolicyPath) -> Result<Trajectory, IamError> {
    scenario.validate()?;
    policy.check_dimensions(scenario)?;

    let n = scenario.n_regions();
    let t_len = scenario.periods;
    let mut out = Trajectory {
        consumption: vec![vec![0.0; t_len]; n],
        per_capita: vec![vec![0.0; t_len]; n],
        emissions: vec![vec![0.0; t_len]; n],
        abatement_cost: vec![vec![0.0; t_len]; n],
        damage: vec![vec![0.0; t_len]; n],
        carbon_price: vec![vec![0.0; t_len]; n],
        control_rate: vec![vec![0.0; t_len]; n],
        cumulative_emissions: vec![0.0; t_len],
        temperature: vec![0.0; t_len],
        floor_violations: 0,
        floor_penalty: 0.0,
    };

    let mut cum_e = 0.0;
    for t in 0..t_len {
        let mut period_emissions = scenario.exogenous_emissions[t];
        for (i, region) in scenario.regions.iter().enumerate() {
            let mu = policy.control_rate(scenario, i, t);
            out.control_rate[i][t] = mu;
            out.emissions[i][t] =
                region.emission_intensity[t] * region.output_gross[t] * (1.0 - mu);
            out.abatement_cost[i][t] = region.abatement_cost(t, mu);
            out.carbon_price[i][t] = region.carbon_price(t, mu);
            period_emissions += out.emissions[i][t];
        }
        cum_e += period_emissions * scenario.step_years;
        out.cumulative_emissions[t] = cum_e;
        let temp = scenario.t0 + scenario.climate_slope * cum_e;
        out.temperature[t] = temp;

        for (i, region) in scenario.regions.iter().enumerate() {
            let damage = region.output_gross[t] * region.damage_fraction(temp);
            out.damage[i][t] = damage;
            let consumption = region.output_gross[t] - damage - out.abatement_cost[i][t];
            out.consumption[i][t] = consumption;
            let x = consumption / region.population[t];
            let floor = CONSUMPTION_FLOOR * region.output_gross[t] / region.population[t];
            if x < floor {
                out.floor_violations += 1;
                let y_pc = region.output_gross[t] / region.population[t];
                let shortfall = (floor - x) / y_pc;
                out.floor_penalty += shortfall * shortfall;
                out.per_capita[i][t] = floor;
            } else {
                out.per_capita[i][t] = x;
            }
        }
    }
    Ok(out)
}
