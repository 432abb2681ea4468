use serde::{Deserialize, Serialize};

use super::IamError;
use crate::econ::UtilityParams;

/// One region of the N-region simulator. All paths are annual flows sampled
/// once per period; money is in model units (the bundled calibration uses
/// trillions of dollars and gigatonnes of CO2, making one price unit equal
/// to 1000 dollars per tonne).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionPath {
    pub name: String,
    /// Population path `L_it` (persons, model units).
    pub population: Vec<f64>,
    /// Gross output path `Y_it` (money), before damages and abatement.
    pub output_gross: Vec<f64>,
    /// Baseline emission intensity path `sigma_it` (emissions per money).
    pub emission_intensity: Vec<f64>,
    /// Backstop price path `b_it` (money per emissions): the marginal
    /// abatement cost at which the region abates everything.
    pub backstop: Vec<f64>,
    /// Abatement cost exponent, theta > 1.
    pub theta: f64,
    /// Damage fraction coefficients: `d(T) = a1 T + a2 T^2`, clipped at 1.
    pub damage_linear: f64,
    pub damage_quadratic: f64,
}

impl RegionPath {
    /// Abatement cost at control rate `mu`:
    /// `C = Y * (b * sigma / theta) * mu^theta`.
    pub fn abatement_cost(&self, t: usize, mu: f64) -> f64 {
        self.output_gross[t] * self.backstop[t] * self.emission_intensity[t] / self.theta
            * mu.powf(self.theta)
    }

    /// Marginal abatement cost, i.e. the carbon price a region optimally
    /// responding with control rate `mu` faces: `tau = b * mu^(theta-1)`.
    pub fn carbon_price(&self, t: usize, mu: f64) -> f64 {
        self.backstop[t] * mu.powf(self.theta - 1.0)
    }

    /// Control rate induced by a carbon price, the inverse of
    /// [`Self::carbon_price`] clamped into [0, 1].
    pub fn control_rate_at_price(&self, t: usize, tau: f64) -> f64 {
        if tau <= 0.0 {
            return 0.0;
        }
        (tau / self.backstop[t])
            .powf(1.0 / (self.theta - 1.0))
            .min(1.0)
    }

    /// Damage as a fraction of gross output at temperature `temp`.
    pub fn damage_fraction(&self, temp: f64) -> f64 {
        (self.damage_linear * temp + self.damage_quadratic * temp * temp).min(1.0)
    }
}

/// The N-region, T-period world.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IamScenario {
    pub periods: usize,
    /// Length of one period in years.
    pub step_years: f64,
    /// Calendar year of period 0, for reporting.
    pub start_year: f64,
    pub regions: Vec<RegionPath>,
    /// Temperature response per unit of cumulative emissions (degrees per
    /// emissions unit): a linear transient-response map standing in for a
    /// full carbon cycle.
    pub climate_slope: f64,
    /// Temperature in period 0 before any within-horizon emissions.
    pub t0: f64,
    /// Pure rate of time preference per year.
    pub rho: f64,
    pub utility: UtilityParams,
    /// Non-industrial emissions path (annual flow per period).
    pub exogenous_emissions: Vec<f64>,
}

impl IamScenario {
    pub fn validate(&self) -> Result<(), IamError> {
        if self.periods == 0 || !(self.step_years > 0.0) {
            return Err(IamError::Invalid(
                "scenario needs at least one period of positive length".into(),
            ));
        }
        if self.climate_slope < 0.0 {
            return Err(IamError::Invalid("climate slope must be >= 0".into()));
        }
        if self.exogenous_emissions.len() != self.periods {
            return Err(IamError::Invalid(format!(
                "exogenous emissions path has {} entries, expected {}",
                self.exogenous_emissions.len(),
                self.periods
            )));
        }
        if self.regions.is_empty() {
            return Err(IamError::Invalid(
                "scenario needs at least one region".into(),
            ));
        }
        for r in &self.regions {
            for (what, path) in [
                ("population", &r.population),
                ("output_gross", &r.output_gross),
                ("emission_intensity", &r.emission_intensity),
                ("backstop", &r.backstop),
            ] {
                if path.len() != self.periods {
                    return Err(IamError::Invalid(format!(
                        "region {}: {what} path has {} entries, expected {}",
                        r.name,
                        path.len(),
                        self.periods
                    )));
                }
                if path.iter().any(|v| !v.is_finite() || *v <= 0.0) {
                    return Err(IamError::Invalid(format!(
                        "region {}: {what} path must be positive and finite",
                        r.name
                    )));
                }
            }
            if !(r.theta > 1.0) {
                return Err(IamError::Invalid(format!(
                    "region {}: theta must exceed 1",
                    r.name
                )));
            }
            if r.damage_linear < 0.0 || r.damage_quadratic < 0.0 {
                return Err(IamError::Invalid(format!(
                    "region {}: damage coefficients must be >= 0",
                    r.name
                )));
            }
        }
        Ok(())
    }

    pub fn n_regions(&self) -> usize {
        self.regions.len()
    }

    pub fn year(&self, t: usize) -> f64 {
        self.start_year + t as f64 * self.step_years
    }

    pub fn region_index(&self, name: &str) -> Option<usize> {
        self.regions.iter().position(|r| r.name == name)
    }

    /// Utility discount factor for period `t`.
    pub fn discount_factor(&self, t: usize) -> f64 {
        (1.0 + self.rho).powf(-(t as f64) * self.step_years)
    }

    /// The largest backstop price across regions in period `t`: prices above
    /// it are pointless because every region already abates fully.
    pub fn max_backstop(&self, t: usize) -> f64 {
        self.regions
            .iter()
            .map(|r| r.backstop[t])
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolicyMode {
    /// One control rate per region per period.
    Differentiated,
    /// One normalized price per period, shared by all regions: each region
    /// inverts its marginal abatement cost curve at the common price, so
    /// MACs are equalized wherever nobody is clamped at full abatement.
    Uniform,
}

/// The decision variable of every optimization problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolicyPath {
    pub mode: PolicyMode,
    /// Differentiated: `n_regions` rows of `periods` control rates in
    /// [0, 1]. Uniform: a single row of normalized prices in [0, 1], scaled
    /// by the period's maximum backstop.
    pub rates: Vec<Vec<f64>>,
}

impl PolicyPath {
    pub fn zero(scenario: &IamScenario, mode: PolicyMode) -> Self {
        let rows = match mode {
            PolicyMode::Differentiated => scenario.n_regions(),
            PolicyMode::Uniform => 1,
        };
        Self {
            mode,
            rates: vec![vec![0.0; scenario.periods]; rows],
        }
    }

    pub fn check_dimensions(&self, scenario: &IamScenario) -> Result<(), IamError> {
        let expected_rows = match self.mode {
            PolicyMode::Differentiated => scenario.n_regions(),
            PolicyMode::Uniform => 1,
        };
        if self.rates.len() != expected_rows
            || self.rates.iter().any(|row| row.len() != scenario.periods)
        {
            return Err(IamError::DimensionMismatch {
                expected: (expected_rows, scenario.periods),
                got: (self.rates.len(), self.rates.first().map_or(0, |r| r.len())),
            });
        }
        if self
            .rates
            .iter()
            .any(|row| row.iter().any(|v| !(0.0..=1.0).contains(v)))
        {
            return Err(IamError::Invalid(
                "policy entries must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }

    /// The control rate of region `i` in period `t` implied by this policy.
    pub fn control_rate(&self, scenario: &IamScenario, region: usize, t: usize) -> f64 {
        match self.mode {
            PolicyMode::Differentiated => self.rates[region][t],
            PolicyMode::Uniform => {
                let tau = self.rates[0][t] * scenario.max_backstop(t);
                scenario.regions[region].control_rate_at_price(t, tau)
            }
        }
    }

    /// Flattens the decision variables row-major for the optimizer.
    pub fn to_vector(&self) -> Vec<f64> {
        self.rates.iter().flatten().copied().collect()
    }

    pub fn from_vector(scenario: &IamScenario, mode: PolicyMode, x: &[f64]) -> Self {
        let rows = match mode {
            PolicyMode::Differentiated => scenario.n_regions(),
            PolicyMode::Uniform => 1,
        };
        let rates = x
            .chunks(scenario.periods)
            .take(rows)
            .map(|c| c.to_vec())
            .collect();
        Self { mode, rates }
    }
}
