use serde::{Deserialize, Serialize};

use super::{EconError, QuadraticCost, QuadraticDamage, UtilityParams};

/// Aggregate and per capita consumption of one region at a given allocation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Consumption {
    pub aggregate: f64,
    pub per_capita: f64,
}

/// A region of the static one-period world: population, per capita
/// endowment, its abatement cost function (of its own abatement) and its
/// damage function (of global abatement).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionStatic {
    pub name: String,
    /// Population (persons), L > 0.
    pub population: f64,
    /// Endowment per capita (money per person), w > 0.
    pub endowment_per_capita: f64,
    pub cost: QuadraticCost,
    pub damage: QuadraticDamage,
}

impl RegionStatic {
    pub fn new(
        name: impl Into<String>,
        population: f64,
        endowment_per_capita: f64,
        cost: QuadraticCost,
        damage: QuadraticDamage,
    ) -> Result<Self, EconError> {
        if !(population > 0.0) || !population.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "population",
                message: "must be finite and > 0",
                value: population,
            });
        }
        if !(endowment_per_capita > 0.0) || !endowment_per_capita.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "endowment_per_capita",
                message: "must be finite and > 0",
                value: endowment_per_capita,
            });
        }
        Ok(Self {
            name: name.into(),
            population,
            endowment_per_capita,
            cost,
            damage,
        })
    }

    /// Aggregate endowment `W = L * w`.
    pub fn endowment(&self) -> f64 {
        self.population * self.endowment_per_capita
    }

    /// Aggregate consumption `X = W - C(A_i) - D(A)` without any domain
    /// checks. Solvers use this on trial points and validate afterwards.
    pub fn consumption_unchecked(&self, own_abatement: f64, global_abatement: f64) -> f64 {
        self.endowment() - self.cost.cost(own_abatement) - self.damage.damage(global_abatement)
    }

    /// Aggregate and per capita consumption at the given allocation.
    ///
    /// Enforces `0 <= own <= global <= Ebar` and strictly positive
    /// consumption; an infeasible allocation surfaces as an error carrying
    /// the region name so optimizers can penalize it.
    pub fn consumption(
        &self,
        own_abatement: f64,
        global_abatement: f64,
    ) -> Result<Consumption, EconError> {
        if !(0.0 <= own_abatement
            && own_abatement <= global_abatement
            && global_abatement <= self.damage.e_bar)
        {
            return Err(EconError::AbatementOutOfRange {
                region: self.name.clone(),
                own: own_abatement,
                global: global_abatement,
            });
        }
        let aggregate = self.consumption_unchecked(own_abatement, global_abatement);
        if !(aggregate > 0.0) {
            return Err(EconError::InfeasibleAllocation {
                region: self.name.clone(),
                consumption: aggregate,
            });
        }
        Ok(Consumption {
            aggregate,
            per_capita: aggregate / self.population,
        })
    }
}

/// The two-region single-period world: a Global North that is richer per
/// capita than the Global South, and a common utility function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EconomyStatic {
    pub north: RegionStatic,
    pub south: RegionStatic,
    pub utility: UtilityParams,
}

impl EconomyStatic {
    pub fn new(
        north: RegionStatic,
        south: RegionStatic,
        utility: UtilityParams,
    ) -> Result<Self, EconError> {
        if north.endowment_per_capita <= south.endowment_per_capita {
            return Err(EconError::NorthNotRicher {
                north: north.endowment_per_capita,
                south: south.endowment_per_capita,
            });
        }
        Ok(Self {
            north,
            south,
            utility,
        })
    }

    /// A fully symmetric economy for degenerate-case tests: identical
    /// regions except for an infinitesimally richer North to satisfy the
    /// ordering requirement. Prefer `new` everywhere else.
    pub fn regions(&self) -> [&RegionStatic; 2] {
        [&self.north, &self.south]
    }
}
