//! Compact economy parameterizations for the solve commands, adjustable
//! through dotted-key --set overrides.
//!
//! Both builders use the endowment-scaling construction: per-endowment cost
//! curvature `cpp`, per-endowment no-policy damage share `damage_share`
//! (split into the quadratic term and an optional linear fraction), and a
//! world emission intensity that sets baseline emissions.

use carbonweights::dynamic_solver::{EconomyDynamic, RegionDynamic};
use carbonweights::econ::{
    simplified_rice_damage, EconomyStatic, QuadraticCost, QuadraticDamage, RegionStatic,
    UtilityParams,
};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct StaticEconomyParams {
    pub population: [f64; 2],
    pub endowment: [f64; 2],
    pub curvature: [f64; 2],
    pub damage_share: [f64; 2],
    pub damage_linear_frac: [f64; 2],
    pub intensity: f64,
    pub eta: f64,
}

impl Default for StaticEconomyParams {
    fn default() -> Self {
        // The published table's calibration ratios: L_S/L_N = 3.7,
        // w_N/w_S = 3.2, d'_S/d'_N = 2, equal curvatures.
        Self {
            population: [1.0, 3.7],
            endowment: [3.2, 1.0],
            curvature: [3.0, 3.0],
            damage_share: [0.02, 0.04],
            damage_linear_frac: [0.0, 0.0],
            intensity: 0.3,
            eta: 1.0,
        }
    }
}

fn region_index(name: &str) -> Result<usize, CliError> {
    match name {
        "north" => Ok(0),
        "south" => Ok(1),
        other => Err(CliError::Config(format!(
            "unknown region {other:?} (expected north or south)"
        ))),
    }
}

fn parse_value(key: &str, value: &str) -> Result<f64, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Config(format!("override {key}: bad number {value:?}")))
}

pub fn split_override(entry: &str) -> Result<(&str, &str), CliError> {
    entry
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("override {entry:?} is not KEY=VALUE")))
}

impl StaticEconomyParams {
    pub fn apply_override(&mut self, entry: &str) -> Result<(), CliError> {
        let (key, value) = split_override(entry)?;
        let v = parse_value(key, value)?;
        match key {
            "eta" => self.eta = v,
            "intensity" => self.intensity = v,
            _ => {
                let (region, field) = key
                    .split_once('.')
                    .ok_or_else(|| CliError::Config(format!("unknown override key {key:?}")))?;
                let i = region_index(region)?;
                match field {
                    "population" => self.population[i] = v,
                    "endowment" => self.endowment[i] = v,
                    "curvature" => self.curvature[i] = v,
                    "damage_share" => self.damage_share[i] = v,
                    "damage_linear_frac" => self.damage_linear_frac[i] = v,
                    _ => return Err(CliError::Config(format!("unknown override key {key:?}"))),
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<EconomyStatic, CliError> {
        let world_endowment: f64 =
            self.population[0] * self.endowment[0] + self.population[1] * self.endowment[1];
        let e_bar = self.intensity * world_endowment;
        let region = |i: usize, name: &str| -> Result<RegionStatic, CliError> {
            let w_total = self.population[i] * self.endowment[i];
            let cost = QuadraticCost::new(self.curvature[i] / (2.0 * w_total), 0.0, 0.0)
                .map_err(|e| CliError::Config(e.to_string()))?;
            let share = self.damage_share[i];
            let lin = self.damage_linear_frac[i].clamp(0.0, 1.0);
            let per_endowment = QuadraticDamage::new(
                0.0,
                share * lin / e_bar,
                share * (1.0 - lin) / (e_bar * e_bar),
                e_bar,
            )
            .map_err(|e| CliError::Config(e.to_string()))?;
            let damage =
                simplified_rice_damage(name, self.population[i], self.endowment[i], &per_endowment)
                    .map_err(|e| CliError::Config(e.to_string()))?;
            RegionStatic::new(name, self.population[i], self.endowment[i], cost, damage)
                .map_err(|e| CliError::Config(e.to_string()))
        };
        EconomyStatic::new(
            region(0, "north")?,
            region(1, "south")?,
            UtilityParams::new(self.eta).map_err(|e| CliError::Config(e.to_string()))?,
        )
        .map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct DynamicEconomyParams {
    pub population: [f64; 2],
    pub endowment: [f64; 2],
    /// Annual growth rates.
    pub pop_growth: [f64; 2],
    pub endow_growth: [f64; 2],
    pub curvature: [f64; 2],
    pub damage_share: [f64; 2],
    pub intensity: f64,
    pub eta: f64,
    pub rho: f64,
    pub years: f64,
    /// Negative means "use the North's period-2 endowment share".
    pub pi: f64,
}

impl Default for DynamicEconomyParams {
    fn default() -> Self {
        Self {
            population: [1.0, 3.7],
            endowment: [3.2, 1.0],
            pop_growth: [0.0, 0.01],
            endow_growth: [0.0, 0.0],
            curvature: [3.0, 3.0],
            damage_share: [0.02, 0.02],
            intensity: 0.3,
            eta: 1.0,
            rho: 0.015,
            years: 50.0,
            pi: -1.0,
        }
    }
}

impl DynamicEconomyParams {
    pub fn apply_override(&mut self, entry: &str) -> Result<(), CliError> {
        let (key, value) = split_override(entry)?;
        let v = parse_value(key, value)?;
        match key {
            "eta" => self.eta = v,
            "intensity" => self.intensity = v,
            "rho" => self.rho = v,
            "years" => self.years = v,
            "pi" => self.pi = v,
            _ => {
                let (region, field) = key
                    .split_once('.')
                    .ok_or_else(|| CliError::Config(format!("unknown override key {key:?}")))?;
                let i = region_index(region)?;
                match field {
                    "population" => self.population[i] = v,
                    "endowment" => self.endowment[i] = v,
                    "gL" => self.pop_growth[i] = v,
                    "gw" => self.endow_growth[i] = v,
                    "curvature" => self.curvature[i] = v,
                    "damage_share" => self.damage_share[i] = v,
                    _ => return Err(CliError::Config(format!("unknown override key {key:?}"))),
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<EconomyDynamic, CliError> {
        let world_endowment: f64 =
            self.population[0] * self.endowment[0] + self.population[1] * self.endowment[1];
        let e_bar = self.intensity * world_endowment;
        let region = |i: usize, name: &str| -> Result<RegionDynamic, CliError> {
            let w1 = self.population[i] * self.endowment[i];
            let g_l = (1.0 + self.pop_growth[i]).powf(self.years);
            let g_w = (1.0 + self.endow_growth[i]).powf(self.years);
            let w2 = w1 * g_l * g_w;
            Ok(RegionDynamic {
                name: name.to_owned(),
                population_1: self.population[i],
                endowment_per_capita_1: self.endowment[i],
                growth_population: g_l,
                growth_endowment: g_w,
                cost_1: QuadraticCost::new(self.curvature[i] / (2.0 * w1), 0.0, 0.0)
                    .map_err(|e| CliError::Config(e.to_string()))?,
                damage_2: QuadraticDamage::new(
                    0.0,
                    0.0,
                    self.damage_share[i] * w2 / (e_bar * e_bar),
                    e_bar,
                )
                .map_err(|e| CliError::Config(e.to_string()))?,
            })
        };
        let north = region(0, "north")?;
        let south = region(1, "south")?;
        let pi = if self.pi > 0.0 {
            self.pi
        } else {
            EconomyDynamic::endowment_share_pi(&north, &south)
        };
        EconomyDynamic::new(
            north,
            south,
            UtilityParams::new(self.eta).map_err(|e| CliError::Config(e.to_string()))?,
            self.rho,
            self.years,
            pi,
        )
        .map_err(|e| CliError::Config(e.to_string()))
    }
}
