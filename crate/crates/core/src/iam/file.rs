//! Scenario files and trajectory export.
//!
//! A scenario file is TOML: global scalars plus one `[[region]]` table per
//! region. Every path-valued field accepts either a compact
//! `{ value0, growth }` pair (annual growth rate, expanded over the period
//! grid) or an explicit per-period array. Dotted-key overrides of the form
//! `region.<name>.gL=0.02` tweak compact fields without editing files.

use serde::{Deserialize, Serialize};

use super::scenario::{IamScenario, RegionPath};
use super::simulate::Trajectory;
use super::IamError;
use crate::econ::UtilityParams;

/// A per-period path given either by an initial value and annual growth
/// rate, or explicitly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathSpec {
    Compact { value0: f64, growth: f64 },
    Explicit(Vec<f64>),
}

impl PathSpec {
    fn expand(&self, periods: usize, step_years: f64, what: &str) -> Result<Vec<f64>, IamError> {
        match self {
            PathSpec::Compact { value0, growth } => Ok((0..periods)
                .map(|t| value0 * (1.0 + growth).powf(t as f64 * step_years))
                .collect()),
            PathSpec::Explicit(values) => {
                if values.len() != periods {
                    return Err(IamError::Invalid(format!(
                        "{what}: explicit path has {} entries, expected {periods}",
                        values.len()
                    )));
                }
                Ok(values.clone())
            }
        }
    }

    fn set_value0(&mut self, v: f64, key: &str) -> Result<(), IamError> {
        match self {
            PathSpec::Compact { value0, .. } => {
                *value0 = v;
                Ok(())
            }
            PathSpec::Explicit(_) => Err(IamError::Invalid(format!(
                "{key}: cannot override a path given as an explicit array"
            ))),
        }
    }

    fn set_growth(&mut self, v: f64, key: &str) -> Result<(), IamError> {
        match self {
            PathSpec::Compact { growth, .. } => {
                *growth = v;
                Ok(())
            }
            PathSpec::Explicit(_) => Err(IamError::Invalid(format!(
                "{key}: cannot override a path given as an explicit array"
            ))),
        }
    }
}

/// One region as written in a scenario file. `L` is population, `w` output
/// per capita, `sigma` baseline emission intensity, `b` the backstop price;
/// `a1`/`a2` are the damage fraction coefficients and `theta` the abatement
/// cost exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub name: String,
    #[serde(rename = "L")]
    pub population: PathSpec,
    pub w: PathSpec,
    pub sigma: PathSpec,
    pub b: PathSpec,
    pub theta: f64,
    pub a1: f64,
    pub a2: f64,
}

/// A full scenario as written on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub periods: usize,
    pub step_years: f64,
    pub start_year: f64,
    pub t0: f64,
    pub climate_slope: f64,
    pub rho: f64,
    pub eta: f64,
    pub exogenous_emissions: PathSpec,
    #[serde(rename = "region")]
    pub regions: Vec<RegionSpec>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, IamError> {
        toml::from_str(text).map_err(|e| IamError::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("scenario serializes")
    }

    /// Expands growth specifications over the period grid and validates the
    /// result.
    pub fn expand(&self) -> Result<IamScenario, IamError> {
        let regions = self
            .regions
            .iter()
            .map(|r| {
                let name = &r.name;
                let population =
                    r.population
                        .expand(self.periods, self.step_years, &format!("{name}.L"))?;
                let per_capita =
                    r.w.expand(self.periods, self.step_years, &format!("{name}.w"))?;
                let output_gross = population
                    .iter()
                    .zip(&per_capita)
                    .map(|(l, w)| l * w)
                    .collect();
                Ok(RegionPath {
                    name: r.name.clone(),
                    population,
                    output_gross,
                    emission_intensity: r.sigma.expand(
                        self.periods,
                        self.step_years,
                        &format!("{name}.sigma"),
                    )?,
                    backstop: r
                        .b
                        .expand(self.periods, self.step_years, &format!("{name}.b"))?,
                    theta: r.theta,
                    damage_linear: r.a1,
                    damage_quadratic: r.a2,
                })
            })
            .collect::<Result<Vec<_>, IamError>>()?;
        let scenario = IamScenario {
            periods: self.periods,
            step_years: self.step_years,
            start_year: self.start_year,
            regions,
            climate_slope: self.climate_slope,
            t0: self.t0,
            rho: self.rho,
            utility: UtilityParams::new(self.eta).map_err(|e| IamError::Invalid(e.to_string()))?,
            exogenous_emissions: self.exogenous_emissions.expand(
                self.periods,
                self.step_years,
                "exogenous_emissions",
            )?,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Applies one `key=value` override with dotted keys. Global keys:
    /// `periods`, `step_years`, `start_year`, `t0`, `climate_slope`, `rho`,
    /// `eta`, `exogenous_emissions.value0`, `exogenous_emissions.growth`.
    /// Region keys (`region.<name>.<field>`): `L0`, `gL`, `w0`, `gw`,
    /// `sigma0`, `gSigma`, `b0`, `gB`, `theta`, `a1`, `a2`.
    pub fn apply_override(&mut self, key: &str, value: &str) -> Result<(), IamError> {
        let parse = |value: &str| -> Result<f64, IamError> {
            value
                .parse::<f64>()
                .map_err(|_| IamError::Invalid(format!("override {key}: bad number {value:?}")))
        };
        match key {
            "periods" => {
                self.periods = value
                    .parse::<usize>()
                    .map_err(|_| IamError::Invalid(format!("override {key}: bad count")))?;
                return Ok(());
            }
            "step_years" => self.step_years = parse(value)?,
            "start_year" => self.start_year = parse(value)?,
            "t0" => self.t0 = parse(value)?,
            "climate_slope" => self.climate_slope = parse(value)?,
            "rho" => self.rho = parse(value)?,
            "eta" => self.eta = parse(value)?,
            "exogenous_emissions.value0" => {
                self.exogenous_emissions.set_value0(parse(value)?, key)?
            }
            "exogenous_emissions.growth" => {
                self.exogenous_emissions.set_growth(parse(value)?, key)?
            }
            _ => {
                let mut parts = key.splitn(3, '.');
                let (Some("region"), Some(region_name), Some(field)) =
                    (parts.next(), parts.next(), parts.next())
                else {
                    return Err(IamError::UnknownKey(key.to_owned()));
                };
                let region = self
                    .regions
                    .iter_mut()
                    .find(|r| r.name == region_name)
                    .ok_or_else(|| {
                        IamError::Invalid(format!("override {key}: no region {region_name:?}"))
                    })?;
                let v = parse(value)?;
                match field {
                    "L0" => region.population.set_value0(v, key)?,
                    "gL" => region.population.set_growth(v, key)?,
                    "w0" => region.w.set_value0(v, key)?,
                    "gw" => region.w.set_growth(v, key)?,
                    "sigma0" => region.sigma.set_value0(v, key)?,
                    "gSigma" => region.sigma.set_growth(v, key)?,
                    "b0" => region.b.set_value0(v, key)?,
                    "gB" => region.b.set_growth(v, key)?,
                    "theta" => region.theta = v,
                    "a1" => region.a1 = v,
                    "a2" => region.a2 = v,
                    _ => return Err(IamError::UnknownKey(key.to_owned())),
                }
            }
        }
        Ok(())
    }
}

/// Fixed trajectory export schema, one row per region-period. Values are in
/// model units; the header tags each column with its unit kind.
pub const TRAJECTORY_CSV_HEADER: &str = "region,period,year,population,output_gross_money,\
    control_rate,emissions_mass_per_year,abatement_cost_money,damage_money,consumption_money,\
    consumption_per_capita,carbon_price_money_per_mass,temperature_deg_c,cumulative_emissions_mass";

pub fn trajectory_csv(scenario: &IamScenario, trajectory: &Trajectory) -> String {
    let mut out = String::from(TRAJECTORY_CSV_HEADER);
    out.push('\n');
    for (i, region) in scenario.regions.iter().enumerate() {
        for t in 0..scenario.periods {
            out.push_str(&format!(
                "{},{},{},{:.6e},{:.6e},{:.6},{:.6e},{:.6e},{:.6e},{:.6e},{:.6e},{:.6e},{:.4},{:.4}\n",
                region.name,
                t,
                scenario.year(t),
                region.population[t],
                region.output_gross[t],
                trajectory.control_rate[i][t],
                trajectory.emissions[i][t],
                trajectory.abatement_cost[i][t],
                trajectory.damage[i][t],
                trajectory.consumption[i][t],
                trajectory.per_capita[i][t],
                trajectory.carbon_price[i][t],
                trajectory.temperature[t],
                trajectory.cumulative_emissions[t],
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iam::calibration::{bundled_scenario, bundled_scenario_file};

    #[test]
    fn bundled_file_round_trips_through_toml() {
        let file = bundled_scenario_file();
        let text = file.to_toml();
        let parsed = ScenarioFile::parse(&text).unwrap();
        assert_eq!(file, parsed);
        assert_eq!(file.expand().unwrap(), bundled_scenario());
    }

    #[test]
    fn explicit_arrays_are_accepted_and_length_checked() {
        let mut file = bundled_scenario_file();
        file.regions[0].population = PathSpec::Explicit(vec![1.0; file.periods]);
        assert!(file.expand().is_ok());
        file.regions[0].population = PathSpec::Explicit(vec![1.0; 3]);
        assert!(matches!(file.expand(), Err(IamError::Invalid(_))));
    }

    #[test]
    fn overrides_hit_compact_fields() {
        let mut file = bundled_scenario_file();
        file.apply_override("region.low_income.gL", "0.025")
            .unwrap();
        file.apply_override("rho", "0.001").unwrap();
        file.apply_override("exogenous_emissions.value0", "2.0")
            .unwrap();
        let scenario = file.expand().unwrap();
        assert_eq!(scenario.rho, 0.001);
        assert_eq!(scenario.exogenous_emissions[0], 2.0);
        let low = scenario.region_index("low_income").unwrap();
        let l = &scenario.regions[low].population;
        let implied = (l[1] / l[0]).powf(1.0 / scenario.step_years) - 1.0;
        assert!((implied - 0.025).abs() < 1e-12);
    }

    #[test]
    fn unknown_keys_and_explicit_paths_are_rejected() {
        let mut file = bundled_scenario_file();
        assert!(matches!(
            file.apply_override("region.low_income.nope", "1"),
            Err(IamError::UnknownKey(_))
        ));
        assert!(matches!(
            file.apply_override("turbo", "1"),
            Err(IamError::UnknownKey(_))
        ));
        file.regions[0].population = PathSpec::Explicit(vec![1.0; file.periods]);
        let name = file.regions[0].name.clone();
        assert!(file
            .apply_override(&format!("region.{name}.gL"), "0.01")
            .is_err());
    }

    #[test]
    fn csv_has_documented_schema() {
        let scenario = bundled_scenario();
        let policy = crate::iam::PolicyPath::zero(&scenario, crate::iam::PolicyMode::Uniform);
        let traj = crate::iam::simulate(&scenario, &policy).unwrap();
        let csv = trajectory_csv(&scenario, &traj);
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        let columns = header.split(',').count();
        assert_eq!(header, TRAJECTORY_CSV_HEADER);
        assert_eq!(
            lines.clone().count(),
            scenario.n_regions() * scenario.periods
        );
        for line in lines {
            assert_eq!(line.split(',').count(), columns);
        }
    }
}
