//! The bundled four-region synthetic calibration.
//!
//! Regions are income tiers with World-Bank-style names. The construction
//! encodes the qualitative facts the regime comparisons rest on: the
//! poorest region has the largest damage coefficients, the fastest
//! population growth and the fastest per capita catch-up growth, while the
//! richest carries the largest output and the lowest emission intensity.
//!
//! Units: money in trillions of dollars, emissions in GtCO2, so one price
//! unit equals 1000 dollars per tonne. Ten ten-year periods starting 2025.

use super::file::{PathSpec, RegionSpec, ScenarioFile};
use super::scenario::IamScenario;

fn compact(value0: f64, growth: f64) -> PathSpec {
    PathSpec::Compact { value0, growth }
}

/// The bundled calibration in file form (compact growth specifications),
/// ready for serialization or dotted-key overrides.
pub fn bundled_scenario_file() -> ScenarioFile {
    let region = |name: &str,
                  l0: f64,
                  g_l: f64,
                  w0: f64,
                  g_w: f64,
                  sigma0: f64,
                  b0: f64,
                  a1: f64,
                  a2: f64| RegionSpec {
        name: name.to_owned(),
        population: compact(l0, g_l),
        w: compact(w0, g_w),
        sigma: compact(sigma0, -0.013),
        b: compact(b0, -0.008),
        theta: 2.8,
        a1,
        a2,
    };
    ScenarioFile {
        periods: 10,
        step_years: 10.0,
        start_year: 2025.0,
        t0: 1.2,
        climate_slope: 0.00045,
        rho: 0.015,
        eta: 1.5,
        exogenous_emissions: compact(4.0, -0.02),
        regions: vec![
            // name, L0 (bn), gL, w0 (k$ per capita), gw, sigma0 (Gt/T$), b0 (T$/Gt), a1, a2
            region(
                "high_income",
                1.10,
                0.001,
                55.0,
                0.014,
                0.15,
                0.55,
                0.0005,
                0.0014,
            ),
            region(
                "upper_middle",
                2.40,
                0.002,
                18.0,
                0.020,
                0.45,
                0.60,
                0.0010,
                0.0020,
            ),
            region(
                "lower_middle",
                2.80,
                0.008,
                7.0,
                0.025,
                0.40,
                0.65,
                0.0020,
                0.0030,
            ),
            region(
                "low_income",
                1.20,
                0.020,
                2.2,
                0.030,
                0.30,
                0.70,
                0.0040,
                0.0045,
            ),
        ],
    }
}

/// The bundled calibration expanded onto the period grid.
pub fn bundled_scenario() -> IamScenario {
    bundled_scenario_file()
        .expand()
        .expect("bundled calibration is valid")
}
