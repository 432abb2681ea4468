//! Two-period carbon price solvers: abatement is paid in period 1, climate
//! damages arrive in period 2, and the two welfare-weighting conventions
//! disagree about how the future burden is discounted.
//!
//! Under Negishi weighting the price solves
//! `tau = -v * beta * sum_i D_i2'(A)`, where `beta` is the utility discount
//! factor over the horizon and `v` the wealth-based component of the social
//! discount factor: the pi-weighted average of the regional marginal utility
//! ratios between periods, evaluated at the solution itself. That makes the
//! problem a joint fixed point in `(tau, v)`; `v` varies slowly with `tau`,
//! so an outer damped loop on `v` around an inner root find in `tau`
//! converges quickly.
//!
//! The utilitarian uniform price replaces the common `v` with each region's
//! own marginal utility ratio and weights the cost side by period-1
//! marginal utilities, all functions of `tau` alone, so a single bracketed
//! root find suffices.

use serde::{Deserialize, Serialize};

use crate::econ::{EconError, QuadraticCost, QuadraticDamage, UtilityParams};
use crate::roots::{self, RootError};
use crate::static_solver::SolveError;

/// One region of the two-period world.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDynamic {
    pub name: String,
    /// Period-1 population, L1 > 0.
    pub population_1: f64,
    /// Period-1 endowment per capita, w1 > 0.
    pub endowment_per_capita_1: f64,
    /// Population growth factor over the horizon, gL > 0.
    pub growth_population: f64,
    /// Endowment-per-capita growth factor over the horizon, gw > 0.
    pub growth_endowment: f64,
    /// Abatement cost paid in period 1.
    pub cost_1: QuadraticCost,
    /// Climate damage suffered in period 2, a function of period-1 global
    /// abatement.
    pub damage_2: QuadraticDamage,
}

impl RegionDynamic {
    pub fn population_2(&self) -> f64 {
        self.population_1 * self.growth_population
    }

    pub fn endowment_per_capita_2(&self) -> f64 {
        self.endowment_per_capita_1 * self.growth_endowment
    }

    pub fn endowment_1(&self) -> f64 {
        self.population_1 * self.endowment_per_capita_1
    }

    pub fn endowment_2(&self) -> f64 {
        self.population_2() * self.endowment_per_capita_2()
    }
}

/// The two-period, two-region economy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EconomyDynamic {
    pub north: RegionDynamic,
    pub south: RegionDynamic,
    pub utility: UtilityParams,
    /// Pure rate of time preference per year, rho >= 0.
    pub rho: f64,
    /// Years between the two periods.
    pub years: f64,
    /// Discounting weight of the North in the wealth-based discount factor,
    /// pi in (0, 1).
    pub pi: f64,
}

impl EconomyDynamic {
    pub fn new(
        north: RegionDynamic,
        south: RegionDynamic,
        utility: UtilityParams,
        rho: f64,
        years: f64,
        pi: f64,
    ) -> Result<Self, EconError> {
        for (name, v) in [
            ("population_1", north.population_1.min(south.population_1)),
            (
                "endowment_per_capita_1",
                north
                    .endowment_per_capita_1
                    .min(south.endowment_per_capita_1),
            ),
            (
                "growth_population",
                north.growth_population.min(south.growth_population),
            ),
            (
                "growth_endowment",
                north.growth_endowment.min(south.growth_endowment),
            ),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(EconError::InvalidParameter {
                    name,
                    message: "must be finite and > 0",
                    value: v,
                });
            }
        }
        if !(rho >= 0.0) || !rho.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "rho",
                message: "must be finite and >= 0",
                value: rho,
            });
        }
        if !(years > 0.0) || !years.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "years",
                message: "must be finite and > 0",
                value: years,
            });
        }
        if !(pi > 0.0 && pi < 1.0) {
            return Err(EconError::InvalidParameter {
                name: "pi",
                message: "must lie in (0, 1)",
                value: pi,
            });
        }
        if north.endowment_per_capita_1 <= south.endowment_per_capita_1 {
            return Err(EconError::NorthNotRicher {
                north: north.endowment_per_capita_1,
                south: south.endowment_per_capita_1,
            });
        }
        Ok(Self {
            north,
            south,
            utility,
            rho,
            years,
            pi,
        })
    }

    /// Utility discount factor over the horizon, `beta = (1+rho)^(-years)`.
    pub fn beta(&self) -> f64 {
        (1.0 + self.rho).powf(-self.years)
    }

    /// The North's period-2 endowment share, the discounting-weight
    /// convention used for the published dynamic table.
    pub fn endowment_share_pi(north: &RegionDynamic, south: &RegionDynamic) -> f64 {
        let w_n2 = north.endowment_2();
        w_n2 / (w_n2 + south.endowment_2())
    }
}

/// Per capita consumptions of both regions in both periods at a uniform
/// period-1 price.
#[derive(Debug, Clone, Copy)]
struct DynamicPoint {
    a_north: f64,
    a_south: f64,
    a: f64,
    x_n1: f64,
    x_n2: f64,
    x_s1: f64,
    x_s2: f64,
}

fn eval_dynamic(econ: &EconomyDynamic, tau: f64) -> DynamicPoint {
    let a_north = econ.north.cost_1.abatement_at_price(tau);
    let a_south = econ.south.cost_1.abatement_at_price(tau);
    let a = a_north + a_south;
    let x = |r: &RegionDynamic, own: f64| {
        let x1 = (r.endowment_1() - r.cost_1.cost(own)) / r.population_1;
        let x2 = (r.endowment_2() - r.damage_2.damage(a)) / r.population_2();
        (x1, x2)
    };
    let (x_n1, x_n2) = x(&econ.north, a_north);
    let (x_s1, x_s2) = x(&econ.south, a_south);
    DynamicPoint {
        a_north,
        a_south,
        a,
        x_n1,
        x_n2,
        x_s1,
        x_s2,
    }
}

/// Wealth-based component of the social discount factor at a candidate
/// allocation: the pi-weighted average of the regional ratios of period-2
/// to period-1 marginal utility.
pub fn negishi_discount_factor(
    utility: &UtilityParams,
    x_n1: f64,
    x_n2: f64,
    x_s1: f64,
    x_s2: f64,
    pi: f64,
) -> Result<f64, EconError> {
    let mus = [
        utility.marginal_utility(x_n1),
        utility.marginal_utility(x_n2),
        utility.marginal_utility(x_s1),
        utility.marginal_utility(x_s2),
    ];
    for (x, mu) in [x_n1, x_n2, x_s1, x_s2].iter().zip(mus) {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(EconError::InvalidParameter {
                name: "marginal_utility",
                message: "marginal utility must be finite and positive",
                value: *x,
            });
        }
    }
    Ok(pi * mus[1] / mus[0] + (1.0 - pi) * mus[3] / mus[2])
}

fn discount_factor_at(econ: &EconomyDynamic, p: &DynamicPoint) -> Option<f64> {
    if p.x_n1 <= 0.0 || p.x_n2 <= 0.0 || p.x_s1 <= 0.0 || p.x_s2 <= 0.0 {
        return None;
    }
    negishi_discount_factor(&econ.utility, p.x_n1, p.x_n2, p.x_s1, p.x_s2, econ.pi).ok()
}

/// A solved dynamic regime.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicSolution {
    /// Uniform period-1 carbon price.
    pub tau: f64,
    pub abatement_north: f64,
    pub abatement_south: f64,
    /// Per capita consumption by region and period.
    pub x_north: [f64; 2],
    pub x_south: [f64; 2],
    /// Wealth-based discount factor at the solution (1 for regimes that do
    /// not use it).
    pub v: f64,
    pub beta: f64,
    pub iterations: usize,
    pub residual: f64,
    pub x_order_violated: bool,
}

fn price_bracket_max(econ: &EconomyDynamic) -> f64 {
    let m_n = econ.north.cost_1.mac(econ.north.damage_2.e_bar);
    let m_s = econ.south.cost_1.mac(econ.south.damage_2.e_bar);
    m_n.max(m_s)
}

fn finish(
    econ: &EconomyDynamic,
    tau: f64,
    v: f64,
    iterations: usize,
    residual: f64,
    tol: f64,
) -> Result<DynamicSolution, SolveError> {
    if residual > tol {
        return Err(SolveError::NonConvergence {
            iterations,
            residual,
            trace: vec![tau, residual],
        });
    }
    let p = eval_dynamic(econ, tau);
    for (region, own, x1, x2) in [
        (&econ.north, p.a_north, p.x_n1, p.x_n2),
        (&econ.south, p.a_south, p.x_s1, p.x_s2),
    ] {
        if p.a > region.damage_2.e_bar || own < 0.0 {
            return Err(SolveError::Infeasible(EconError::AbatementOutOfRange {
                region: region.name.clone(),
                own,
                global: p.a,
            }));
        }
        if x1 <= 0.0 || x2 <= 0.0 {
            return Err(SolveError::Infeasible(EconError::InfeasibleAllocation {
                region: region.name.clone(),
                consumption: x1.min(x2),
            }));
        }
    }
    Ok(DynamicSolution {
        tau,
        abatement_north: p.a_north,
        abatement_south: p.a_south,
        x_north: [p.x_n1, p.x_n2],
        x_south: [p.x_s1, p.x_s2],
        v,
        beta: econ.beta(),
        iterations,
        residual,
        x_order_violated: p.x_n1 <= p.x_s1 || p.x_n2 <= p.x_s2,
    })
}

const BRACKET_SCAN_POINTS: usize = 128;

fn solve_root(
    econ: &EconomyDynamic,
    f: impl FnMut(f64) -> f64,
    tol: f64,
    regime: &'static str,
) -> Result<(f64, f64, usize), SolveError> {
    let tau_max = price_bracket_max(econ);
    let xtol = (tol * 1e-3).max(4.0 * f64::EPSILON * tau_max.max(1.0));
    roots::solve_scalar(f, 0.0, tau_max, BRACKET_SCAN_POINTS, xtol).map_err(|e| match e {
        RootError::NoBracket => SolveError::NoInteriorOptimum { regime, tau_max },
        RootError::MaxIterations { best_x, residual } => SolveError::NonConvergence {
            iterations: 200,
            residual,
            trace: vec![best_x, residual],
        },
    })
}

/// Dynamic Negishi-weighted price with the wealth-based discount factor
/// pinned externally. The full solver iterates this; tests use it to scale
/// damages through `v` directly.
pub fn solve_dynamic_negishi_with_v(
    econ: &EconomyDynamic,
    v: f64,
    tol: f64,
) -> Result<DynamicSolution, SolveError> {
    let beta = econ.beta();
    let defect = |tau: f64| {
        let p = eval_dynamic(econ, tau);
        tau + v * beta * (econ.north.damage_2.slope(p.a) + econ.south.damage_2.slope(p.a))
    };
    let (tau, residual, iterations) = solve_root(econ, defect, tol, "dynamic-negishi")?;
    finish(econ, tau, v, iterations, residual, tol)
}

/// Dynamic Negishi-weighted carbon price: joint fixed point in the price
/// and the wealth-based discount factor evaluated at the solution.
pub fn solve_dynamic_negishi(
    econ: &EconomyDynamic,
    tol: f64,
) -> Result<DynamicSolution, SolveError> {
    let mut v = 1.0;
    let mut total_iterations = 0;
    let mut last = None;
    for outer in 0..200 {
        let sol = solve_dynamic_negishi_with_v(econ, v, tol)?;
        total_iterations += sol.iterations + 1;
        let p = eval_dynamic(econ, sol.tau);
        let v_new = discount_factor_at(econ, &p).ok_or(SolveError::Infeasible(
            EconError::InfeasibleAllocation {
                region: "north/south".into(),
                consumption: p.x_n1.min(p.x_n2).min(p.x_s1).min(p.x_s2),
            },
        ))?;
        let step = (v_new - v).abs();
        v = 0.5 * v + 0.5 * v_new;
        last = Some(sol);
        if step <= 1e-13 * v.max(1.0) && outer > 0 {
            break;
        }
    }
    let sol = last.expect("at least one outer iteration runs");
    // Report the self-consistent residual of the full defining equation.
    let p = eval_dynamic(econ, sol.tau);
    let v_final = discount_factor_at(econ, &p).unwrap_or(f64::NAN);
    let residual = (sol.tau
        + v_final
            * econ.beta()
            * (econ.north.damage_2.slope(p.a) + econ.south.damage_2.slope(p.a)))
    .abs();
    finish(econ, sol.tau, v_final, total_iterations, residual, tol)
}

/// Dynamic utilitarian uniform carbon price.
pub fn solve_dynamic_utilitarian_uniform(
    econ: &EconomyDynamic,
    tol: f64,
) -> Result<DynamicSolution, SolveError> {
    let beta = econ.beta();
    let u = &econ.utility;
    let cpp_n = econ.north.cost_1.curvature();
    let cpp_s = econ.south.cost_1.curvature();
    let defect = |tau: f64| {
        let p = eval_dynamic(econ, tau);
        if p.x_n1 <= 0.0 || p.x_n2 <= 0.0 || p.x_s1 <= 0.0 || p.x_s2 <= 0.0 {
            return f64::NAN;
        }
        let benefit = -(u.marginal_utility(p.x_n2) * econ.north.damage_2.slope(p.a)
            + u.marginal_utility(p.x_s2) * econ.south.damage_2.slope(p.a));
        let burden = u.marginal_utility(p.x_n1) * cpp_s + u.marginal_utility(p.x_s1) * cpp_n;
        tau - beta * benefit * (cpp_s + cpp_n) / burden
    };
    let (tau, residual, iterations) = solve_root(econ, defect, tol, "dynamic-utilitarian-uniform")?;
    finish(econ, tau, 1.0, iterations, residual, tol)
}

/// Three-factor approximation of the dynamic utilitarian-to-Negishi price
/// ratio. Ratios are South over North at period 1 (`c_ratio_ns1` is North
/// over South); `g*` are annual growth rates compounding over `years`.
#[allow(clippy::too_many_arguments)]
pub fn ratio_approx_dynamic(
    l_ratio_sn1: f64,
    w_ratio_sn1: f64,
    d_ratio_sn2: f64,
    c_ratio_ns1: f64,
    g_pop_south: f64,
    g_pop_north: f64,
    g_endow_south: f64,
    g_endow_north: f64,
    years: f64,
    eta: f64,
) -> f64 {
    let growth_l = ((1.0 + g_pop_south) / (1.0 + g_pop_north)).powf(years);
    let growth_w = ((1.0 + g_endow_south) / (1.0 + g_endow_north)).powf(years);
    let lg = l_ratio_sn1 * growth_l;
    let wg = w_ratio_sn1 * growth_w;

    let discounting = (lg * wg + 1.0) / (lg * w_ratio_sn1 * growth_w.powf(1.0 - eta) + 1.0);
    let benefit = (lg * wg.powf(1.0 - eta) * d_ratio_sn2 + 1.0) / (lg * wg * d_ratio_sn2 + 1.0);
    let burden = (c_ratio_ns1 * l_ratio_sn1 * w_ratio_sn1 + 1.0)
        / (w_ratio_sn1.powf(-eta) * c_ratio_ns1 * l_ratio_sn1 * w_ratio_sn1 + 1.0);
    discounting * benefit * burden
}

/// Verdict of the dynamic utilitarian-vs-Negishi comparison on one economy.
#[derive(Debug, Clone)]
pub struct DynamicPropositionReport {
    pub negishi: DynamicSolution,
    pub utilitarian: DynamicSolution,
    /// Relative price gap `(tau_check - tau_tilde)/scale`.
    pub price_gap: f64,
    /// Relative discriminant: welfare-weighted marginal damages against the
    /// discounted curvature-weighted period-1 marginal utilities.
    pub discriminant: f64,
    pub verdict: crate::static_solver::PropositionVerdict,
    pub prices_coincide: bool,
}

/// Evaluates both sides of the dynamic comparison and checks the
/// biconditional against the solved price ordering.
pub fn check_proposition4(
    econ: &EconomyDynamic,
    tol: f64,
    band: f64,
) -> Result<DynamicPropositionReport, SolveError> {
    use crate::static_solver::PropositionVerdict::*;

    let negishi = solve_dynamic_negishi(econ, tol)?;
    let utilitarian = solve_dynamic_utilitarian_uniform(econ, tol)?;
    let scale = negishi.tau.abs().max(utilitarian.tau.abs()).max(1e-300);
    let price_gap = (utilitarian.tau - negishi.tau) / scale;

    let u = &econ.utility;
    let p = eval_dynamic(econ, utilitarian.tau);
    let dd_n = econ.north.damage_2.slope(p.a);
    let dd_s = econ.south.damage_2.slope(p.a);
    let left =
        (u.marginal_utility(p.x_n2) * dd_n + u.marginal_utility(p.x_s2) * dd_s) / (dd_n + dd_s);
    let cpp_n = econ.north.cost_1.curvature();
    let cpp_s = econ.south.cost_1.curvature();
    let right = negishi.v
        * (u.marginal_utility(p.x_n1) * cpp_s + u.marginal_utility(p.x_s1) * cpp_n)
        / (cpp_s + cpp_n);
    let discriminant = left / right - 1.0;

    let verdict = if price_gap.abs() < band || discriminant.abs() < band {
        Indeterminate
    } else if price_gap.signum() == discriminant.signum() {
        Pass
    } else {
        Fail
    };
    let prices_coincide = (utilitarian.tau - negishi.tau).abs() <= 10.0 * tol * scale.max(1.0);
    Ok(DynamicPropositionReport {
        negishi,
        utilitarian,
        price_gap,
        discriminant,
        verdict,
        prices_coincide,
    })
}

/// Sampler for randomized dynamic economies, mirroring the static one with
/// growth rates and discounting parameters on top.
#[derive(Debug, Clone)]
pub struct DynamicSamplerConfig {
    pub population: (f64, f64),
    pub endowment_south: (f64, f64),
    pub endowment_ratio: (f64, f64),
    pub cost_curvature: (f64, f64),
    pub damage_share: (f64, f64),
    pub emission_intensity: (f64, f64),
    /// Annual population growth range.
    pub pop_growth: (f64, f64),
    /// Annual endowment growth range.
    pub endow_growth: (f64, f64),
    pub rho: (f64, f64),
    pub years: f64,
    pub eta: (f64, f64),
    pub max_attempts: usize,
}

impl Default for DynamicSamplerConfig {
    fn default() -> Self {
        Self {
            population: (1.0, 10.0),
            endowment_south: (1.0, 10.0),
            endowment_ratio: (1.1, 10.0),
            cost_curvature: (0.5, 8.0),
            damage_share: (0.02, 0.25),
            emission_intensity: (0.1, 0.5),
            pop_growth: (0.0, 0.03),
            endow_growth: (0.0, 0.04),
            rho: (0.001, 0.03),
            years: 50.0,
            eta: (0.5, 2.5),
            max_attempts: 10_000,
        }
    }
}

/// Draws one dynamic economy whose Negishi and utilitarian regimes both
/// have interior, feasible solutions with the consumption ordering intact
/// in both periods. Deterministic in `seed`.
pub fn sample_dynamic_economy(seed: u64, cfg: &DynamicSamplerConfig, tol: f64) -> EconomyDynamic {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let log_uniform = |rng: &mut rand_chacha::ChaCha8Rng, (a, b): (f64, f64)| -> f64 {
        rng.gen_range(a.ln()..=b.ln()).exp()
    };

    for _ in 0..cfg.max_attempts {
        let l_n1 = log_uniform(&mut rng, cfg.population);
        let l_s1 = log_uniform(&mut rng, cfg.population);
        let w_s1 = log_uniform(&mut rng, cfg.endowment_south);
        let w_n1 = w_s1 * log_uniform(&mut rng, cfg.endowment_ratio);
        let growth = |rng: &mut rand_chacha::ChaCha8Rng, range: (f64, f64)| -> f64 {
            (1.0 + rng.gen_range(range.0..=range.1)).powf(cfg.years)
        };
        let g_l_n = growth(&mut rng, cfg.pop_growth);
        let g_l_s = growth(&mut rng, cfg.pop_growth);
        let g_w_n = growth(&mut rng, cfg.endow_growth);
        let g_w_s = growth(&mut rng, cfg.endow_growth);
        if w_n1 * g_w_n <= 1.05 * w_s1 * g_w_s {
            continue;
        }
        let e_bar = log_uniform(&mut rng, cfg.emission_intensity) * (l_n1 * w_n1 + l_s1 * w_s1);

        let region = |rng: &mut rand_chacha::ChaCha8Rng,
                      name: &str,
                      l1: f64,
                      w1: f64,
                      g_l: f64,
                      g_w: f64|
         -> Option<RegionDynamic> {
            let cpp = log_uniform(rng, cfg.cost_curvature);
            let cost_1 = QuadraticCost::new(cpp / (2.0 * l1 * w1), 0.0, 0.0).ok()?;
            let share = log_uniform(rng, cfg.damage_share);
            let w2 = l1 * g_l * w1 * g_w;
            let damage_2 =
                QuadraticDamage::new(0.0, 0.0, share * w2 / (e_bar * e_bar), e_bar).ok()?;
            Some(RegionDynamic {
                name: name.to_owned(),
                population_1: l1,
                endowment_per_capita_1: w1,
                growth_population: g_l,
                growth_endowment: g_w,
                cost_1,
                damage_2,
            })
        };
        let Some(north) = region(&mut rng, "north", l_n1, w_n1, g_l_n, g_w_n) else {
            continue;
        };
        let Some(south) = region(&mut rng, "south", l_s1, w_s1, g_l_s, g_w_s) else {
            continue;
        };
        let eta = if rng.gen_bool(0.25) {
            1.0
        } else {
            rng.gen_range(cfg.eta.0..cfg.eta.1)
        };
        let rho = rng.gen_range(cfg.rho.0..=cfg.rho.1);
        let pi = if rng.gen_bool(0.5) {
            EconomyDynamic::endowment_share_pi(&north, &south)
        } else {
            rng.gen_range(0.1..0.9)
        };
        let Ok(econ) = EconomyDynamic::new(
            north,
            south,
            UtilityParams::new(eta).expect("eta sampled nonnegative"),
            rho,
            cfg.years,
            pi,
        ) else {
            continue;
        };

        let interior = |sol: &DynamicSolution| {
            sol.tau > 1e-6
                && sol.abatement_north + sol.abatement_south > 1e-6 * e_bar
                && sol.abatement_north + sol.abatement_south < (1.0 - 1e-6) * e_bar
                && !sol.x_order_violated
        };
        let Ok(negishi) = solve_dynamic_negishi(&econ, tol) else {
            continue;
        };
        let Ok(utilitarian) = solve_dynamic_utilitarian_uniform(&econ, tol) else {
            continue;
        };
        if interior(&negishi) && interior(&utilitarian) {
            return econ;
        }
    }
    panic!(
        "dynamic economy sampler exhausted {} attempts (seed {seed})",
        cfg.max_attempts
    );
}

/// A randomized dynamic sweep mirroring the static one.
#[derive(Debug, Clone)]
pub struct DynamicSweepOutcome {
    pub rows: Vec<(u64, Result<DynamicPropositionReport, SolveError>)>,
    pub verdicts: crate::static_solver::VerdictCounts,
    pub solver_failures: usize,
}

/// One diagnostics row per dynamic instance.
pub fn dynamic_diagnostics_csv_header() -> &'static str {
    "seed,tau_negishi,tau_util_uniform,v,beta,price_gap,discriminant,verdict,coincide"
}

impl DynamicPropositionReport {
    pub fn csv_row(&self, seed: u64) -> String {
        use crate::static_solver::PropositionVerdict::*;
        let verdict = match self.verdict {
            Pass => "pass",
            Fail => "fail",
            Indeterminate => "indeterminate",
        };
        format!(
            "{seed},{:.12e},{:.12e},{:.12e},{:.12e},{:.6e},{:.6e},{verdict},{}",
            self.negishi.tau,
            self.utilitarian.tau,
            self.negishi.v,
            self.negishi.beta,
            self.price_gap,
            self.discriminant,
            self.prices_coincide,
        )
    }
}

/// Samples `count` dynamic economies and checks the utilitarian-vs-Negishi
/// biconditional on each.
pub fn run_prop4_sweep(
    count: usize,
    base_seed: u64,
    tol: f64,
    band: f64,
    sampler: &DynamicSamplerConfig,
) -> DynamicSweepOutcome {
    use crate::static_solver::PropositionVerdict::*;
    let rows = crate::exec::map_indexed(count, |i| {
        let seed = crate::static_solver::instance_seed(base_seed ^ 0xD15C0, i as u64);
        let econ = sample_dynamic_economy(seed, sampler, tol);
        (seed, check_proposition4(&econ, tol, band))
    });
    let mut verdicts = crate::static_solver::VerdictCounts::default();
    let mut solver_failures = 0;
    for (_, row) in &rows {
        match row {
            Ok(report) => match report.verdict {
                Pass => verdicts.pass += 1,
                Fail => verdicts.fail += 1,
                Indeterminate => verdicts.indeterminate += 1,
            },
            Err(_) => solver_failures += 1,
        }
    }
    DynamicSweepOutcome {
        rows,
        verdicts,
        solver_failures,
    }
}

#[cfg(test)]
mod tests;
