use super::*;
use crate::econ::{QuadraticCost, QuadraticDamage, RegionStatic, UtilityParams};
use crate::static_solver::{self, instance_seed, PropositionVerdict};

const TOL: f64 = 1e-10;

#[allow(clippy::too_many_arguments)]
fn region(
    name: &str,
    l1: f64,
    w1: f64,
    g_l: f64,
    g_w: f64,
    k: f64,
    delta: f64,
    e_bar: f64,
) -> RegionDynamic {
    RegionDynamic {
        name: name.to_owned(),
        population_1: l1,
        endowment_per_capita_1: w1,
        growth_population: g_l,
        growth_endowment: g_w,
        cost_1: QuadraticCost::new(k, 0.0, 0.0).unwrap(),
        damage_2: QuadraticDamage::new(0.0, 0.0, delta, e_bar).unwrap(),
    }
}

fn near_symmetric(eta: f64, rho: f64, g_l: f64, g_w: f64) -> EconomyDynamic {
    EconomyDynamic::new(
        region("north", 1.0, 10.0, g_l, g_w, 1.0, 0.5, 3.0),
        region("south", 1.0, 10.0 * (1.0 - 1e-12), g_l, g_w, 1.0, 0.5, 3.0),
        UtilityParams::new(eta).unwrap(),
        rho,
        50.0,
        0.5,
    )
    .unwrap()
}

/// The static counterpart sharing cost and damage functions.
fn static_twin(econ: &EconomyDynamic, damage_scale: f64) -> crate::econ::EconomyStatic {
    let mk = |r: &RegionDynamic| {
        let d = &r.damage_2;
        RegionStatic::new(
            r.name.clone(),
            r.population_1,
            r.endowment_per_capita_1,
            r.cost_1,
            QuadraticDamage::new(
                damage_scale * d.d0,
                damage_scale * d.d1,
                damage_scale * d.d2,
                d.e_bar,
            )
            .unwrap(),
        )
        .unwrap()
    };
    crate::econ::EconomyStatic::new(mk(&econ.north), mk(&econ.south), econ.utility).unwrap()
}

#[test]
fn discount_factor_is_one_without_growth_in_consumption() {
    let u = UtilityParams::new(1.5).unwrap();
    let v = negishi_discount_factor(&u, 2.0, 2.0, 0.7, 0.7, 0.3).unwrap();
    assert!((v - 1.0).abs() < 1e-15);
}

#[test]
fn discount_factor_degenerate_weight_uses_north_only() {
    let u = UtilityParams::new(2.0).unwrap();
    let expect = u.marginal_utility(3.0) / u.marginal_utility(1.5);
    // pi is restricted to (0,1) in the economy; the factor itself admits 1.
    let v = negishi_discount_factor(&u, 1.5, 3.0, 0.4, 0.9, 1.0).unwrap();
    assert!((v - expect).abs() < 1e-15 * expect);
}

#[test]
fn discount_factor_log_utility_halves_on_doubling() {
    let u = UtilityParams::log();
    let v = negishi_discount_factor(&u, 1.0, 2.0, 0.4, 0.8, 0.5).unwrap();
    assert!((v - 0.5).abs() < 1e-15);
}

#[test]
fn discount_factor_rejects_nonpositive_consumption() {
    let u = UtilityParams::log();
    assert!(negishi_discount_factor(&u, 1.0, -2.0, 0.4, 0.8, 0.5).is_err());
}

#[test]
fn pinned_v_and_unit_beta_reduce_to_static_negishi() {
    // With v pinned at 1 and beta = 1 the defining equation is the static
    // Samuelson condition on the same cost and damage functions.
    let econ = near_symmetric(1.5, 0.0, 1.3, 1.2);
    let dynamic = solve_dynamic_negishi_with_v(&econ, 1.0, TOL).unwrap();
    let tilde = static_solver::solve_negishi_static(&static_twin(&econ, 1.0), TOL).unwrap();
    assert!(
        (dynamic.tau - tilde.tau()).abs() < 1e-8 * tilde.tau(),
        "dynamic {} vs static {}",
        dynamic.tau,
        tilde.tau()
    );
}

#[test]
fn beta_scales_like_halved_damages() {
    // rho chosen so beta = 0.5 over the horizon; with v pinned at 1 this is
    // the static price of an economy whose damages are halved.
    let years = 50.0;
    let rho = 2f64.powf(1.0 / years) - 1.0;
    let mut econ = near_symmetric(1.0, rho, 1.0, 1.0);
    econ.rho = rho;
    assert!((econ.beta() - 0.5).abs() < 1e-12);
    let dynamic = solve_dynamic_negishi_with_v(&econ, 1.0, TOL).unwrap();
    let halved = static_solver::solve_negishi_static(&static_twin(&econ, 0.5), TOL).unwrap();
    assert!((dynamic.tau - halved.tau()).abs() < 1e-8 * halved.tau());
}

#[test]
fn linear_utility_collapses_dynamic_to_static() {
    // eta = 0 makes every marginal utility one, so v = 1 exactly and both
    // dynamic regimes equal the static Negishi price at beta = 1.
    let econ = EconomyDynamic::new(
        region("north", 1.2, 9.0, 1.5, 1.8, 0.8, 0.3, 2.5),
        region("south", 3.5, 2.0, 2.2, 2.5, 0.5, 0.6, 2.5),
        UtilityParams::new(0.0).unwrap(),
        0.0,
        50.0,
        0.4,
    )
    .unwrap();
    let tilde = solve_dynamic_negishi(&econ, TOL).unwrap();
    let check = solve_dynamic_utilitarian_uniform(&econ, TOL).unwrap();
    let twin = static_solver::solve_negishi_static(&static_twin(&econ, 1.0), TOL).unwrap();
    assert!((tilde.v - 1.0).abs() < 1e-12);
    assert!((tilde.tau - twin.tau()).abs() < 1e-8 * twin.tau());
    assert!((check.tau - twin.tau()).abs() < 1e-8 * twin.tau());
}

#[test]
fn heavy_discounting_kills_the_price() {
    let mut econ = near_symmetric(1.0, 0.5, 1.0, 1.0);
    econ.rho = 0.5; // beta = 1.5^-50 ~ 1e-9
    let sol = solve_dynamic_negishi(&econ, TOL).unwrap();
    assert!(sol.tau < 1e-6, "tau = {}", sol.tau);
}

#[test]
fn symmetric_regions_equalize_regimes_under_any_growth() {
    for (g_l, g_w) in [(1.0, 1.0), (1.8, 1.0), (1.0, 2.4), (1.6, 1.9)] {
        let econ = near_symmetric(1.5, 0.015, g_l, g_w);
        let tilde = solve_dynamic_negishi(&econ, TOL).unwrap();
        let check = solve_dynamic_utilitarian_uniform(&econ, TOL).unwrap();
        assert!(
            (tilde.tau - check.tau).abs() < 1e-8 * tilde.tau,
            "gL={g_l} gw={g_w}: {} vs {}",
            tilde.tau,
            check.tau
        );
    }
}

#[test]
fn v_monotonicity_raises_the_price() {
    let econ = near_symmetric(1.5, 0.015, 1.4, 1.6);
    let lo = solve_dynamic_negishi_with_v(&econ, 0.8, TOL).unwrap();
    let mid = solve_dynamic_negishi_with_v(&econ, 1.0, TOL).unwrap();
    let hi = solve_dynamic_negishi_with_v(&econ, 1.2, TOL).unwrap();
    assert!(lo.tau < mid.tau && mid.tau < hi.tau);
}

#[test]
fn faster_south_population_growth_pushes_utilitarian_above_negishi() {
    // Equal per-endowment damages; only the South's population grows.
    let years = 50.0;
    let g_l_s = 1.02f64.powf(years);
    let share = 0.05;
    let e_bar = 2.0;
    let mk = |name: &str, l1: f64, w1: f64, g_l: f64| {
        let w2 = l1 * g_l * w1;
        RegionDynamic {
            name: name.to_owned(),
            population_1: l1,
            endowment_per_capita_1: w1,
            growth_population: g_l,
            growth_endowment: 1.0,
            cost_1: QuadraticCost::new(3.0 / (2.0 * l1 * w1), 0.0, 0.0).unwrap(),
            damage_2: QuadraticDamage::new(0.0, 0.0, share * w2 / (e_bar * e_bar), e_bar).unwrap(),
        }
    };
    let north = mk("north", 1.0, 3.2, 1.0);
    let south = mk("south", 3.7, 1.0, g_l_s);
    let pi = EconomyDynamic::endowment_share_pi(&north, &south);
    let econ = EconomyDynamic::new(north, south, UtilityParams::log(), 0.015, years, pi).unwrap();
    let report = check_proposition4(&econ, TOL, 1e-6).unwrap();
    assert!(report.utilitarian.tau > report.negishi.tau);
    assert_eq!(report.verdict, PropositionVerdict::Pass);
    assert!(report.discriminant > 0.0);
}

#[test]
fn proposition4_passes_on_sampled_economies() {
    let cfg = DynamicSamplerConfig::default();
    for i in 0..30u64 {
        let econ = sample_dynamic_economy(instance_seed(777, i), &cfg, TOL);
        let report = check_proposition4(&econ, TOL, 1e-6).unwrap();
        assert_ne!(
            report.verdict,
            PropositionVerdict::Fail,
            "instance {i}: gap {} disc {}",
            report.price_gap,
            report.discriminant
        );
    }
}

#[test]
fn sampler_is_deterministic() {
    let cfg = DynamicSamplerConfig::default();
    assert_eq!(
        sample_dynamic_economy(5, &cfg, TOL),
        sample_dynamic_economy(5, &cfg, TOL)
    );
}

#[test]
fn ratio_approx_reproduces_published_dynamic_cells() {
    let w = 1.0 / 3.2;
    let cases = [
        // (d2 ratio, gLS, gLN, gwS, gwN, eta, expected)
        (1.0, 0.01, 0.0, 0.0, 0.0, 1.0, 1.12),
        (2.0, 0.02, 0.0, 0.04, 0.02, 1.5, 1.18),
        (2.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.16),
        (2.0, 0.02, 0.0, 0.03, 0.02, 1.0, 1.27),
    ];
    for (d, gls, gln, gws, gwn, eta, expect) in cases {
        let got = ratio_approx_dynamic(3.7, w, d, 1.0, gls, gln, gws, gwn, 50.0, eta);
        assert!(
            (got - expect).abs() < 0.005,
            "cell d={d} gLS={gls} gwS={gws} eta={eta}: {got} vs {expect}"
        );
    }
}

#[test]
fn zero_growth_ratio_collapses_to_static_formula() {
    for eta in [0.5, 1.0, 1.5, 2.0] {
        for d in [0.5, 1.0, 2.0] {
            for c in [0.5, 1.0, 2.0] {
                let dynamic =
                    ratio_approx_dynamic(3.7, 1.0 / 3.2, d, c, 0.0, 0.0, 0.0, 0.0, 50.0, eta);
                let fixed = static_solver::ratio_approx_static(3.7, 1.0 / 3.2, d, c, eta);
                assert!(
                    (dynamic - fixed).abs() < 1e-12,
                    "eta={eta} d={d} c={c}: {dynamic} vs {fixed}"
                );
            }
        }
    }
}

#[test]
fn validates_parameters() {
    let n = region("north", 1.0, 10.0, 1.0, 1.0, 1.0, 0.5, 3.0);
    let s = region("south", 1.0, 5.0, 1.0, 1.0, 1.0, 0.5, 3.0);
    let u = UtilityParams::log();
    assert!(EconomyDynamic::new(n.clone(), s.clone(), u, -0.1, 50.0, 0.5).is_err());
    assert!(EconomyDynamic::new(n.clone(), s.clone(), u, 0.01, 0.0, 0.5).is_err());
    assert!(EconomyDynamic::new(n.clone(), s.clone(), u, 0.01, 50.0, 0.0).is_err());
    assert!(EconomyDynamic::new(s.clone(), n.clone(), u, 0.01, 50.0, 0.5).is_err());
}

/// World state at a uniform period-1 price, for the oracle objectives.
fn dynamic_state(econ: &EconomyDynamic, tau: f64) -> Option<[f64; 6]> {
    let a_n = econ.north.cost_1.abatement_at_price(tau);
    let a_s = econ.south.cost_1.abatement_at_price(tau);
    let a = a_n + a_s;
    if a > econ.north.damage_2.e_bar.min(econ.south.damage_2.e_bar) {
        return None;
    }
    let x = |r: &RegionDynamic, own: f64| {
        let x1 = (r.endowment_1() - r.cost_1.cost(own)) / r.population_1;
        let x2 = (r.endowment_2() - r.damage_2.damage(a)) / r.population_2();
        (x1, x2)
    };
    let (xn1, xn2) = x(&econ.north, a_n);
    let (xs1, xs2) = x(&econ.south, a_s);
    if xn1 <= 0.0 || xn2 <= 0.0 || xs1 <= 0.0 || xs2 <= 0.0 {
        return None;
    }
    Some([a, xn1, xn2, xs1, xs2, tau])
}

fn grid_argmax(objective: impl Fn(f64) -> f64, hi: f64) -> f64 {
    let sweep = |lo: f64, hi: f64| -> f64 {
        let mut best = (lo, f64::NEG_INFINITY);
        for i in 0..=4000 {
            let tau = lo + (hi - lo) * i as f64 / 4000.0;
            let v = objective(tau);
            if v > best.1 {
                best = (tau, v);
            }
        }
        best.0
    };
    let coarse = sweep(0.0, hi);
    let h = hi / 4000.0 * 2.0;
    sweep((coarse - h).max(0.0), (coarse + h).min(hi))
}

/// The dynamic regimes maximize what their defining equations say they do:
/// with a pinned discount factor, the Negishi price maximizes total
/// consumption weighted v*beta across periods; the utilitarian uniform
/// price maximizes the discounted two-period utilitarian welfare sum.
#[test]
fn dynamic_prices_match_grid_oracles() {
    let cfg = DynamicSamplerConfig::default();
    for i in 0..25u64 {
        let econ = sample_dynamic_economy(instance_seed(0x0DCE, i), &cfg, TOL);
        let beta = econ.beta();
        let hi = econ
            .north
            .cost_1
            .mac(econ.north.damage_2.e_bar)
            .max(econ.south.cost_1.mac(econ.south.damage_2.e_bar));

        let negishi = solve_dynamic_negishi(&econ, TOL).unwrap();
        let v = negishi.v;
        let monetary = |tau: f64| -> f64 {
            match dynamic_state(&econ, tau) {
                Some([_, xn1, xn2, xs1, xs2, _]) => {
                    let l = [econ.north.population_1, econ.south.population_1];
                    let l2 = [econ.north.population_2(), econ.south.population_2()];
                    l[0] * xn1 + l[1] * xs1 + v * beta * (l2[0] * xn2 + l2[1] * xs2)
                }
                None => f64::NEG_INFINITY,
            }
        };
        let oracle = grid_argmax(monetary, hi);
        assert!(
            (negishi.tau - oracle).abs() <= 1e-3,
            "instance {i}: negishi {} vs oracle {oracle}",
            negishi.tau
        );

        let utilitarian = solve_dynamic_utilitarian_uniform(&econ, TOL).unwrap();
        let u = econ.utility;
        let welfare = |tau: f64| -> f64 {
            match dynamic_state(&econ, tau) {
                Some([_, xn1, xn2, xs1, xs2, _]) => {
                    econ.north.population_1 * u.utility(xn1)
                        + econ.south.population_1 * u.utility(xs1)
                        + beta
                            * (econ.north.population_2() * u.utility(xn2)
                                + econ.south.population_2() * u.utility(xs2))
                }
                None => f64::NEG_INFINITY,
            }
        };
        let oracle = grid_argmax(welfare, hi);
        assert!(
            (utilitarian.tau - oracle).abs() <= 1e-3,
            "instance {i}: utilitarian {} vs oracle {oracle}",
            utilitarian.tau
        );
    }
}
