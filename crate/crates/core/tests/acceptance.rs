//! Acceptance gate: every criterion runs at its stated tolerance and prints
//! one line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines; any failure fails the build.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use carbonweights::dynamic_solver::{ratio_approx_dynamic, run_prop4_sweep, DynamicSamplerConfig};
use carbonweights::econ::EconomyStatic;
use carbonweights::iam::{
    self, calibration::bundled_scenario, compare_regimes, evaluate_swf, mean_price_path,
    preferred_uniform_prices, simulate, welfare_equivalent_consumption_change, PolicyMode,
    PolicyPath, RegimeKind, Swf, WeccScope,
};
use carbonweights::optimizer::{
    grid_oracle, maximize_bounded, maximize_eq_constrained, OptimizerConfig,
};
use carbonweights::static_solver::{
    instance_seed, ratio_approx_static, run_static_props_sweep, sample_static_economy,
    solve_arbitrary_weights_static, solve_negishi_static, solve_preferred_static,
    solve_utilitarian_differentiated_static, solve_utilitarian_uniform_static, RegionId,
    SamplerConfig,
};

const TOL: f64 = 1e-10;

fn pass(name: &str, started: Instant, detail: &str) {
    println!(
        "ACCEPTANCE {name}: PASS ({:.2}s) {detail}",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn table1_reproduction() {
    let started = Instant::now();
    // Printed cells: rows are c''_N/c''_S in panel A and w_N/w_S in panel
    // B; column groups eta = 1 then eta = 1.5, each over d'_S/d'_N in
    // {0.5, 1, 2}. L_S/L_N = 3.7 throughout, w_N/w_S = 3.2 in panel A,
    // c''_N/c''_S = 1 in panel B.
    let panel_a: [(f64, [f64; 6]); 3] = [
        (0.5, [1.00, 1.21, 1.40, 1.00, 1.29, 1.57]),
        (1.0, [0.83, 1.00, 1.16, 0.77, 1.00, 1.22]),
        (2.0, [0.71, 0.86, 1.00, 0.64, 0.82, 1.00]),
    ];
    let panel_b: [(f64, [f64; 6]); 3] = [
        (1.0, [1.00, 1.00, 1.00, 1.00, 1.00, 1.00]),
        (3.2, [0.83, 1.00, 1.16, 0.77, 1.00, 1.22]),
        (6.4, [0.74, 1.00, 1.31, 0.67, 1.00, 1.39]),
    ];
    let mut checked = 0;
    for (c_ratio, cells) in panel_a {
        for (k, (eta, d_ratio)) in column_grid().into_iter().enumerate() {
            let got = ratio_approx_static(3.7, 1.0 / 3.2, d_ratio, c_ratio, eta);
            assert!(
                (got - cells[k]).abs() <= 0.01,
                "panel A row {c_ratio} eta {eta} d {d_ratio}: {got} vs {}",
                cells[k]
            );
            checked += 1;
        }
    }
    for (w_ratio, cells) in panel_b {
        for (k, (eta, d_ratio)) in column_grid().into_iter().enumerate() {
            let got = ratio_approx_static(3.7, 1.0 / w_ratio, d_ratio, 1.0, eta);
            assert!(
                (got - cells[k]).abs() <= 0.01,
                "panel B row {w_ratio} eta {eta} d {d_ratio}: {got} vs {}",
                cells[k]
            );
            checked += 1;
        }
    }
    assert!(checked >= 18);
    assert!(
        started.elapsed().as_secs_f64() < 1.0,
        "must finish within 1s"
    );
    pass(
        "table1-reproduction",
        started,
        &format!("{checked} cells within 0.01"),
    );
}

fn column_grid() -> Vec<(f64, f64)> {
    let mut cols = Vec::new();
    for eta in [1.0, 1.5] {
        for d in [0.5, 1.0, 2.0] {
            cols.push((eta, d));
        }
    }
    cols
}

#[test]
fn table2_reproduction() {
    let started = Instant::now();
    // Rows: panel A varies the South's annual population growth (equal
    // endowment growth); panel B varies the South's endowment growth with
    // population growth fixed at 2%/0%. Columns: eta in {1, 1.5} x
    // d'_S2/d'_N2 in {1, 2}. 50 years, w_N1/w_S1 = 3.2, L_S1/L_N1 = 3.7.
    let panel_a: [(f64, [f64; 4]); 3] = [
        (0.00, [1.00, 1.16, 1.00, 1.22]),
        (0.01, [1.12, 1.26, 1.16, 1.34]),
        (0.02, [1.22, 1.33, 1.29, 1.44]),
    ];
    let panel_b: [(f64, [f64; 4]); 3] = [
        (0.02, [1.22, 1.33, 1.29, 1.44]),
        (0.03, [1.22, 1.27, 1.23, 1.30]),
        (0.04, [1.22, 1.23, 1.16, 1.18]),
    ];
    let columns = [(1.0, 1.0), (1.0, 2.0), (1.5, 1.0), (1.5, 2.0)];
    let mut checked = 0;
    for (g_l_s, cells) in panel_a {
        for (k, (eta, d)) in columns.into_iter().enumerate() {
            let got = ratio_approx_dynamic(3.7, 1.0 / 3.2, d, 1.0, g_l_s, 0.0, 0.0, 0.0, 50.0, eta);
            assert!(
                (got - cells[k]).abs() <= 0.01,
                "panel A row {g_l_s} eta {eta} d {d}: {got} vs {}",
                cells[k]
            );
            checked += 1;
        }
    }
    for (g_w_s, cells) in panel_b {
        for (k, (eta, d)) in columns.into_iter().enumerate() {
            let got =
                ratio_approx_dynamic(3.7, 1.0 / 3.2, d, 1.0, 0.02, 0.0, g_w_s, 0.02, 50.0, eta);
            assert!(
                (got - cells[k]).abs() <= 0.01,
                "panel B row {g_w_s} eta {eta} d {d}: {got} vs {}",
                cells[k]
            );
            checked += 1;
        }
    }
    assert!(checked >= 12);
    assert!(
        started.elapsed().as_secs_f64() < 1.0,
        "must finish within 1s"
    );
    pass(
        "table2-reproduction",
        started,
        &format!("{checked} cells within 0.01"),
    );
}

#[test]
fn proposition_suite() {
    let started = Instant::now();
    let band = 1e-6;
    let static_out = run_static_props_sweep(1000, 20250810, TOL, band, &SamplerConfig::default());
    assert_eq!(
        static_out.summary.solver_failures, 0,
        "static solver failures"
    );
    assert_eq!(
        static_out.summary.total_failures(),
        0,
        "static proposition failures: {:?}",
        static_out.summary
    );
    let dynamic_out = run_prop4_sweep(1000, 20250810, TOL, band, &DynamicSamplerConfig::default());
    assert_eq!(dynamic_out.solver_failures, 0, "dynamic solver failures");
    assert_eq!(dynamic_out.verdicts.fail, 0, "dynamic proposition failures");

    let total_checks = static_out.summary.total_checks()
        + dynamic_out.verdicts.pass
        + dynamic_out.verdicts.fail
        + dynamic_out.verdicts.indeterminate;
    let indeterminate =
        static_out.summary.total_indeterminate() + dynamic_out.verdicts.indeterminate;
    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < 120.0,
        "proposition suite took {elapsed:.1}s (limit 120s)"
    );
    pass(
        "proposition-suite",
        started,
        &format!(
            "1000 static + 1000 dynamic instances, 0 failures, indeterminate fraction {:.5}",
            indeterminate as f64 / total_checks as f64
        ),
    );
}

/// Uniform-price world state helpers for the oracle objectives.
fn uniform_consumptions(econ: &EconomyStatic, tau: f64) -> Option<(f64, f64)> {
    let a_n = econ.north.cost.abatement_at_price(tau);
    let a_s = econ.south.cost.abatement_at_price(tau);
    let a = a_n + a_s;
    let x_n = econ.north.consumption_unchecked(a_n, a);
    let x_s = econ.south.consumption_unchecked(a_s, a);
    (x_n > 0.0 && x_s > 0.0).then_some((x_n, x_s))
}

/// Price at which global abatement exhausts baseline emissions; uniform
/// regimes are interior to [0, tau_star].
fn tau_star(econ: &EconomyStatic) -> f64 {
    let e_bar = econ.north.damage.e_bar.min(econ.south.damage.e_bar);
    let cap = carbonweights::static_solver::price_bracket_max(econ) + 1.0;
    let mut lo = 0.0;
    let mut hi = cap;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let a = econ.north.cost.abatement_at_price(mid) + econ.south.cost.abatement_at_price(mid);
        if a < e_bar {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn oracle_equivalence() {
    let started = Instant::now();
    let sampler = SamplerConfig::default();
    let price_tol = 1e-3;
    let welfare_rel = 1e-4;
    for i in 0..100u64 {
        let econ = sample_static_economy(instance_seed(424242, i), &sampler, TOL);
        let top = tau_star(&econ);
        let u = econ.utility;
        let (l_n, l_s) = (econ.north.population, econ.south.population);

        // Negishi: total consumption in monetary terms.
        let total = |tau: &[f64]| -> f64 {
            match uniform_consumptions(&econ, tau[0]) {
                Some((x_n, x_s)) => x_n + x_s,
                None => f64::NEG_INFINITY,
            }
        };
        let negishi = solve_negishi_static(&econ, TOL).unwrap();
        let oracle = grid_oracle(&total, &[0.0], &[top], 2000).unwrap();
        assert!(
            (negishi.tau() - oracle.x[0]).abs() <= price_tol,
            "instance {i}: negishi {} vs oracle {}",
            negishi.tau(),
            oracle.x[0]
        );
        let f_solver = total(&[negishi.tau()]);
        assert!(
            (f_solver - oracle.f).abs() <= welfare_rel * oracle.f.abs(),
            "instance {i}: negishi welfare {f_solver} vs oracle {}",
            oracle.f
        );

        // Utilitarian uniform: population-weighted utility.
        let util = |tau: &[f64]| -> f64 {
            match uniform_consumptions(&econ, tau[0]) {
                Some((x_n, x_s)) => l_n * u.utility(x_n / l_n) + l_s * u.utility(x_s / l_s),
                None => f64::NEG_INFINITY,
            }
        };
        let uniform = solve_utilitarian_uniform_static(&econ, TOL).unwrap();
        let oracle = grid_oracle(&util, &[0.0], &[top], 2000).unwrap();
        assert!(
            (uniform.tau() - oracle.x[0]).abs() <= price_tol,
            "instance {i}: utilitarian uniform {} vs oracle {}",
            uniform.tau(),
            oracle.x[0]
        );
        let f_solver = util(&[uniform.tau()]);
        assert!((f_solver - oracle.f).abs() <= welfare_rel * oracle.f.abs());

        // Preferred prices: own consumption.
        for (region, own_is_north) in [(RegionId::North, true), (RegionId::South, false)] {
            let own = |tau: &[f64]| -> f64 {
                match uniform_consumptions(&econ, tau[0]) {
                    Some((x_n, x_s)) => {
                        if own_is_north {
                            x_n
                        } else {
                            x_s
                        }
                    }
                    None => f64::NEG_INFINITY,
                }
            };
            let preferred = solve_preferred_static(&econ, region, TOL).unwrap();
            let oracle = grid_oracle(&own, &[0.0], &[top], 2000).unwrap();
            assert!(
                (preferred.tau() - oracle.x[0]).abs() <= price_tol,
                "instance {i} {region:?}: preferred {} vs oracle {}",
                preferred.tau(),
                oracle.x[0]
            );
            let f_solver = own(&[preferred.tau()]);
            assert!((f_solver - oracle.f).abs() <= welfare_rel * oracle.f.abs());
        }

        // Differentiated: two-dimensional grid, chained refinement (the
        // second oracle call zooms on the first call's cell).
        let welfare2 = |tau: &[f64]| -> f64 {
            let a_n = econ.north.cost.abatement_at_price(tau[0]);
            let a_s = econ.south.cost.abatement_at_price(tau[1]);
            let a = a_n + a_s;
            let e_bar = econ.north.damage.e_bar.min(econ.south.damage.e_bar);
            if a > e_bar {
                return f64::NEG_INFINITY;
            }
            let x_n = econ.north.consumption_unchecked(a_n, a);
            let x_s = econ.south.consumption_unchecked(a_s, a);
            if x_n <= 0.0 || x_s <= 0.0 {
                return f64::NEG_INFINITY;
            }
            l_n * u.utility(x_n / l_n) + l_s * u.utility(x_s / l_s)
        };
        let diff = solve_utilitarian_differentiated_static(&econ, TOL).unwrap();
        let cap_n = econ.north.cost.mac(econ.north.damage.e_bar);
        let cap_s = econ.south.cost.mac(econ.south.damage.e_bar);
        let coarse = grid_oracle(&welfare2, &[0.0, 0.0], &[cap_n, cap_s], 400).unwrap();
        let h = [cap_n / 399.0 * 2.0, cap_s / 399.0 * 2.0];
        let zoom_lower = [(coarse.x[0] - h[0]).max(0.0), (coarse.x[1] - h[1]).max(0.0)];
        let zoom_upper = [
            (coarse.x[0] + h[0]).min(cap_n),
            (coarse.x[1] + h[1]).min(cap_s),
        ];
        let oracle = grid_oracle(&welfare2, &zoom_lower, &zoom_upper, 400).unwrap();
        for (d, (solver_tau, oracle_tau)) in [
            (0, (diff.tau_north, oracle.x[0])),
            (1, (diff.tau_south, oracle.x[1])),
        ] {
            assert!(
                (solver_tau - oracle_tau).abs() <= price_tol,
                "instance {i} coord {d}: differentiated {solver_tau} vs oracle {oracle_tau}"
            );
        }
        let f_solver = welfare2(&[diff.tau_north, diff.tau_south]);
        assert!(
            (f_solver - oracle.f).abs() <= welfare_rel * oracle.f.abs(),
            "instance {i}: differentiated welfare {f_solver} vs oracle {}",
            oracle.f
        );
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < 300.0,
        "oracle equivalence took {elapsed:.1}s (limit 300s)"
    );
    pass(
        "oracle-equivalence",
        started,
        "100 economies, 5 regimes each, prices within 1e-3 and welfare within 1e-4 relative",
    );
}

#[test]
fn negishi_knife_edge() {
    let started = Instant::now();
    let sampler = SamplerConfig::default();
    for i in 0..100u64 {
        let econ = sample_static_economy(instance_seed(777_000, i), &sampler, TOL);
        let negishi = solve_negishi_static(&econ, TOL).unwrap();
        let diff = solve_arbitrary_weights_static(&econ, negishi.weights, false, TOL).unwrap();
        let gap = (diff.tau_north - diff.tau_south).abs();
        assert!(
            gap <= 1e-8 * negishi.tau(),
            "instance {i}: |tau_N - tau_S| = {gap:.3e} at tau = {}",
            negishi.tau()
        );
    }
    pass(
        "negishi-knife-edge",
        started,
        "100 instances, differentiated prices uniform within 1e-8 relative",
    );
}

#[test]
fn wecc_round_trip() {
    let started = Instant::now();
    let scenario = bundled_scenario();
    let mut pairs_checked = 0;
    let mut seed = 0u64;
    while pairs_checked < 20 {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(900_000 + seed);
        let mut random_policy = || -> PolicyPath {
            PolicyPath {
                mode: PolicyMode::Differentiated,
                rates: (0..scenario.n_regions())
                    .map(|_| {
                        (0..scenario.periods)
                            .map(|_| rng.gen_range(0.0..0.6))
                            .collect()
                    })
                    .collect(),
            }
        };
        let a = simulate(&scenario, &random_policy()).unwrap();
        let b = simulate(&scenario, &random_policy()).unwrap();

        // Identical trajectories give exactly zero.
        assert_eq!(
            welfare_equivalent_consumption_change(&scenario, &a, &a, WeccScope::GlobalEqual)
                .unwrap(),
            0.0
        );

        // Some extreme draws push the welfare gap outside the utility range
        // (eta > 1 bounds utility above); those legitimately error and are
        // redrawn rather than counted.
        let mut ok = true;
        for i in 0..scenario.n_regions() {
            match welfare_equivalent_consumption_change(&scenario, &a, &b, WeccScope::Region(i)) {
                Ok(delta) => {
                    let l0 = scenario.regions[i].population[0];
                    let x_cf = b.per_capita[i][0] + delta / l0;
                    let npv = |traj: &iam::Trajectory, x0: Option<f64>| -> f64 {
                        (0..scenario.periods)
                            .map(|t| {
                                let x = if t == 0 {
                                    x0.unwrap_or(traj.per_capita[i][t])
                                } else {
                                    traj.per_capita[i][t]
                                };
                                scenario.regions[i].population[t]
                                    * scenario.discount_factor(t)
                                    * scenario.utility.utility(x)
                            })
                            .sum()
                    };
                    let patched = npv(&b, Some(x_cf));
                    let target = npv(&a, None);
                    assert!(
                        (patched - target).abs() <= 1e-8 * target.abs(),
                        "pair {pairs_checked} region {i}: {patched} vs {target}"
                    );
                }
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            pairs_checked += 1;
        }
    }
    pass(
        "wecc-round-trip",
        started,
        "20 random trajectory pairs reproduce target welfare within 1e-8 relative",
    );
}

#[test]
fn iam_directional() {
    let started = Instant::now();
    let scenario = bundled_scenario();
    let cfg = OptimizerConfig {
        max_evals: 60_000,
        restarts: 2,
        xtol: 1e-7,
        seed: 7,
        ..OptimizerConfig::default()
    };
    let comparison = compare_regimes(
        &scenario,
        &[
            RegimeKind::Negishi,
            RegimeKind::UtilitarianUniform,
            RegimeKind::UtilitarianDifferentiated,
        ],
        &cfg,
        1e-6,
    )
    .unwrap();
    let negishi = comparison.report(RegimeKind::Negishi).unwrap();
    let uniform = comparison.report(RegimeKind::UtilitarianUniform).unwrap();
    let diff = comparison
        .report(RegimeKind::UtilitarianDifferentiated)
        .unwrap();

    // (a) Utilitarian welfare ordering from constrained-optimum nesting.
    assert!(
        diff.welfare_utilitarian >= uniform.welfare_utilitarian,
        "(a) differentiated {} < uniform {}",
        diff.welfare_utilitarian,
        uniform.welfare_utilitarian
    );
    assert!(
        uniform.welfare_utilitarian >= negishi.welfare_utilitarian,
        "(a) uniform {} < negishi {}",
        uniform.welfare_utilitarian,
        negishi.welfare_utilitarian
    );

    // (b) The utilitarian uniform price tops the Negishi price early on:
    // the poorest region carries the largest damage coefficients and the
    // fastest population growth in this calibration.
    let negishi_prices = mean_price_path(&scenario, &negishi.outcome.trajectory);
    let uniform_prices = mean_price_path(&scenario, &uniform.outcome.trajectory);
    for t in 0..5 {
        assert!(
            uniform_prices[t] >= negishi_prices[t],
            "(b) period {t}: uniform {} < negishi {}",
            uniform_prices[t],
            negishi_prices[t]
        );
    }

    // (c) Differentiated prices line up with per-capita consumption in the
    // first period: richest pays the highest price.
    let traj = &diff.outcome.trajectory;
    for i in 1..scenario.n_regions() {
        let (richer, poorer) = (i - 1, i);
        assert!(
            traj.per_capita[richer][0] > traj.per_capita[poorer][0],
            "(c) calibration orders regions by income"
        );
        assert!(
            traj.carbon_price[richer][0] > traj.carbon_price[poorer][0] * 0.99,
            "(c) price of {richer} ({}) not above price of {poorer} ({})",
            traj.carbon_price[richer][0],
            traj.carbon_price[poorer][0]
        );
    }

    // Differentiated-vs-uniform price spread at the first period: the
    // richest region's differentiated price exceeds the (approximately
    // uniform) Negishi price while the poorest region's falls below it.
    let poorest = scenario.n_regions() - 1;
    assert!(
        traj.carbon_price[0][0] > negishi_prices[0],
        "richest differentiated price {} not above negishi {}",
        traj.carbon_price[0][0],
        negishi_prices[0]
    );
    assert!(
        traj.carbon_price[poorest][0] < negishi_prices[0],
        "poorest differentiated price {} not below negishi {}",
        traj.carbon_price[poorest][0],
        negishi_prices[0]
    );

    // (d) Cumulative emissions ordering.
    assert!(
        diff.cumulative_emissions <= uniform.cumulative_emissions + 1e-9,
        "(d) differentiated {} > uniform {}",
        diff.cumulative_emissions,
        uniform.cumulative_emissions
    );
    assert!(
        uniform.cumulative_emissions <= negishi.cumulative_emissions + 1e-9,
        "(d) uniform {} > negishi {}",
        uniform.cumulative_emissions,
        negishi.cumulative_emissions
    );

    // (e) The poorest region prefers a stricter uniform price than the
    // richest.
    let preferred = preferred_uniform_prices(&scenario, &cfg).unwrap();
    let price_of = |i: usize| mean_price_path(&scenario, &preferred[i].trajectory)[0];
    let richest = 0;
    assert!(
        price_of(poorest) > price_of(richest),
        "(e) poorest {} vs richest {}",
        price_of(poorest),
        price_of(richest)
    );

    // Global welfare-equivalent gains of the utilitarian regimes are
    // nonnegative by the ordering in (a).
    assert!(uniform.wecc_global_vs_negishi >= 0.0);
    assert!(diff.wecc_global_vs_negishi >= 0.0);

    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < 900.0,
        "IAM acceptance took {elapsed:.1}s (limit 900s)"
    );
    pass(
        "iam-directional",
        started,
        &format!(
            "orderings (a)-(e) hold; 2025 prices: negishi {:.1}, uniform {:.1}, poorest-preferred {:.1} $/t",
            negishi_prices[0] * 1000.0,
            uniform_prices[0] * 1000.0,
            price_of(poorest) * 1000.0
        ),
    );
}

#[test]
fn optimizer_unit_gate() {
    let started = Instant::now();
    let cfg = OptimizerConfig {
        seed: 99,
        ..OptimizerConfig::default()
    };

    let parabola = |x: &[f64]| -(x[0] - 1.0).powi(2);
    let out = maximize_bounded(&parabola, &[-5.0], &[5.0], &cfg).unwrap();
    assert!((out.x[0] - 1.0).abs() < 1e-6 && out.f.abs() < 1e-6);

    let rosenbrock = |x: &[f64]| -((1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2));
    let out = maximize_bounded(&rosenbrock, &[-2.0, -2.0], &[2.0, 2.0], &cfg).unwrap();
    assert!((out.x[0] - 1.0).abs() < 1e-3 && (out.x[1] - 1.0).abs() < 1e-3);

    let quadratic12 = |x: &[f64]| -> f64 {
        -x.iter()
            .enumerate()
            .map(|(i, xi)| (0.5 + 0.3 * i as f64) * (xi - (0.1 * i as f64 - 0.4)).powi(2))
            .sum::<f64>()
    };
    let out = maximize_bounded(&quadratic12, &[-3.0; 12], &[3.0; 12], &cfg).unwrap();
    for (i, xi) in out.x.iter().enumerate() {
        let target = 0.1 * i as f64 - 0.4;
        assert!(
            (xi - target).abs() < 1e-5,
            "coordinate {i}: {xi} vs {target}"
        );
    }

    let objective = |x: &[f64]| -(x[0] * x[0] + x[1] * x[1]);
    let constraint = |x: &[f64]| vec![x[0] + x[1] - 1.0];
    let out =
        maximize_eq_constrained(&objective, &constraint, &[-2.0, -2.0], &[2.0, 2.0], &cfg).unwrap();
    assert!(out.converged && out.constraint_violation <= 1e-8);
    assert!((out.x[0] - 0.5).abs() < 1e-4 && (out.x[1] - 0.5).abs() < 1e-4);

    // Determinism, bit for bit.
    let a = maximize_bounded(&rosenbrock, &[-2.0, -2.0], &[2.0, 2.0], &cfg).unwrap();
    let b = maximize_bounded(&rosenbrock, &[-2.0, -2.0], &[2.0, 2.0], &cfg).unwrap();
    assert_eq!(a.x, b.x);
    assert_eq!(a.f.to_bits(), b.f.to_bits());
    assert_eq!(a.evals, b.evals);

    pass(
        "optimizer-unit-gate",
        started,
        "analytic optima recovered; runs bit-for-bit deterministic",
    );
}

/// Cross-validation promised by the optimizer module: the equalized-MAC
/// constraint formulation reproduces the uniform-mode parameterization on a
/// small world.
#[test]
fn auglag_reproduces_uniform_parameterization() {
    let started = Instant::now();
    let mut scenario = bundled_scenario();
    scenario.periods = 1;
    scenario.regions.truncate(2);
    scenario.exogenous_emissions.truncate(1);
    for r in &mut scenario.regions {
        r.population.truncate(1);
        r.output_gross.truncate(1);
        r.emission_intensity.truncate(1);
        r.backstop.truncate(1);
        // Steeper damages so the one-period optimum is interior.
        r.damage_linear *= 40.0;
        r.damage_quadratic *= 40.0;
    }
    let cfg = OptimizerConfig {
        max_evals: 50_000,
        restarts: 2,
        xtol: 1e-8,
        seed: 17,
        ctol: 1e-7,
        ..OptimizerConfig::default()
    };

    let uniform = iam::optimize_policy(
        &scenario,
        iam::Objective::Utilitarian,
        PolicyMode::Uniform,
        &cfg,
        &[],
    )
    .unwrap();
    let tau_uniform = uniform.trajectory.carbon_price[0][0];

    // Same problem as a constrained differentiated optimization: equalized
    // marginal abatement costs across the two regions.
    let s = &scenario;
    let objective = |x: &[f64]| -> f64 {
        let policy = PolicyPath {
            mode: PolicyMode::Differentiated,
            rates: vec![vec![x[0]], vec![x[1]]],
        };
        match simulate(s, &policy) {
            Ok(t) => evaluate_swf(s, &t, Swf::Utilitarian, s.rho).unwrap_or(f64::NEG_INFINITY),
            Err(_) => f64::NEG_INFINITY,
        }
    };
    let equalities = |x: &[f64]| -> Vec<f64> {
        vec![s.regions[0].carbon_price(0, x[0]) - s.regions[1].carbon_price(0, x[1])]
    };
    let constrained =
        maximize_eq_constrained(&objective, &equalities, &[0.0, 0.0], &[1.0, 1.0], &cfg).unwrap();
    let tau_constrained = s.regions[0].carbon_price(0, constrained.x[0]);
    assert!(
        (tau_constrained - tau_uniform).abs() <= 1e-4,
        "constrained {tau_constrained} vs parameterized {tau_uniform}"
    );
    pass(
        "auglag-uniform-crosscheck",
        started,
        &format!("prices agree within 1e-4: {tau_constrained:.6} vs {tau_uniform:.6}"),
    );
}
