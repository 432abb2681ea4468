use carbonweights::iam::welfare_equivalent_consumption_change;
use carbonweights::iam::{
    calibration, compare_regimes, evaluate_swf, marginal_damage_pulse, mean_price_path,
    optimize_negishi, optimize_policy, preferred_uniform_prices, simulate, trajectory_csv,
    IamScenario, Objective, PolicyMode, PolicyOutcome, PolicyPath, RegimeKind, ScenarioFile, Swf,
    WeccScope,
};
use carbonweights::optimizer::OptimizerConfig;
use clap::Args;

use crate::report::{text_table, OutputContext};
use crate::{CliError, CliResult, ScenarioArgs};

/// Carbon prices are stored in model units (trillions per Gt for the
/// bundled calibration); this factor converts them to dollars per tonne for
/// the human-readable summaries.
const USD_PER_TCO2: f64 = 1000.0;

pub fn load_scenario(args: &ScenarioArgs) -> Result<(ScenarioFile, IamScenario), CliError> {
    let mut file = match &args.scenario {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {path:?}: {e}")))?;
            ScenarioFile::parse(&text).map_err(|e| CliError::Config(e.to_string()))?
        }
        None => calibration::bundled_scenario_file(),
    };
    for entry in &args.set {
        let (key, value) = crate::economy::split_override(entry)?;
        file.apply_override(key, value)
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    let scenario = file.expand().map_err(|e| CliError::Config(e.to_string()))?;
    Ok((file, scenario))
}

pub fn optimizer_config(args: &ScenarioArgs, seed: u64) -> OptimizerConfig {
    OptimizerConfig {
        max_evals: args.max_evals,
        restarts: args.restarts.max(1),
        seed,
        xtol: 1e-7,
        ..OptimizerConfig::default()
    }
}

fn parse_regimes(list: &str) -> Result<Vec<RegimeKind>, CliError> {
    list.split(',')
        .map(|s| match s.trim() {
            "negishi" => Ok(RegimeKind::Negishi),
            "utilitarian-uniform" | "uniform" => Ok(RegimeKind::UtilitarianUniform),
            "utilitarian-differentiated" | "differentiated" => {
                Ok(RegimeKind::UtilitarianDifferentiated)
            }
            other => Err(CliError::Config(format!(
                "unknown regime {other:?} (expected negishi, utilitarian-uniform, utilitarian-differentiated)"
            ))),
        })
        .collect()
}

fn run_regime(
    scenario: &IamScenario,
    kind: RegimeKind,
    cfg: &OptimizerConfig,
) -> Result<PolicyOutcome, CliError> {
    let outcome = match kind {
        RegimeKind::Negishi => {
            let neg = optimize_negishi(scenario, cfg, 1e-6, 50)
                .map_err(|e| CliError::Solver(e.to_string()))?;
            PolicyOutcome {
                policy: neg.policy,
                trajectory: neg.trajectory,
                result: neg.result,
            }
        }
        RegimeKind::UtilitarianUniform => optimize_policy(
            scenario,
            Objective::Utilitarian,
            PolicyMode::Uniform,
            cfg,
            &[],
        )
        .map_err(|e| CliError::Solver(e.to_string()))?,
        RegimeKind::UtilitarianDifferentiated => optimize_policy(
            scenario,
            Objective::Utilitarian,
            PolicyMode::Differentiated,
            cfg,
            &[],
        )
        .map_err(|e| CliError::Solver(e.to_string()))?,
    };
    Ok(outcome)
}

#[derive(Args, Debug, Clone)]
pub struct IamRunArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Regime to optimize; `none` simulates the zero-abatement baseline.
    #[arg(long, default_value = "negishi")]
    regime: String,
    /// Write the effective scenario (after overrides) as TOML and exit.
    #[arg(long)]
    emit_scenario: bool,
}

pub fn iam_run(ctx: &OutputContext, args: &IamRunArgs, seed: u64) -> CliResult {
    let (file, scenario) = load_scenario(&args.scenario)?;
    if args.emit_scenario {
        ctx.write("scenario.toml", &file.to_toml())?;
        return Ok(());
    }
    let (label, trajectory) = if args.regime == "none" {
        let policy = PolicyPath::zero(&scenario, PolicyMode::Differentiated);
        (
            "baseline".to_owned(),
            simulate(&scenario, &policy).map_err(|e| CliError::Solver(e.to_string()))?,
        )
    } else {
        let kind = parse_regimes(&args.regime)?[0];
        let cfg = optimizer_config(&args.scenario, seed);
        let outcome = run_regime(&scenario, kind, &cfg)?;
        (kind.label().to_owned(), outcome.trajectory)
    };
    ctx.write(
        &format!("trajectory_{label}.csv"),
        &trajectory_csv(&scenario, &trajectory),
    )?;
    println!(
        "{label}: peak warming {:.2} C, cumulative emissions {:.0}, welfare(utilitarian) {:.4}",
        trajectory.peak_temperature(),
        trajectory.total_cumulative_emissions(),
        evaluate_swf(&scenario, &trajectory, Swf::Utilitarian, scenario.rho)
            .map_err(|e| CliError::Solver(e.to_string()))?,
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct IamCompareArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Comma-separated regimes to compare.
    #[arg(
        long,
        default_value = "negishi,utilitarian-uniform,utilitarian-differentiated"
    )]
    regimes: String,
}

pub fn iam_compare(ctx: &OutputContext, args: &IamCompareArgs, seed: u64) -> CliResult {
    let (_, scenario) = load_scenario(&args.scenario)?;
    let kinds = parse_regimes(&args.regimes)?;
    let cfg = optimizer_config(&args.scenario, seed);
    let comparison = compare_regimes(&scenario, &kinds, &cfg, 1e-6)
        .map_err(|e| CliError::Solver(e.to_string()))?;

    let mut csv = String::from(
        "regime,welfare_utilitarian,welfare_negishi_weighted,peak_temperature_deg_c,\
         cumulative_emissions_mass,wecc_global_vs_negishi_money,converged\n",
    );
    let mut price_csv = String::from("regime,period,year,mean_carbon_price_money_per_mass\n");
    let mut wecc_csv = String::from("regime,region,wecc_vs_negishi_money\n");
    let mut rows = Vec::new();
    for report in &comparison.reports {
        let label = report.kind.label();
        csv.push_str(&format!(
            "{label},{:.12e},{:.12e},{:.4},{:.4},{:.6e},{}\n",
            report.welfare_utilitarian,
            report.welfare_negishi_weighted,
            report.peak_temperature,
            report.cumulative_emissions,
            report.wecc_global_vs_negishi,
            report.outcome.result.converged,
        ));
        for (t, p) in report.mean_prices.iter().enumerate() {
            price_csv.push_str(&format!("{label},{t},{},{:.6e}\n", scenario.year(t), p));
        }
        for (i, region) in scenario.regions.iter().enumerate() {
            wecc_csv.push_str(&format!(
                "{label},{},{:.6e}\n",
                region.name, report.wecc_vs_negishi[i]
            ));
        }
        ctx.write(
            &format!("trajectory_{label}.csv"),
            &trajectory_csv(&scenario, &report.outcome.trajectory),
        )?;
        rows.push(vec![
            label.to_owned(),
            format!("{:.1}", report.mean_prices[0] * USD_PER_TCO2),
            format!("{:.2}", report.peak_temperature),
            format!("{:.0}", report.cumulative_emissions),
            format!("{:.4}", report.welfare_utilitarian),
            format!("{:+.3}", report.wecc_global_vs_negishi),
        ]);
    }
    ctx.write("iam_compare.csv", &csv)?;
    ctx.write("iam_compare_prices.csv", &price_csv)?;
    ctx.write("iam_compare_wecc.csv", &wecc_csv)?;

    // Marginal damages at the Negishi policy, per region, pulse in period 0.
    if let Some(negishi) = comparison.report(RegimeKind::Negishi) {
        let damages = marginal_damage_pulse(&scenario, &negishi.outcome.policy, 0, 1.0)
            .map_err(|e| CliError::Solver(e.to_string()))?;
        let mut pulse_csv =
            String::from("region,marginal_damage_money_per_mass,share_of_initial_output\n");
        for (i, region) in scenario.regions.iter().enumerate() {
            pulse_csv.push_str(&format!(
                "{},{:.6e},{:.6e}\n",
                region.name,
                damages[i],
                damages[i] / region.output_gross[0]
            ));
        }
        ctx.write("iam_compare_pulse.csv", &pulse_csv)?;
    }

    println!(
        "{}",
        text_table(
            &[
                "regime",
                "price 2025 ($/t)",
                "peak T (C)",
                "cum. emissions",
                "welfare (util)",
                "global WECC",
            ]
            .map(String::from),
            &rows
        )
    );
    println!(
        "negishi weights converged in {} outer iteration(s)",
        comparison.negishi_outer_iterations
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct PreferredArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
}

pub fn preferred_prices(ctx: &OutputContext, args: &PreferredArgs, seed: u64) -> CliResult {
    let (_, scenario) = load_scenario(&args.scenario)?;
    let cfg = optimizer_config(&args.scenario, seed);
    let outcomes =
        preferred_uniform_prices(&scenario, &cfg).map_err(|e| CliError::Solver(e.to_string()))?;

    let mut csv = String::from(
        "region,period,year,preferred_uniform_price_money_per_mass,peak_temperature_deg_c\n",
    );
    let mut rows = Vec::new();
    for (i, outcome) in outcomes.iter().enumerate() {
        let name = &scenario.regions[i].name;
        let prices = mean_price_path(&scenario, &outcome.trajectory);
        for (t, p) in prices.iter().enumerate() {
            csv.push_str(&format!(
                "{name},{t},{},{:.6e},{:.4}\n",
                scenario.year(t),
                p,
                outcome.trajectory.peak_temperature()
            ));
        }
        rows.push(vec![
            name.clone(),
            format!("{:.1}", prices[0] * USD_PER_TCO2),
            format!("{:.2}", outcome.trajectory.peak_temperature()),
        ]);
    }
    ctx.write("preferred_prices.csv", &csv)?;
    println!(
        "{}",
        text_table(
            &["region", "preferred price 2025 ($/t)", "peak T (C)"].map(String::from),
            &rows
        )
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct WeccArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Exactly two regimes: the welfare change of the first is expressed
    /// against the second.
    #[arg(long, default_value = "utilitarian-uniform,negishi")]
    regimes: String,
}

pub fn wecc(ctx: &OutputContext, args: &WeccArgs, seed: u64) -> CliResult {
    let (_, scenario) = load_scenario(&args.scenario)?;
    let kinds = parse_regimes(&args.regimes)?;
    if kinds.len() != 2 {
        return Err(CliError::Config("wecc needs exactly two regimes".into()));
    }
    let cfg = optimizer_config(&args.scenario, seed);
    let a = run_regime(&scenario, kinds[0], &cfg)?;
    let b = run_regime(&scenario, kinds[1], &cfg)?;

    let mut csv = String::from("scope,wecc_money\n");
    let mut rows = Vec::new();
    for (i, region) in scenario.regions.iter().enumerate() {
        let d = welfare_equivalent_consumption_change(
            &scenario,
            &a.trajectory,
            &b.trajectory,
            WeccScope::Region(i),
        )
        .map_err(|e| CliError::Solver(e.to_string()))?;
        csv.push_str(&format!("{},{:.6e}\n", region.name, d));
        rows.push(vec![region.name.clone(), format!("{d:+.4}")]);
    }
    let global = welfare_equivalent_consumption_change(
        &scenario,
        &a.trajectory,
        &b.trajectory,
        WeccScope::GlobalEqual,
    )
    .map_err(|e| CliError::Solver(e.to_string()))?;
    csv.push_str(&format!("global-equal,{global:.6e}\n"));
    rows.push(vec!["global-equal".into(), format!("{global:+.4}")]);
    ctx.write("wecc.csv", &csv)?;
    println!(
        "welfare-equivalent initial-period consumption change, {} vs {}:",
        kinds[0].label(),
        kinds[1].label()
    );
    println!(
        "{}",
        text_table(&["scope", "change (money)"].map(String::from), &rows)
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct PulseArgs {
    #[command(flatten)]
    scenario: ScenarioArgs,
    /// Policy to evaluate at.
    #[arg(long, default_value = "negishi")]
    regime: String,
    /// Period of the emissions pulse.
    #[arg(long, default_value_t = 0)]
    period: usize,
    /// Pulse mass (emissions units).
    #[arg(long, default_value_t = 1.0)]
    size: f64,
}

pub fn pulse(ctx: &OutputContext, args: &PulseArgs, seed: u64) -> CliResult {
    let (_, scenario) = load_scenario(&args.scenario)?;
    let cfg = optimizer_config(&args.scenario, seed);
    let policy = if args.regime == "none" {
        PolicyPath::zero(&scenario, PolicyMode::Differentiated)
    } else {
        run_regime(&scenario, parse_regimes(&args.regime)?[0], &cfg)?.policy
    };
    let damages = marginal_damage_pulse(&scenario, &policy, args.period, args.size)
        .map_err(|e| CliError::Solver(e.to_string()))?;
    let mut csv = String::from("region,marginal_damage_money_per_mass,share_of_initial_output\n");
    let mut rows = Vec::new();
    for (i, region) in scenario.regions.iter().enumerate() {
        csv.push_str(&format!(
            "{},{:.6e},{:.6e}\n",
            region.name,
            damages[i],
            damages[i] / region.output_gross[0]
        ));
        rows.push(vec![
            region.name.clone(),
            format!("{:.2}", damages[i] * USD_PER_TCO2),
            format!("{:.4e}", damages[i] / region.output_gross[0]),
        ]);
    }
    ctx.write("pulse.csv", &csv)?;
    println!(
        "{}",
        text_table(
            &["region", "marginal damage ($/t)", "per unit initial output"].map(String::from),
            &rows
        )
    );
    Ok(())
}
