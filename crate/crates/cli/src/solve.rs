use carbonweights::dynamic_solver::{
    check_proposition4, solve_dynamic_negishi, solve_dynamic_utilitarian_uniform,
};
use carbonweights::static_solver::{
    check_static_propositions, sample_static_economy, solve_all_regimes, SamplerConfig, DEFAULT_TOL,
};
use clap::Args;

use crate::economy::{DynamicEconomyParams, StaticEconomyParams};
use crate::report::{text_table, OutputContext};
use crate::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct StaticSolveArgs {
    /// Elasticity of marginal utility.
    #[arg(long)]
    eta: Option<f64>,
    /// Economy overrides, e.g. --set south.damage_share=0.05 (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Draw the economy from the randomized sampler (keyed by --seed)
    /// instead of the default calibration.
    #[arg(long)]
    sample: bool,
    /// Relative tie band for the proposition verdicts.
    #[arg(long, default_value_t = 1e-6)]
    band: f64,
}

pub fn static_solve(ctx: &OutputContext, args: &StaticSolveArgs, seed: u64) -> CliResult {
    let econ = if args.sample {
        sample_static_economy(seed, &SamplerConfig::default(), DEFAULT_TOL)
    } else {
        let mut params = StaticEconomyParams::default();
        if let Some(eta) = args.eta {
            params.eta = eta;
        }
        for entry in &args.set {
            params.apply_override(entry)?;
        }
        params.build()?
    };

    let regimes =
        solve_all_regimes(&econ, DEFAULT_TOL).map_err(|e| CliError::Solver(e.to_string()))?;
    let report = check_static_propositions(&econ, DEFAULT_TOL, args.band)
        .map_err(|e| CliError::Solver(e.to_string()))?;

    let mut csv = String::from(
        "regime,tau_north,tau_south,abatement_north,abatement_south,x_north,x_south,\
         weight_north,weight_south,iterations,residual\n",
    );
    let mut rows = Vec::new();
    for (label, sol) in [
        ("negishi", &regimes.negishi),
        ("utilitarian-uniform", &regimes.utilitarian_uniform),
        (
            "utilitarian-differentiated",
            &regimes.utilitarian_differentiated,
        ),
        ("preferred-north", &regimes.preferred_north),
        ("preferred-south", &regimes.preferred_south),
    ] {
        csv.push_str(&format!(
            "{label},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.6e},{:.6e},{},{:.3e}\n",
            sol.tau_north,
            sol.tau_south,
            sol.abatement_north,
            sol.abatement_south,
            sol.x_north,
            sol.x_south,
            sol.weights.0,
            sol.weights.1,
            sol.iterations,
            sol.residual,
        ));
        rows.push(vec![
            label.to_owned(),
            format!("{:.6}", sol.tau_north),
            format!("{:.6}", sol.tau_south),
            format!("{:.6}", sol.global_abatement()),
            format!("{:.3e}", sol.residual),
        ]);
    }
    ctx.write("static_solve.csv", &csv)?;
    println!(
        "{}",
        text_table(
            &["regime", "tau_N", "tau_S", "A", "residual"].map(String::from),
            &rows
        )
    );
    println!(
        "price ratio utilitarian/negishi: {:.4}",
        regimes.utilitarian_uniform.tau() / regimes.negishi.tau()
    );
    let verdicts = report
        .verdicts()
        .map(|(name, v)| format!("{name}:{v:?}"))
        .join(" ");
    println!("proposition verdicts: {verdicts}");
    if report.prices_coincide {
        println!("all six prices coincide within tolerance");
    }
    for (label, sol) in [
        ("negishi", &regimes.negishi),
        ("utilitarian-uniform", &regimes.utilitarian_uniform),
        (
            "utilitarian-differentiated",
            &regimes.utilitarian_differentiated,
        ),
        ("preferred-north", &regimes.preferred_north),
        ("preferred-south", &regimes.preferred_south),
    ] {
        if sol.x_order_violated {
            println!("warning: {label}: per capita consumption ordering x_N > x_S violated");
        }
        if sol.multiple_solutions {
            println!("warning: {label}: restarts found distinct solutions");
        }
    }
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct DynamicSolveArgs {
    #[arg(long)]
    eta: Option<f64>,
    /// Pure rate of time preference per year.
    #[arg(long)]
    rho: Option<f64>,
    /// Economy overrides, e.g. --set south.gL=0.02 (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[arg(long, default_value_t = 1e-6)]
    band: f64,
}

pub fn dynamic_solve(ctx: &OutputContext, args: &DynamicSolveArgs) -> CliResult {
    let mut params = DynamicEconomyParams::default();
    if let Some(eta) = args.eta {
        params.eta = eta;
    }
    if let Some(rho) = args.rho {
        params.rho = rho;
    }
    for entry in &args.set {
        params.apply_override(entry)?;
    }
    let econ = params.build()?;

    let negishi =
        solve_dynamic_negishi(&econ, DEFAULT_TOL).map_err(|e| CliError::Solver(e.to_string()))?;
    let utilitarian = solve_dynamic_utilitarian_uniform(&econ, DEFAULT_TOL)
        .map_err(|e| CliError::Solver(e.to_string()))?;
    let prop4 = check_proposition4(&econ, DEFAULT_TOL, args.band)
        .map_err(|e| CliError::Solver(e.to_string()))?;

    let mut csv = String::from(
        "regime,tau,abatement_north,abatement_south,v,beta,x_north_1,x_north_2,x_south_1,\
         x_south_2,iterations,residual\n",
    );
    for (label, sol) in [("negishi", &negishi), ("utilitarian-uniform", &utilitarian)] {
        csv.push_str(&format!(
            "{label},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{},{:.3e}\n",
            sol.tau,
            sol.abatement_north,
            sol.abatement_south,
            sol.v,
            sol.beta,
            sol.x_north[0],
            sol.x_north[1],
            sol.x_south[0],
            sol.x_south[1],
            sol.iterations,
            sol.residual,
        ));
    }
    ctx.write("dynamic_solve.csv", &csv)?;

    println!(
        "dynamic negishi price {:.6} (v {:.6}, beta {:.6})",
        negishi.tau, negishi.v, negishi.beta
    );
    println!("dynamic utilitarian uniform price {:.6}", utilitarian.tau);
    println!(
        "ratio {:.4}; comparison verdict {:?} (gap {:.3e}, discriminant {:.3e})",
        utilitarian.tau / negishi.tau,
        prop4.verdict,
        prop4.price_gap,
        prop4.discriminant
    );
    Ok(())
}
