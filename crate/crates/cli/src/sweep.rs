use carbonweights::dynamic_solver::{
    dynamic_diagnostics_csv_header, run_prop4_sweep, DynamicSamplerConfig,
};
use carbonweights::static_solver::{
    diagnostics_csv_header, run_static_props_sweep, SamplerConfig, StaticSweepSummary,
    VerdictCounts, DEFAULT_TOL,
};
use clap::Args;

use crate::report::{text_table, OutputContext};
use crate::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// Number of static and of dynamic instances.
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Relative tie band: discriminants inside it are indeterminate.
    #[arg(long, default_value_t = 1e-6)]
    band: f64,
}

pub fn props_sweep(ctx: &OutputContext, args: &SweepArgs, seed: u64) -> CliResult {
    if args.count == 0 {
        return Err(CliError::Config("count must be at least 1".into()));
    }
    let static_out = run_static_props_sweep(
        args.count,
        seed,
        DEFAULT_TOL,
        args.band,
        &SamplerConfig::default(),
    );
    let dynamic_out = run_prop4_sweep(
        args.count,
        seed,
        DEFAULT_TOL,
        args.band,
        &DynamicSamplerConfig::default(),
    );

    // Solver failures keep rows rectangular: the message lands in the
    // second column and the rest stay empty.
    let error_row = |seed: u64, message: String, columns: usize| -> String {
        let sanitized = message.replace(',', ";");
        format!("{seed},{sanitized}{}", ",".repeat(columns - 2))
    };

    let static_columns = diagnostics_csv_header().split(',').count();
    let mut static_csv = String::from(diagnostics_csv_header());
    static_csv.push('\n');
    for (inst_seed, row) in &static_out.rows {
        match row {
            Ok(report) => static_csv.push_str(&report.csv_row(*inst_seed)),
            Err(e) => static_csv.push_str(&error_row(
                *inst_seed,
                format!("solver-error:{e}"),
                static_columns,
            )),
        }
        static_csv.push('\n');
    }
    ctx.write("props_static.csv", &static_csv)?;

    let dynamic_columns = dynamic_diagnostics_csv_header().split(',').count();
    let mut dynamic_csv = String::from(dynamic_diagnostics_csv_header());
    dynamic_csv.push('\n');
    for (inst_seed, row) in &dynamic_out.rows {
        match row {
            Ok(report) => dynamic_csv.push_str(&report.csv_row(*inst_seed)),
            Err(e) => dynamic_csv.push_str(&error_row(
                *inst_seed,
                format!("solver-error:{e}"),
                dynamic_columns,
            )),
        }
        dynamic_csv.push('\n');
    }
    ctx.write("props_dynamic.csv", &dynamic_csv)?;

    print_summary(
        &static_out.summary,
        &dynamic_out.verdicts,
        dynamic_out.solver_failures,
    );

    let prop_failures = static_out.summary.total_failures() + dynamic_out.verdicts.fail;
    let solver_failures = static_out.summary.solver_failures + dynamic_out.solver_failures;
    if prop_failures > 0 {
        return Err(CliError::Propositions {
            failures: prop_failures,
        });
    }
    if solver_failures > 0 {
        return Err(CliError::Solver(format!(
            "{solver_failures} instance(s) failed to solve"
        )));
    }
    Ok(())
}

fn print_summary(
    summary: &StaticSweepSummary,
    dynamic: &VerdictCounts,
    dynamic_solver_failures: usize,
) {
    let row = |name: &str, c: &VerdictCounts| {
        vec![
            name.to_owned(),
            c.pass.to_string(),
            c.indeterminate.to_string(),
            c.fail.to_string(),
        ]
    };
    let rows = vec![
        row("prop1 (uniform comparison)", &summary.prop1),
        row("corollary1 (benefit/cost)", &summary.corollary1),
        row("lemma1 (price ordering)", &summary.lemma1),
        row("prop2 (aggregate abatement)", &summary.prop2),
        row("lemma2 (preferred bracket)", &summary.lemma2),
        row("prop3 (preferred ordering)", &summary.prop3),
        row("prop4 (dynamic comparison)", dynamic),
    ];
    println!(
        "{}",
        text_table(
            &["check", "pass", "indeterminate", "fail"].map(String::from),
            &rows
        )
    );
    println!(
        "static instances: {} ({} solver failures); dynamic instances: {} ({} solver failures)",
        summary.instances,
        summary.solver_failures,
        dynamic.pass + dynamic.fail + dynamic.indeterminate,
        dynamic_solver_failures,
    );
    let total = summary.total_checks() + dynamic.pass + dynamic.fail + dynamic.indeterminate;
    let indeterminate = summary.total_indeterminate() + dynamic.indeterminate;
    if total > 0 {
        println!(
            "indeterminate fraction: {:.4}",
            indeterminate as f64 / total as f64
        );
    }
}
