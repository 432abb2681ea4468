//! Command-line front end: table reproduction, regime solving, proposition
//! sweeps, IAM runs and comparisons, welfare accounting, and CSV emission.

mod economy;
mod iam_cmd;
mod report;
mod solve;
mod sweep;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Exit codes: 0 success, 2 parse/configuration error (clap uses 2 as
/// well), 3 solver failure, 4 proposition failure.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Solver(String),
    Propositions { failures: usize },
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Propositions { .. } => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Solver(m) => write!(f, "solver failure: {m}"),
            CliError::Propositions { failures } => {
                write!(f, "{failures} proposition check(s) failed")
            }
        }
    }
}

pub type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "carbonweights",
    version,
    about = "Optimal carbon prices under regional welfare weights",
    propagate_version = true
)]
struct Cli {
    /// Directory for CSV artifacts.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Base seed for anything randomized.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ScenarioArgs {
    /// Scenario file (TOML); the bundled four-region calibration when
    /// omitted.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// Dotted-key overrides, e.g. --set region.low_income.gL=0.025
    /// (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Evaluation budget per optimizer restart.
    #[arg(long, default_value_t = 40_000)]
    max_evals: usize,
    /// Optimizer restarts (first slots go to warm starts).
    #[arg(long, default_value_t = 2)]
    restarts: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the static utilitarian-to-Negishi price ratio table.
    Table1,
    /// Reproduce the dynamic (two-period) price ratio table.
    Table2,
    /// Solve all six static regimes on one economy.
    StaticSolve(solve::StaticSolveArgs),
    /// Solve the two dynamic regimes on one economy.
    DynamicSolve(solve::DynamicSolveArgs),
    /// Randomized verification sweep of every proposition.
    PropsSweep(sweep::SweepArgs),
    /// Optimize one regime on a scenario and export its trajectory.
    IamRun(iam_cmd::IamRunArgs),
    /// Optimize several regimes and compare welfare, prices and emissions.
    IamCompare(iam_cmd::IamCompareArgs),
    /// Each region's preferred uniform carbon price path.
    PreferredPrices(iam_cmd::PreferredArgs),
    /// Welfare-equivalent consumption changes between two regimes.
    Wecc(iam_cmd::WeccArgs),
    /// Marginal-damage pulse experiment.
    Pulse(iam_cmd::PulseArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = report::OutputContext::new(&cli.out);
    let outcome = match &cli.command {
        Command::Table1 => tables::table1(&ctx),
        Command::Table2 => tables::table2(&ctx),
        Command::StaticSolve(args) => solve::static_solve(&ctx, args, cli.seed),
        Command::DynamicSolve(args) => solve::dynamic_solve(&ctx, args),
        Command::PropsSweep(args) => sweep::props_sweep(&ctx, args, cli.seed),
        Command::IamRun(args) => iam_cmd::iam_run(&ctx, args, cli.seed),
        Command::IamCompare(args) => iam_cmd::iam_compare(&ctx, args, cli.seed),
        Command::PreferredPrices(args) => iam_cmd::preferred_prices(&ctx, args, cli.seed),
        Command::Wecc(args) => iam_cmd::wecc(&ctx, args, cli.seed),
        Command::Pulse(args) => iam_cmd::pulse(&ctx, args, cli.seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("carbonweights: {e}");
            ExitCode::from(e.code())
        }
    }
}
