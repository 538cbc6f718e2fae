use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hyvkit::format::serialize_structure;
use hyvkit::suites::{
    generate_fixture, load_inputs, parse_grade, run_suite, CliError, FixtureKind, Suite,
    SuiteOptions,
};
use hyvkit_core::verifier::DEFAULT_WITNESS_CAP;
use hyvkit_core::Q;

#[derive(Clone, Copy, Debug)]
enum Action {
    Run(Suite),
    Generate,
}

fn parse_action(s: &str) -> Result<Action, String> {
    if s == "generate" {
        return Ok(Action::Generate);
    }
    Suite::from_str(s, false).map(Action::Run).map_err(|_| {
        let names: Vec<String> = Suite::value_variants()
            .iter()
            .filter_map(|v| v.to_possible_value())
            .map(|p| p.get_name().to_string())
            .collect();
        format!(
            "unknown suite '{s}'; expected generate or one of: {}",
            names.join(", ")
        )
    })
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Checks H_v-structures and their fuzzy and intuitionistic fuzzy
/// submodules. Exit status: 0 all pass, 1 a verdict failed, 2 input error,
/// 3 resource bound exceeded.
#[derive(Debug, Parser)]
#[command(name = "hyvkit", version)]
struct Args {
    /// Suite to run, or `generate` to print a seeded fixture.
    #[arg(value_parser = parse_action)]
    action: Action,

    /// Structure files, consumed by kind in the order given.
    #[arg(long, num_args = 1..)]
    input: Vec<PathBuf>,

    /// Grade grid spacing for sweeps and random grades.
    #[arg(long, default_value = "1/4", value_parser = parse_grade)]
    grid_step: Q,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Violations recorded per check.
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    witness_cap: usize,

    /// Require one witness pair to serve both IF reproduction conditions.
    #[arg(long)]
    strict_witness_pair: bool,

    /// Spread checks across threads; reports are unchanged.
    #[arg(long)]
    parallel: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Fixture kind for `generate`.
    #[arg(long, value_enum)]
    kind: Option<FixtureKind>,

    /// Carrier size for `generate`.
    #[arg(long)]
    size: Option<usize>,
}

fn run(args: Args) -> Result<(String, bool), CliError> {
    match args.action {
        Action::Generate => {
            let kind = args
                .kind
                .ok_or_else(|| CliError::Signature("generate needs --kind".into()))?;
            let size = args
                .size
                .ok_or_else(|| CliError::Signature("generate needs --size".into()))?;
            let s = generate_fixture(kind, size, args.seed, args.grid_step)?;
            Ok((serialize_structure(&s) + "\n", true))
        }
        Action::Run(suite) => {
            let inputs = load_inputs(&args.input)?;
            let opts = SuiteOptions {
                grid_step: args.grid_step,
                seed: args.seed,
                witness_cap: args.witness_cap,
                strict_witness_pair: args.strict_witness_pair,
                parallel: args.parallel,
            };
            let report = run_suite(suite, &inputs, &opts)?;
            let out = match args.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            Ok((out, report.passed))
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok((out, passed)) => {
            print!("{out}");
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("hyvkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
