mod report;
mod suites;

use std::io::{self, Write};
use std::process::ExitCode;

use baxter_inv::{Bounds, Error, ParameterProfile};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::report::{Format, Report};
use crate::suites::Method;

/// Exact counts and exhaustive checks for involutive Baxter permutations.
///
/// Enumeration limits default to built-in values and can be raised with
/// IBAX_MAX_PERM_SIZE, IBAX_MAX_WALK_STEPS and IBAX_MAX_PATH_N.
#[derive(Debug, Parser)]
#[command(name = "ibax", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, env = "IBAX_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute exact counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Run an exhaustive verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// Involutive Baxter permutations with a given parameter profile.
    Formula(ProfileArgs),
    /// Fixed-point-free involutive Baxter permutations of size 2n.
    Fpf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Brute-force census of all involutive Baxter permutations of one size.
    Census {
        #[arg(long)]
        size: usize,
    },
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    r: u32,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Census against walk tuples and their determinant count.
    Bijection {
        #[arg(long, default_value_t = 8)]
        max_size: u32,
    },
    /// Census against the multivariate formula.
    Formula {
        #[arg(long, default_value_t = 10)]
        max_size: u32,
    },
    /// Diagonal path classes and the swap involution.
    Involution {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Sink-code encode/decode round trips.
    Sinkcode {
        #[arg(long, default_value_t = 8)]
        max_i: usize,
    },
    /// Determinant counts against enumerated disjoint triples.
    Lgv {
        #[arg(long, default_value_t = 18)]
        max_steps: usize,
    },
    /// b = u - s, the profile sum and integrality of the formulas.
    Identities {
        #[arg(long, default_value_t = 40)]
        max_n: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Count(CountCommand::Formula(_)) => "count formula",
            Command::Count(CountCommand::Fpf { .. }) => "count fpf",
            Command::Count(CountCommand::Census { .. }) => "count census",
            Command::Verify(VerifyCommand::Bijection { .. }) => "verify bijection",
            Command::Verify(VerifyCommand::Formula { .. }) => "verify formula",
            Command::Verify(VerifyCommand::Involution { .. }) => "verify involution",
            Command::Verify(VerifyCommand::Sinkcode { .. }) => "verify sinkcode",
            Command::Verify(VerifyCommand::Lgv { .. }) => "verify lgv",
            Command::Verify(VerifyCommand::Identities { .. }) => "verify identities",
        }
    }
}

fn run(command: &Command, bounds: &Bounds) -> baxter_inv::Result<Report> {
    match command {
        Command::Count(c) => match c {
            CountCommand::Formula(a) => {
                suites::count_formula(ParameterProfile::new(a.n, a.k, a.p, a.r))
            }
            CountCommand::Fpf { n, method } => suites::count_fpf(*n, *method, bounds),
            CountCommand::Census { size } => suites::count_census(*size, bounds),
        },
        Command::Verify(v) => match v {
            VerifyCommand::Bijection { max_size } => suites::verify_bijection(*max_size, bounds),
            VerifyCommand::Formula { max_size } => suites::verify_formula(*max_size, bounds),
            VerifyCommand::Involution { max_n } => suites::verify_involution(*max_n, bounds),
            VerifyCommand::Sinkcode { max_i } => suites::verify_sinkcode(*max_i),
            VerifyCommand::Lgv { max_steps } => suites::verify_lgv(*max_steps, bounds),
            VerifyCommand::Identities { max_n } => suites::verify_identities(*max_n),
        },
    }
}

fn print(text: &str) {
    let mut out = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }

    let bounds = match Bounds::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let verifying = matches!(cli.command, Command::Verify(_));
    let report = match run(&cli.command, &bounds) {
        Ok(r) => r,
        Err(e) => {
            let code = match &e {
                Error::Capacity { .. } => 3,
                Error::Inexact { .. } => 1,
                Error::Contract(_) if verifying => 1,
                _ => 2,
            };
            if code == 1 {
                // An internal inconsistency is reported like any other mismatch.
                let mut r = Report::new(cli.command.name(), vec![]);
                r.fail(json!({"error": e.to_string()}));
                emit(&r, cli.format);
            } else {
                eprintln!("error: {e}");
            }
            return ExitCode::from(code);
        }
    };

    emit(&report, cli.format);
    if report.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit(report: &Report, format: Format) {
    print(&report.render(format));
    if format != Format::Json {
        if let Some(c) = &report.counterexample {
            eprintln!("counterexample: {c}");
        }
    }
}
