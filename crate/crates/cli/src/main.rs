//! `bgg`: describe BGG complexes on real projective space and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod verify;

use std::process::ExitCode;

use anyhow::Result;
use bgg_core::bruteforce::BuildOptions;
use bgg_core::report::{
    chain_dimension, emit_bgg_report, render_latex, render_text, to_json, ReportOptions,
};
use bgg_core::DynkinLabels;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "bgg",
    version,
    about = "BGG complexes on RP^n: tables, formulas and exact checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the cohomology table, E_1 positions and operator formulas.
    Describe(DescribeArgs),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BruteForce {
    /// Run when under the dimension cap, otherwise report as skipped.
    Auto,
    /// Refuse (exit 2) when over the dimension cap.
    Always,
    Never,
}

#[derive(Args, Debug, Clone)]
struct Limits {
    /// Largest tensor degree used to build explicit modules.
    #[arg(long, default_value_t = bgg_core::bruteforce::DEFAULT_DEGREE_BOUND, value_parser = positive_usize)]
    degree_bound: usize,
    /// Largest total cochain dimension attempted by brute force.
    #[arg(long, default_value_t = 5000, value_parser = positive_u64)]
    dim_cap: u64,
}

impl Limits {
    fn report_options(&self, brute_force: bool) -> ReportOptions {
        ReportOptions {
            brute_force,
            build: BuildOptions {
                degree_bound: self.degree_bound,
                full_generators: false,
            },
            dim_cap: self.dim_cap,
        }
    }
}

#[derive(Args, Debug)]
struct DescribeArgs {
    /// Rank: the group is SL(n+1).
    #[arg(long, value_parser = positive_usize)]
    n: usize,
    /// Comma-separated Dynkin labels a_1,..,a_n of the lowest weight -[a].
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    labels: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = BruteForce::Auto)]
    brute_force: BruteForce,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Closed-form table against brute force, Pieri and Euler checks on a grid.
    Kostant {
        #[arg(long)]
        max_sum: u32,
        #[arg(long, value_parser = positive_usize)]
        max_n: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Factorization identities in the Riccati algebra.
    Riccati {
        #[arg(long)]
        max_k: u32,
        /// Seed for the randomized associativity check.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Operator identities on the circle.
    Circle {
        #[arg(long)]
        max_k: u32,
        /// Lower end of the basis range cos^m, sin cos^m (default -(k+4)).
        #[arg(long, allow_hyphen_values = true)]
        m_min: Option<i64>,
        /// Upper end of the basis range (default k+4).
        #[arg(long, allow_hyphen_values = true)]
        m_max: Option<i64>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// d^2 = 0 and Betti numbers for an algebra file.
    Koszul {
        #[arg(long)]
        algebra: std::path::PathBuf,
        /// Expected Betti numbers, comma-separated; a mismatch is a failure.
        #[arg(long, value_delimiter = ',')]
        expect_betti: Option<Vec<usize>>,
        #[arg(long, default_value_t = 5000, value_parser = positive_u64)]
        dim_cap: u64,
    },
}

fn positive_usize(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u64(s: &str) -> std::result::Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// An error in the user's input; exits with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// Whether a command's checks all passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

fn describe(args: &DescribeArgs) -> Result<Outcome> {
    let d = DynkinLabels::new(args.n, args.labels.clone())
        .map_err(|e| InputError(format!("invalid labels: {e}")))?;
    if args.brute_force == BruteForce::Always && chain_dimension(&d) > args.limits.dim_cap {
        return Err(InputError(format!(
            "cochain dimension {} exceeds --dim-cap {}",
            chain_dimension(&d),
            args.limits.dim_cap
        ))
        .into());
    }
    let opts = args
        .limits
        .report_options(args.brute_force != BruteForce::Never);
    let report = emit_bgg_report(&d, &opts);
    match args.format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Json => println!("{}", to_json(&report)),
        Format::Latex => print!("{}", render_latex(&report)),
    }
    if args.brute_force == BruteForce::Always
        && report.checks.brute_force.status == bgg_core::report::CheckStatus::Skipped
    {
        return Err(InputError(format!(
            "brute force not possible: {}",
            report.checks.brute_force.detail.clone().unwrap_or_default()
        ))
        .into());
    }
    let c = &report.checks;
    let failed = [
        &c.dual_sum,
        &c.positions,
        &c.formulas,
        &c.brute_force,
        &c.euler,
    ]
    .iter()
    .any(|r| r.status == bgg_core::report::CheckStatus::Fail);
    Ok(if failed { Outcome::Fail } else { Outcome::Pass })
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Describe(args) => describe(args),
        Command::Verify(v) => match v {
            VerifyCommand::Kostant {
                max_sum,
                max_n,
                limits,
            } => verify::kostant(*max_n, *max_sum, &limits.report_options(true)),
            VerifyCommand::Riccati { max_k, seed } => Ok(verify::riccati(*max_k, *seed)),
            VerifyCommand::Circle {
                max_k,
                m_min,
                m_max,
                seed,
            } => verify::circle(*max_k, *m_min, *m_max, *seed),
            VerifyCommand::Koszul {
                algebra,
                expect_betti,
                dim_cap,
            } => verify::koszul(algebra, expect_betti.as_deref(), *dim_cap),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<InputError>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
