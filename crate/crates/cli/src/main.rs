//! `jacsplit`: halve points on hyperelliptic curves from the command line.
//!
//! Exit codes: 0 success, 1 an identity failed to hold (report still
//! printed), 2 usage or validation error (`{"error": code, "detail": ...}`).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::CliError;

#[derive(Parser)]
#[command(name = "jacsplit", version, about = "Halves of points in hyperelliptic Jacobians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all 2^(2g) halves of a point.
    Halve(HalveArgs),
    /// Apply a sign vector to halves and compare with adding the 2-torsion point.
    Torsor(TorsorArgs),
    /// Add a Weierstrass point by the closed form and by Cantor's algorithm.
    Translate(TranslateArgs),
    /// Run the verification sweep over a grid of primes and genera.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CurveArgs {
    /// Odd prime modulus.
    #[arg(long)]
    p: u64,
    /// Comma-separated distinct roots of f in F_p; the genus is (count - 1) / 2.
    #[arg(long, allow_hyphen_values = true)]
    roots: String,
}

#[derive(Args)]
struct HalveArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// `a,b` with `b` either `auto` (canonical root of f(a)) or `c0` / `c0:c1`.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Omit the Mumford pairs.
    #[arg(long)]
    profile_only: bool,
    /// Skip the doubling and degree self-checks.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct TorsorArgs {
    /// Sign vector as a bit string in root order, e.g. `01100`.
    #[arg(long)]
    phi: String,
    /// `halve` output; stdin when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Only this half of the document.
    #[arg(long)]
    index: Option<usize>,
}

#[derive(Args)]
struct TranslateArgs {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    roots: Option<String>,
    /// U coefficients, lowest degree first.
    #[arg(long = "U", alias = "u", allow_hyphen_values = true)]
    u: Option<String>,
    /// V coefficients, lowest degree first.
    #[arg(long = "V", alias = "v", allow_hyphen_values = true)]
    v: Option<String>,
    /// JSON with `curve`, `U`, `V`, or a `halve` document; stdin when no pair is given on the command line.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Which half of a `halve` document.
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// The root to add, `c0` or `c0:c1`.
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Args)]
struct VerifyArgs {
    /// `primes x genera`.
    #[arg(long, default_value = "5,7,11,13x1,2")]
    grid: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "off")]
    brute_force: Toggle,
    /// Root sets per (p, g).
    #[arg(long, default_value_t = 20)]
    max_curves: usize,
    /// Points per curve; every a in F_p when absent.
    #[arg(long)]
    max_points: Option<usize>,
    /// Only print the per-cell summary.
    #[arg(long)]
    summary: bool,
    /// Run cases one at a time.
    #[arg(long)]
    sequential: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("JACSPLIT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let detail = e.render().to_string();
            return fail(&CliError::Usage(detail.trim().to_string()));
        }
    };
    configure_threads();
    let result = match cli.command {
        Command::Halve(a) => commands::halve(a),
        Command::Torsor(a) => commands::torsor(a),
        Command::Translate(a) => commands::translate(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> ExitCode {
    let doc = json!({ "error": e.code(), "detail": e.to_string() });
    print!("{}", jacsplit_core::json::to_canonical_string(&doc));
    ExitCode::from(e.exit_code())
}
