//! `reducibility`: compute and cross-check reducibility indices from the command line.

mod commands;
mod render;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use reducibility_core::verify::Scope;
use reducibility_core::Error;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "reducibility",
    version,
    about = "Reducibility indices of monomial quotients, hypersurfaces and finite abelian groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Include wall-clock timing in the report (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible decomposition, associated primes and Bass numbers of R/I.
    Decompose {
        /// Ideal text, `@path` to read a file, or `-` for stdin.
        input: String,
    },
    /// Flat base change: `extend:k`, `invert:y,z`, or `field:GF(p)->GF(q)` for a polynomial.
    Basechange {
        /// Ideal text or `f: ... over GF(p)`; `@path` or `-` also accepted.
        input: String,
        descriptor: String,
    },
    /// The Matlis dual of a finite-length R/I as a staircase.
    Dual { input: String },
    /// Attached primes, secondary representation and ir' of a finite abelian group.
    Abelian {
        /// Group text such as `Z/4 + Z/2 + Z/9`.
        input: String,
        /// Largest order for brute-force checks (at most 64).
        #[arg(long, default_value_t = 64)]
        max_order: u64,
    },
    /// Run the bundled verification suites.
    Selftest {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest group order in the abelian sweep (at most 64).
        #[arg(long, default_value_t = 64)]
        max_order: u64,
    },
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|_| {
        format!("unknown scope {s:?}; expected all, monomial, basechange, univariate, duality or abelian")
    })
}

fn read_input(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(text)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

/// Process exit codes.
const VERIFICATION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const SIZE_CAP: u8 = 3;

fn exit_for(error: &Error) -> u8 {
    if error.is_size_cap() {
        SIZE_CAP
    } else {
        INPUT_ERROR
    }
}

fn dispatch(command: &Command) -> Result<Value, commands::Failure> {
    match command {
        Command::Decompose { input } => commands::decompose(&read_input(input)?),
        Command::Basechange { input, descriptor } => {
            commands::basechange(&read_input(input)?, descriptor)
        }
        Command::Dual { input } => commands::dual(&read_input(input)?),
        Command::Abelian { input, max_order } => commands::abelian(&read_input(input)?, *max_order),
        Command::Selftest {
            scope,
            seed,
            max_order,
        } => commands::selftest(*scope, *seed, *max_order),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match dispatch(&cli.command) {
        Ok(report) => report,
        Err(commands::Failure::Input(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(INPUT_ERROR);
        }
        Err(commands::Failure::Core(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    if cli.timing {
        report["timing_ms"] = Value::from(start.elapsed().as_secs_f64() * 1000.0);
    }
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("reports are plain JSON")
        ),
        Format::Human => print!("{}", render::human(&report)),
    }
    if report["passed"].as_bool() == Some(false) {
        ExitCode::from(VERIFICATION_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
