// SPDX-License-Identifier: MIT OR Apache-2.0

#![forbid(unsafe_code)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fvlocal::SuiteConfig;
use fvlocal_cli::{parse_params, CliError, Result};

/// Local times, occupation measures and identity checks for piecewise
/// polynomial càdlàg paths.
#[derive(Parser)]
#[command(name = "fvlocal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a path document for a named fixture or a seeded random path.
    Generate(GenerateArgs),
    /// Run every identity check; exit 1 if any fails.
    Verify {
        file: PathBuf,
        /// Multiplier on the floating-point tolerances.
        #[arg(long = "tol", default_value_t = 1.0)]
        tol: f64,
        /// Number of sampled levels for the level identities.
        #[arg(long, default_value_t = 50)]
        levels: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the local-time profile at horizon `t` as CSV.
    Profile {
        file: PathBuf,
        #[arg(short = 't', allow_negative_numbers = true)]
        t: f64,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Print the occupation masses of `[from, to]` at horizon `t`.
    Occupation {
        file: PathBuf,
        #[arg(short = 't', allow_negative_numbers = true)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, requires = "seed")]
    random: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated `key=value` parameters.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate(args) => {
            let params = parse_params(&args.params)?;
            let doc = match (args.source.fixture, args.seed) {
                (Some(name), None) => fvlocal_cli::generate_fixture(&name, &params)?,
                (Some(_), Some(_)) => return Err(CliError::Usage("--seed applies to --random only".into())),
                (None, Some(seed)) => fvlocal_cli::generate_random(seed, &params)?,
                (None, None) => return Err(CliError::Usage("--random requires --seed".into())),
            };
            doc.to_path()?;
            doc.write(&args.output)?;
            Ok(0)
        }
        Command::Verify {
            file,
            tol,
            levels,
            report,
        } => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let (doc, path) = fvlocal_cli::load(&file)?;
            let config = SuiteConfig {
                tolerance_scale: tol,
                levels,
                ..SuiteConfig::default()
            };
            let rep = fvlocal_cli::verify(&doc, &path, &config)?;
            if let Some(out) = report {
                rep.write(&out)?;
            }
            print!("{}", fvlocal_cli::summary_text(&rep));
            Ok(rep.exit_code())
        }
        Command::Profile { file, t, csv } => {
            let (_, path) = fvlocal_cli::load(&file)?;
            fvlocal_cli::profile_csv(&path, t, &csv)?;
            Ok(0)
        }
        Command::Occupation { file, t, from, to } => {
            let (_, path) = fvlocal_cli::load(&file)?;
            let m = fvlocal_cli::occupation(&path, t, from, to)?;
            println!("theta={} vartheta={}", m.theta, m.vartheta);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
