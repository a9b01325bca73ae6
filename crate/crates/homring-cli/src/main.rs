use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use homring_cli::commands;
use homring_cli::document::{JsonDoc, OutputFormat};
use homring_cli::range::RangeSpec;
use homring_cli::{CliError, LambdaSetting};

/// Exact homogeneous weights, Möbius and Euler phi functions on finite
/// principal ideal rings.
#[derive(Parser)]
#[command(name = "homring", version)]
struct Cli {
    /// Substitute a nonnegative rational P/Q for λ; weights print as
    /// plain rationals instead of multiples of λ
    #[arg(long, global = true, value_name = "P/Q", allow_hyphen_values = true)]
    lambda: Option<String>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Weight table of Z_n, one row per element
    Table { n: u64 },
    /// Symbolic weight grid of a product of chain rings, e.g. 2^3x3^1
    Ring { spec: String },
    /// Möbius function of m, with φ and the derived weight
    Mobius { m: u64 },
    /// Euler phi function of m, with μ and the derived weight
    Phi { m: u64 },
    /// Re-derive and cross-check weight tables for a range of moduli,
    /// e.g. 2..100 or a single n
    Verify { range: String },
    /// Homogeneous weight enumerator of the code generated by a matrix
    /// file (header `n k len`, then k rows)
    Enumerator { file: PathBuf },
}

fn run(cli: &Cli) -> Result<(JsonDoc, bool), CliError> {
    let lambda = LambdaSetting::parse(cli.lambda.as_deref())?;
    match &cli.command {
        Command::Table { n } => Ok((commands::cmd_table(*n, &lambda)?, true)),
        Command::Ring { spec } => Ok((commands::cmd_ring(spec, &lambda)?, true)),
        Command::Mobius { m } => Ok((commands::cmd_mobius(*m, &lambda)?, true)),
        Command::Phi { m } => Ok((commands::cmd_phi(*m, &lambda)?, true)),
        Command::Verify { range } => {
            let range: RangeSpec = range.parse().map_err(CliError::Usage)?;
            commands::cmd_verify(range, &lambda)
        }
        Command::Enumerator { file } => Ok((commands::cmd_enumerator(file, &lambda)?, true)),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep exit code 2 free for verification failures: help and
            // version exit 0, everything else is a usage error
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let format = match cli.format {
        FormatArg::Table => OutputFormat::Table,
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    };
    match run(&cli) {
        Ok((doc, pass)) => {
            print!("{}", doc.render(format));
            if !pass {
                std::process::exit(CliError::Verification.exit_code());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
