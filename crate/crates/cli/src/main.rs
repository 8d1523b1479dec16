use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use torelli_cli::commands::{self, CliError, Report};

#[derive(Parser)]
#[command(name = "torelli", version, about = "Torelli membership and rank for multitwists on reduction systems")]
struct Cli {
    /// Input and output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the type (a, b with class index, or c) of every edge.
    Classify { file: String },
    /// Decide whether the edge weights define a Torelli multitwist.
    CheckTorelli { file: String },
    /// Rank of the Torelli multitwist group of the graph.
    Rank { file: String },
    /// Write a Torelli multitwist as separating twists and bounding pair maps.
    Decompose { file: String },
    /// Decide whether the multitwist acts trivially on homology mod m.
    CheckMod { m: BigInt, file: String },
    /// Compare the graph criterion with the action on homology.
    VerifyHomology { file: String },
    /// Report the vertex and Omega bounds on the rank.
    Bounds { file: String },
    /// Emit a model of genus g attaining both bounds.
    GenExtremal { g: u64 },
    /// Emit a random valid model of genus g.
    GenRandom { g: u64, seed: u64 },
    /// Show nonzero transvection exponents whose product is the identity.
    ConjectureDemo,
}

fn read_input(path: &str) -> Result<String, String> {
    let mut text = String::new();
    let result = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map(|_| text).map_err(|e| format!("cannot read {path}: {e}"))
}

fn run(cli: Cli) -> Result<Report, String> {
    let Format::Text = cli.format;
    let with = |path: &str, f: fn(&str) -> Result<Report, CliError>| -> Result<Report, String> {
        f(&read_input(path)?).map_err(|e| e.to_string())
    };
    match cli.command {
        Command::Classify { file } => with(&file, commands::classify_cmd),
        Command::CheckTorelli { file } => with(&file, commands::check_torelli),
        Command::Rank { file } => with(&file, commands::rank),
        Command::Decompose { file } => with(&file, commands::decompose_cmd),
        Command::CheckMod { m, file } => {
            let text = read_input(&file)?;
            commands::check_mod(&m, &text).map_err(|e| e.to_string())
        }
        Command::VerifyHomology { file } => with(&file, commands::verify_homology),
        Command::Bounds { file } => with(&file, commands::bounds),
        Command::GenExtremal { g } => commands::extremal(g).map_err(|e| e.to_string()),
        Command::GenRandom { g, seed } => commands::random(g, seed).map_err(|e| e.to_string()),
        Command::ConjectureDemo => Ok(commands::conjecture_demo()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { CliError::EXIT_CODE } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(report.stdout.as_bytes());
            let _ = out.flush();
            ExitCode::from(report.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(CliError::EXIT_CODE)
        }
    }
}
