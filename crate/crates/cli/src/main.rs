//! `cwfkit`: check, convert, transfer and enumerate finite models of
//! dependent type theory.
//!
//! Exit status: 0 valid, 1 invalid input or failed hypothesis, 2 malformed
//! input, 3 internal inconsistency.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Direction;

#[derive(Parser)]
#[command(name = "cwfkit", version, about = "Finite categories with families and relative universes")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document against the laws of its kind.
    Check {
        /// category, presheaf, obj-ext, term, qq, cwf, split-typecat,
        /// rep-map, rel-universe, square or skeleton.
        kind: String,
        file: PathBuf,
    },
    /// Convert between equivalent presentations.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        input: PathBuf,
        output: PathBuf,
        /// Convert back and report whether the input is recovered exactly
        /// or up to isomorphism.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Move a relative universe along a square of functors.
    Transfer {
        square: PathBuf,
        universe: PathBuf,
        output: PathBuf,
    },
    /// Compute a skeleton with its equivalence data.
    Skeletonize { input: PathBuf, output: PathBuf },
    /// Write a catalog category. `dag`, `preorder` and `monoid` read their
    /// parameters from a JSON file; `chain` and `discrete` take a size.
    Catalog {
        name: String,
        /// Parameters, then the output path.
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Run the exhaustive acceptance suite.
    Suite {
        #[arg(long, default_value_t = 2)]
        bounds: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Check { kind, file } => commands::check(kind, file),
        Command::Convert {
            direction,
            input,
            output,
            roundtrip,
        } => commands::convert(*direction, input, output, *roundtrip),
        Command::Transfer {
            square,
            universe,
            output,
        } => commands::transfer(square, universe, output),
        Command::Skeletonize { input, output } => commands::skeletonize_cmd(input, output),
        Command::Catalog { name, args } => commands::catalog_cmd(name, args),
        Command::Suite { bounds } => {
            let suite = cwfkit_suite::run_all(*bounds);
            print!("{}", if cli.json { suite.to_json() } else { suite.to_text() });
            return ExitCode::from(if suite.passed { 0 } else { 1 });
        }
    };
    print!("{}", report.render(cli.json));
    ExitCode::from(report.exit_code as u8)
}
