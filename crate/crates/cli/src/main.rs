//! `omlkit`: validate, analyze and decompose finite orthomodular lattices,
//! and query the block-matrix model.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 axiom or
//! validation failure, 3 violated precondition.

mod check;
mod commands;
mod dot;
mod matmodel;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use omlkit::Error;

#[derive(Parser)]
#[command(name = "omlkit", version, about = "Finite orthomodular lattices and their type decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the OML axioms and print a validation report.
    Validate {
        /// Lattice file (.json) or catalog token such as `mo:2` or `product(mo:2,boolean:1)`.
        input: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Center, central covers, projectivity classes and class table.
    Analyze {
        input: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Fundamental and type I/II/III decompositions for a pair Q ⊆ K.
    Decompose {
        input: String,
        /// zero, center, a class name (B, M, M0, T, abelian, modular,
        /// locally-modular, complete) or a JSON array of element labels.
        #[arg(long = "Q", value_name = "SET")]
        q: Option<String>,
        #[arg(long = "K", value_name = "SET")]
        k: Option<String>,
        /// `jw` selects Q = B and K = M, also the default when no sets are given.
        #[arg(long, value_name = "NAME")]
        preset: Option<String>,
        /// Use Q and K as given instead of replacing them by their TD closures.
        #[arg(long)]
        no_close: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Hasse diagram in Graphviz DOT, orthocomplement pairs sharing a color.
    ExportDot { input: String },
    /// Lattice file JSON (labels, covers, orthocomplement).
    ExportJson { input: String },
    /// Seeded randomized property sweep over lattices and the matrix model.
    Check {
        /// Lattices to sweep; defaults to the built-in corpus.
        inputs: Vec<String>,
        /// Overrides the OML_SEED environment variable.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Evaluate one block-matrix request read from a JSON file (`-` for stdin).
    Matmodel {
        request: String,
        #[arg(long)]
        pretty: bool,
    },
}

/// What a command produced: text for stdout and the exit code to use.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    pub fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Structure(_) | Error::Input(_) | Error::Parse(_) | Error::Shape(_) => 1,
        Error::Axioms(_) | Error::Inconsistent(_) => 2,
        Error::Precondition(_) => 3,
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Validate { input, pretty } => commands::validate(&input, pretty),
        Command::Analyze { input, pretty } => commands::analyze(&input, pretty),
        Command::Decompose { input, q, k, preset, no_close, pretty } => {
            commands::decompose(&input, q.as_deref(), k.as_deref(), preset.as_deref(), no_close, pretty)
        }
        Command::ExportDot { input } => commands::export_dot(&input),
        Command::ExportJson { input } => commands::export_json(&input),
        Command::Check { inputs, seed, samples } => check::run(&inputs, seed, samples),
        Command::Matmodel { request, pretty } => matmodel::run(&request, pretty),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text.trim_end());
            ExitCode::from(out.code)
        }
        Err(e) => {
            if let Error::Axioms(report) = &e {
                let json = serde_json::to_string_pretty(report).unwrap_or_default();
                println!("{json}");
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
