// SPDX-License-Identifier: Apache-2.0

//! `sombor`: Sombor matrices, characteristic polynomials, energies and the
//! cubic order-10 corpus from the command line.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use input::{FamilyName, Input};

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Sombor matrices, characteristic polynomials and energies of graphs")]
struct Cli {
    /// Emit JSON (one object per graph, one per line) instead of tables
    #[arg(long, global = true)]
    json: bool,
    /// Use ASCII output: "l^k" for powers of lambda and "sqrt(2)" for the radical
    #[arg(long, global = true)]
    ascii: bool,
    /// Add a "timestamp" field (seconds since the Unix epoch) to JSON output
    #[arg(long, global = true)]
    timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Sombor matrix
    Matrix(Input),
    /// Characteristic polynomial; closed forms for named families, generic engine otherwise
    Charpoly {
        #[command(flatten)]
        input: Input,
        /// Always use the generic engine, even for named families
        #[arg(long)]
        generic: bool,
    },
    /// Eigenvalues, energy and residual
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Jacobi convergence tolerance (relative off-diagonal norm)
        #[arg(long, default_value_t = sombor::spectra::DEFAULT_TOL)]
        tol: f64,
    },
    /// Sombor energy, exact when the spectrum allows
    Energy {
        #[command(flatten)]
        input: Input,
        /// Jacobi convergence tolerance (relative off-diagonal norm)
        #[arg(long, default_value_t = sombor::spectra::DEFAULT_TOL)]
        tol: f64,
    },
    /// McClelland and Koolen-Moulton upper bounds next to the energy
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Jacobi convergence tolerance (relative off-diagonal norm)
        #[arg(long, default_value_t = sombor::spectra::DEFAULT_TOL)]
        tol: f64,
    },
    /// Permanent of the adjacency matrix (Ryser)
    Permanent(Input),
    /// All k-regular graphs on n vertices up to isomorphism, as graph6 lines
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Keep connected graphs only
        #[arg(long)]
        connected: bool,
        /// Write graph6 lines here and the certificate sidecar to <OUT>.json
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Reconcile generated graphs with the embedded cubic order-10 tables
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Group graphs by Sombor energy
    Classes {
        #[command(flatten)]
        input: Input,
        /// Use the generated cubic order-10 corpus, labeled by the tables
        #[arg(long, conflicts_with_all = ["graph6", "file", "family"])]
        corpus: bool,
        /// Energies within this distance are linked
        #[arg(long, default_value_t = sombor::analysis::DEFAULT_CLASS_TOL)]
        tol: f64,
    },
    /// Integer-energy search
    Conjecture {
        #[command(subcommand)]
        action: ConjectureAction,
    },
    /// Closed-form characteristic polynomial and energy of a named family
    Family {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    /// Generate k-regular graphs and match them against the fixtures
    Verify {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Allowed |computed - table| energy difference
        #[arg(long, default_value_t = sombor::analysis::TABLE_ENERGY_TOL)]
        energy_tol: f64,
        /// Rows allowed to differ from their fixture polynomial before failing
        #[arg(long, default_value_t = 0)]
        max_poly_mismatches: usize,
        /// Fixture JSON to use instead of the embedded tables
        #[arg(long)]
        fixtures: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum ConjectureAction {
    /// Report graphs whose energy is within --tol of an integer
    Scan {
        #[command(flatten)]
        input: Input,
        /// Read graph6 lines from stdin instead of generating graphs
        #[arg(long, conflicts_with_all = ["graph6", "file", "family"])]
        stdin: bool,
        /// Scan every graph with at least one edge on up to this many vertices
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Only connected graphs
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = sombor::analysis::DEFAULT_SCAN_TOL)]
        tol: f64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input or parameters; exit code 2.
    Input(String),
    /// The computation ran but disagreed with what was claimed; exit code 3.
    Mismatch(String),
    /// A numerical routine failed; exit code 1.
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Mismatch(m) => write!(f, "verification failed: {m}"),
            CliError::Failure(m) => write!(f, "computation failed: {m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::Output { json: cli.json, ascii: cli.ascii, timestamps: cli.timestamps };
    let result = match cli.command {
        Command::Matrix(input) => commands::matrix(&out, &input),
        Command::Charpoly { input, generic } => commands::charpoly(&out, &input, generic),
        Command::Spectrum { input, tol } => commands::spectrum(&out, &input, tol, true),
        Command::Energy { input, tol } => commands::spectrum(&out, &input, tol, false),
        Command::Bounds { input, tol } => commands::bounds(&out, &input, tol),
        Command::Permanent(input) => commands::permanent(&out, &input),
        Command::Generate { n, k, connected, out: path } => commands::generate(&out, n, k, connected, path.as_deref()),
        Command::Corpus { action: CorpusAction::Verify { n, k, energy_tol, max_poly_mismatches, fixtures } } => {
            commands::corpus_verify(&out, n, k, energy_tol, max_poly_mismatches, fixtures.as_deref())
        }
        Command::Classes { input, corpus, tol } => commands::classes(&out, &input, corpus, tol),
        Command::Conjecture { action: ConjectureAction::Scan { input, stdin, max_n, connected, tol } } => {
            commands::conjecture_scan(&out, &input, stdin, max_n, connected, tol)
        }
        Command::Family { family, n, m } => commands::family(&out, family, n, m),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
