//! Command-line front end for the semigroup-ring degree computations:
//! analyze single semigroups, run the Herzog-matrix oracle, search the
//! semigroup tree for comparison-conjecture data, and analyze the blowup
//! ring m : m.
//!
//! Exit codes: 0 = success (conjecture violations found by `search` are
//! results, not failures); 2 = unusable input or output path; 3 = symmetric
//! input where a Herzog matrix was requested; 1 = an internal cross-check
//! failed (two independent computations of the same invariant disagreed —
//! a bug, never a property of the input).

use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};
use semideg_core::Error;

mod report;
mod search;

use search::{OutputFormat, SearchSpec};

/// Columns of the TSV emitted by `search --format tsv`, in order.
const TSV_HELP: &str = "TSV columns:\n  generators|type|multiplicity|frobenius|genus|cdeg|bideg|rho|e1|s0|agl_level|goto|nearly_gor|far_flung|comparison_holds";

#[derive(Parser)]
#[command(
    name = "semideg",
    version,
    about = "Canonical and bi-canonical degrees of numerical semigroup rings",
    after_help = TSV_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one semigroup
    Analyze {
        /// Comma-separated generators, e.g. 5,7,9
        generators: String,
        /// Emit the report as a single JSON object
        #[arg(long)]
        json: bool,
    },
    /// Herzog matrix and closed-form degrees of a 3-generated semigroup
    Herzog {
        /// Comma-separated generators a,b,c
        generators: String,
        /// Emit matrix, degrees, and pattern verdicts as JSON
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all semigroups of genus ≤ a bound and emit matching rows
    Search {
        /// Genus bound for the tree enumeration
        #[arg(long)]
        max_genus: u64,
        /// Keep only rows of type ≥ this
        #[arg(long)]
        type_min: Option<u64>,
        /// Keep only rows of type ≤ this
        #[arg(long)]
        type_max: Option<u64>,
        /// violations-only | all | goto | far-flung | <n>-agl
        #[arg(long, default_value = "violations-only")]
        predicate: String,
        /// Output file; rows go to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Row format
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
        /// Worker threads for the classification stage (output is
        /// byte-identical for every choice)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Invariants of the blowup ring A = m : m
    Mm {
        /// Comma-separated generators of H
        generators: String,
        /// Emit the analysis as JSON
        #[arg(long)]
        json: bool,
    },
}

/// Everything that can stop a command, with its process exit code.
pub(crate) enum CliError {
    Core(Error),
    Input(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            // a failed cross-check or an undefined closed form means the
            // tool is wrong, not the input
            CliError::Core(Error::InternalMismatch(_)) | CliError::Core(Error::DegenerateSign) => 1,
            CliError::Core(Error::GorensteinCase) => 3,
            CliError::Core(_) | CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

/// Parses a comma-separated generator list.
pub(crate) fn parse_generators(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Input(format!("invalid generator {:?}", tok.trim())))
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { generators, json } => report::cmd_analyze(&generators, json),
        Command::Herzog { generators, json } => report::cmd_herzog(&generators, json),
        Command::Mm { generators, json } => report::cmd_mm(&generators, json),
        Command::Search {
            max_genus,
            type_min,
            type_max,
            predicate,
            out,
            format,
            threads,
        } => search::run(SearchSpec {
            max_genus,
            type_min,
            type_max,
            predicate: predicate.parse()?,
            out,
            format,
            threads,
        }),
    }
}

fn main() {
    // Die quietly on a closed pipe (`semideg search … | head`) instead of
    // panicking on the first write after the reader goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        exit(e.exit_code());
    }
}
