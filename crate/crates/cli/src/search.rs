//! The batch search harness: enumerate the semigroup tree to a genus bound,
//! classify every node, filter, and persist rows deterministically.
//!
//! Determinism contract: enumeration is the sorted genus-level walk from
//! [`semideg_core::tree`], classification is pure and mapped in parallel
//! with an order-preserving collect, and filtering/writing are sequential —
//! so output bytes depend only on the spec, never on the thread count.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;
use semideg_core::{tree, DegreeReport};

use crate::report::{report_for, tsv_row, TSV_HEADER};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum OutputFormat {
    /// Tab-separated table with a header line
    Tsv,
    /// One JSON report per line
    Jsonl,
}

/// Row filter applied after the type filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Predicate {
    /// Rows where bideg > cdeg — the conjecture's counterexamples.
    ViolationsOnly,
    /// Every enumerated row.
    All,
    /// bideg = 1.
    Goto,
    /// bideg = n(H).
    FarFlung,
    /// s₀ = n exactly.
    NAgl(u64),
}

impl FromStr for Predicate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "violations-only" => Ok(Predicate::ViolationsOnly),
            "all" => Ok(Predicate::All),
            "goto" => Ok(Predicate::Goto),
            "far-flung" => Ok(Predicate::FarFlung),
            other => other
                .strip_suffix("-agl")
                .and_then(|n| n.parse::<u64>().ok())
                .map(Predicate::NAgl)
                .ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown predicate {other:?}: use violations-only, all, goto, far-flung, or <n>-agl"
                    ))
                }),
        }
    }
}

impl Predicate {
    fn keeps(self, r: &DegreeReport) -> bool {
        match self {
            Predicate::ViolationsOnly => !r.comparison_holds,
            Predicate::All => true,
            Predicate::Goto => r.is_goto,
            Predicate::FarFlung => r.is_far_flung,
            Predicate::NAgl(n) => r.agl_level == n,
        }
    }
}

pub(crate) struct SearchSpec {
    pub max_genus: u64,
    pub type_min: Option<u64>,
    pub type_max: Option<u64>,
    pub predicate: Predicate,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub threads: Option<usize>,
}

pub(crate) fn run(spec: SearchSpec) -> Result<(), CliError> {
    let semigroups: Vec<_> = tree::genus_levels(spec.max_genus)
        .into_iter()
        .flatten()
        .collect();
    let visited = semigroups.len();

    let classify_all = || {
        semigroups
            .par_iter()
            .map(report_for)
            .collect::<Result<Vec<_>, _>>()
    };
    let reports = match spec.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Input(format!("thread pool: {e}")))?
            .install(classify_all),
        None => classify_all(),
    }?;

    let in_type_range = |r: &&DegreeReport| {
        spec.type_min.is_none_or(|lo| r.ring_type >= lo)
            && spec.type_max.is_none_or(|hi| r.ring_type <= hi)
    };
    let candidates: Vec<&DegreeReport> = reports.iter().filter(in_type_range).collect();
    let violations = candidates.iter().filter(|r| !r.comparison_holds).count();
    let rows: Vec<&DegreeReport> = candidates
        .into_iter()
        .filter(|r| spec.predicate.keeps(r))
        .collect();

    let mut sink: BufWriter<Box<dyn Write>> = BufWriter::new(match &spec.out {
        Some(path) => Box::new(File::create(path).map_err(|e| {
            CliError::Input(format!("cannot write {}: {e}", path.display()))
        })?),
        None => Box::new(std::io::stdout().lock()),
    });
    if spec.format == OutputFormat::Tsv {
        writeln!(sink, "{TSV_HEADER}")?;
    }
    for row in &rows {
        match spec.format {
            OutputFormat::Tsv => writeln!(sink, "{}", tsv_row(row))?,
            OutputFormat::Jsonl => writeln!(
                sink,
                "{}",
                serde_json::to_string(row).expect("report serialization cannot fail")
            )?,
        }
    }
    sink.flush()?;
    drop(sink);

    eprintln!(
        "totals: visited={visited} emitted={} violations={violations}",
        rows.len()
    );
    if violations > 0 {
        eprintln!("comparison conjecture violated by {violations} semigroup(s)");
    }
    Ok(())
}
