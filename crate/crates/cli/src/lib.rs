//! Library half of the `polydisc` command: input parsing, report documents,
//! verification suites and the three subcommands.

pub mod input;
pub mod report;
pub mod suites;

use std::path::Path;

use num_bigint::BigInt;
use polydisc::LatticePolytope;

pub use input::{parse_family_spec, read_polytope_file, PolytopeFile};
pub use report::{EhrhartDocument, ReportDocument};
pub use suites::{run_suite, VerifyReport, SUITES};

/// Largest bounding box scanned without `--force`.
pub const SCAN_LIMIT: u64 = 100_000_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::CrossCheck(_) => 2,
            CliError::Hypothesis(_) => 3,
        }
    }

    pub fn message(&self) -> String {
        self.to_string()
    }
}

impl From<polydisc::Error> for CliError {
    fn from(e: polydisc::Error) -> Self {
        use polydisc::Error as E;
        match e {
            E::ReciprocityMismatch { .. } | E::Consistency(_) => CliError::CrossCheck(e.to_string()),
            E::NotSimple => CliError::Hypothesis(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Text for stdout plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Where a polytope comes from: a file or a family spec.
#[derive(Debug, Clone)]
pub enum Source<'a> {
    File(&'a Path),
    Family(&'a str),
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub json: bool,
    pub max_dilation: Option<u64>,
    pub require_simple: bool,
    pub force: bool,
}

pub fn load(source: &Source) -> Result<LatticePolytope, CliError> {
    match source {
        Source::File(path) => read_polytope_file(path),
        Source::Family(spec) => parse_family_spec(spec),
    }
}

fn check_preconditions(p: &LatticePolytope, dilation: u64, opts: &Options) -> Result<(), CliError> {
    if opts.require_simple && !p.is_simple() {
        return Err(CliError::Hypothesis("polytope is not simple".into()));
    }
    let scan = p.scan_volume(dilation);
    if !opts.force && scan > BigInt::from(SCAN_LIMIT) {
        return Err(CliError::Usage(format!(
            "bounding box of {dilation}P has {scan} lattice points (limit {SCAN_LIMIT}); pass --force to scan anyway"
        )));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable document");
    out.push('\n');
    out
}

pub fn cmd_analyze(source: &Source, opts: &Options) -> Result<Outcome, CliError> {
    let p = load(source)?;
    let depth = opts.max_dilation.unwrap_or(0).max(p.dim() as u64 + 1);
    check_preconditions(&p, depth, opts)?;
    let doc = ReportDocument::build(&p, depth)?;
    let code = if doc.all_verdicts_pass() { 0 } else { 2 };
    let stdout = if opts.json { to_json(&doc) } else { doc.render() };
    Ok(Outcome { stdout, code })
}

pub fn cmd_ehrhart(source: &Source, opts: &Options) -> Result<Outcome, CliError> {
    let p = load(source)?;
    let depth = opts.max_dilation.unwrap_or(p.dim() as u64 + 1);
    check_preconditions(&p, depth, opts)?;
    let doc = EhrhartDocument::build(&p, depth)?;
    let stdout = if opts.json { to_json(&doc) } else { doc.render() };
    Ok(Outcome { stdout, code: 0 })
}

pub fn cmd_verify(suite: &str, seed: u64, json: bool) -> Result<Outcome, CliError> {
    let report = run_suite(suite, seed)?;
    let code = if report.all_passed { 0 } else { 2 };
    let stdout = if json { to_json(&report) } else { report.render() };
    Ok(Outcome { stdout, code })
}
