//! The `actlab` command line: `analyze`, `verify`, `sweep`, `enumerate`.
//!
//! Machine-readable output goes to stdout (or `--output`), logs to stderr.
//! Flags override `ACTLAB_*` environment variables, which override defaults.
//!
//! Exit codes: 0 success, 1 a conclusion failed, 2 usage, 3 I/O, 4 JSON
//! parse, 5 sweep budget exhausted, 10–16 monoid validation, 20–26 act
//! validation, 30 algebra error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::act::{FiniteAct, FreenessVerdict, ProjectivityVerdict};
use crate::enumerate::{
    enumerate_acts, enumerate_acts_naive, enumerate_monoids, enumerate_monoids_naive, run_sweep,
    SweepConfig, SweepError, SweepReport,
};
use crate::error::{ActError, AlgebraError, MonoidError};
use crate::io::{load_act, load_monoid, ActFile, LoadError};
use crate::monoid::FiniteMonoid;
use crate::set::{ActSubset, ElementSet};
use crate::verify::{verify_on_act, Conclusion, StatementId, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "actlab", version, about = "Finite monoids, right acts, and Nakayama-type checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural report for a monoid and optionally an act over it.
    Analyze {
        monoid: PathBuf,
        act: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Run verifiers. Without an act file, act statements use S acting on
    /// itself.
    Verify {
        /// A statement id or `all`.
        #[arg(long, default_value = "all")]
        statement: String,
        monoid: PathBuf,
        act: Option<PathBuf>,
        /// Largest act enumerated by `projective-free`.
        #[arg(long, env = "ACTLAB_MAX_ACT_SIZE", default_value_t = 4)]
        max_act_size: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Run verifiers over every enumerated monoid and act.
    Sweep {
        #[arg(long, env = "ACTLAB_MAX_MONOID_ORDER", default_value_t = 4)]
        max_monoid_order: usize,
        #[arg(long, env = "ACTLAB_MAX_ACT_SIZE", default_value_t = 4)]
        max_act_size: usize,
        /// Comma-separated statement ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        statements: Vec<String>,
        #[arg(long, env = "ACTLAB_WORKERS")]
        workers: Option<usize>,
        #[arg(long)]
        require_nonvacuous: Option<usize>,
        #[arg(long)]
        max_instances: Option<usize>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Write every monoid of an order, or every act of a size over a monoid.
    Enumerate {
        kind: Kind,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        /// Monoid file, required for `acts`.
        #[arg(long)]
        monoid: Option<PathBuf>,
        /// Directory for one JSON file per structure; stdout otherwise.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Use the generate-then-filter strategy.
        #[arg(long)]
        naive: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Monoids,
    Acts,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Sweep(#[from] SweepError),
}

fn monoid_code(e: &MonoidError) -> i32 {
    match e {
        MonoidError::Empty => 10,
        MonoidError::TooLarge { .. } => 11,
        MonoidError::OrderMismatch { .. } => 12,
        MonoidError::NotSquare { .. } => 13,
        MonoidError::OutOfRangeEntry { .. } => 14,
        MonoidError::NotAssociative { .. } => 15,
        MonoidError::NoIdentity { .. } => 16,
    }
}

fn act_code(e: &ActError) -> i32 {
    match e {
        ActError::EmptyCarrier => 20,
        ActError::TooLarge { .. } => 21,
        ActError::SizeMismatch { .. } => 22,
        ActError::ShapeMismatch { .. } => 23,
        ActError::OutOfRangeEntry { .. } => 24,
        ActError::UnitLawViolation { .. } => 25,
        ActError::CompatibilityViolation { .. } => 26,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Load(LoadError::Io { .. }) => 3,
            CliError::Load(LoadError::Parse(_)) => 4,
            CliError::Load(LoadError::Monoid(e)) => monoid_code(e),
            CliError::Load(LoadError::Act(e)) => act_code(e),
            CliError::Algebra(_) => 30,
            CliError::Sweep(SweepError::BudgetExceeded { .. }) => 5,
            CliError::Sweep(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidAnalysis {
    pub name: Option<String>,
    pub order: usize,
    pub identity: usize,
    pub maximal_right_ideal: ElementSet,
    pub idempotents: ElementSet,
    pub maximal_ideal_two_sided: bool,
    pub unit_symmetry: bool,
    pub commutative: bool,
    pub zero: Option<usize>,
    pub right_ideals: Vec<ElementSet>,
    pub generating_set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActAnalysis {
    pub name: Option<String>,
    pub size: usize,
    pub zeros: ActSubset,
    pub unique_zero: Option<usize>,
    pub subact_count: usize,
    pub maximal_subacts: Vec<ActSubset>,
    pub minimal_generating_sets: Vec<ActSubset>,
    pub quasi_strongly_faithful: bool,
    pub components: Vec<ActSubset>,
    pub projectivity: ProjectivityVerdict,
    pub freeness: FreenessVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub monoid: MonoidAnalysis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act: Option<ActAnalysis>,
}

pub fn analyze_monoid(monoid: &FiniteMonoid) -> MonoidAnalysis {
    let maximal = monoid.maximal_right_ideal();
    MonoidAnalysis {
        name: monoid.name().map(str::to_owned),
        order: monoid.order(),
        identity: monoid.identity(),
        maximal_right_ideal: maximal,
        idempotents: monoid.idempotents(),
        maximal_ideal_two_sided: monoid.is_two_sided(maximal),
        unit_symmetry: monoid.check_unit_symmetry(),
        commutative: monoid.is_commutative(),
        zero: monoid.zero_element(),
        right_ideals: monoid.enumerate_right_ideals(false),
        generating_set: monoid.generating_set(),
    }
}

pub fn analyze_act(act: &FiniteAct) -> ActAnalysis {
    ActAnalysis {
        name: act.name().map(str::to_owned),
        size: act.size(),
        zeros: act.zeros(),
        unique_zero: act.unique_zero(),
        subact_count: act.all_subacts().len(),
        maximal_subacts: act.maximal_subacts(),
        minimal_generating_sets: act.minimal_generating_sets(),
        quasi_strongly_faithful: act.is_quasi_strongly_faithful(),
        components: act.decompose_indecomposable(),
        projectivity: act.is_projective(),
        freeness: act.is_free(),
    }
}

pub fn analyze(monoid: &FiniteMonoid, act: Option<&FiniteAct>) -> AnalysisReport {
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        monoid: analyze_monoid(monoid),
        act: act.map(analyze_act),
    }
}

fn render_analysis(report: &AnalysisReport) -> String {
    let m = &report.monoid;
    let mut out = String::new();
    let _ = writeln!(out, "monoid {} (order {}, identity {})", m.name.as_deref().unwrap_or("S"), m.order, m.identity);
    let _ = writeln!(out, "  𝔐                 {}", m.maximal_right_ideal);
    let _ = writeln!(out, "  E(S)              {}", m.idempotents);
    let _ = writeln!(out, "  𝔐 two-sided       {}", m.maximal_ideal_two_sided);
    let _ = writeln!(out, "  commutative       {}", m.commutative);
    let _ = writeln!(out, "  zero              {}", opt(m.zero));
    let _ = writeln!(out, "  right ideals      {}", list(&m.right_ideals));
    if let Some(a) = &report.act {
        let _ = writeln!(out, "act {} (size {})", a.name.as_deref().unwrap_or("A"), a.size);
        let _ = writeln!(out, "  zeros             {}", a.zeros);
        let _ = writeln!(out, "  subacts           {}", a.subact_count);
        let _ = writeln!(out, "  maximal subacts   {}", list(&a.maximal_subacts));
        let _ = writeln!(out, "  minimal gen sets  {}", list(&a.minimal_generating_sets));
        let _ = writeln!(out, "  qsf               {}", a.quasi_strongly_faithful);
        let _ = writeln!(out, "  projective        {}", a.projectivity.projective);
        let _ = writeln!(out, "  free              {}", a.freeness.free);
    }
    out
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_owned(), |v| v.to_string())
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn render_verdicts(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let hyp = serde_json::to_value(v.hypotheses.status).expect("enum serializes");
        let con = serde_json::to_value(v.conclusion).expect("enum serializes");
        let _ = writeln!(
            out,
            "{:<20} {:<16} {:<8} {}",
            v.statement.as_str(),
            hyp.as_str().unwrap_or_default(),
            con.as_str().unwrap_or_default(),
            v.hypotheses.failed.as_deref().unwrap_or("")
        );
    }
    out
}

fn render_sweep(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "monoids per order {:?}, acts per size {:?}", report.monoids, report.acts);
    let _ = writeln!(out, "{:<20} {:>8} {:>6} {:>8} {:>8}", "statement", "pass", "fail", "vacuous", "n/a");
    for (s, t) in &report.tallies {
        let _ = writeln!(out, "{:<20} {:>8} {:>6} {:>8} {:>8}", s.as_str(), t.pass, t.fail, t.vacuous, t.not_applicable);
    }
    if !report.under_exercised.is_empty() {
        let _ = writeln!(out, "under-exercised: {}", list(&report.under_exercised));
    }
    out
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => write_file(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn parse_statements(ids: &[String]) -> Result<Vec<StatementId>, CliError> {
    if ids.is_empty() || ids.iter().any(|s| s == "all") {
        return Ok(StatementId::ALL.to_vec());
    }
    ids.iter()
        .map(|s| s.parse().map_err(CliError::Usage))
        .collect()
}

/// Verdicts for `statements` on one monoid and act (or `S` over itself).
pub fn verify_all(
    statements: &[StatementId],
    monoid: &Arc<FiniteMonoid>,
    act: Option<&FiniteAct>,
    max_act_size: usize,
) -> Vec<Verdict> {
    let regular;
    let act = match act {
        Some(a) => a,
        None => {
            regular = FiniteAct::regular(monoid.clone());
            &regular
        }
    };
    statements
        .iter()
        .flat_map(|&s| verify_on_act(s, act, max_act_size))
        .collect()
}

fn write_structures<T: Serialize>(
    dir: Option<&Path>,
    prefix: &str,
    items: &[T],
) -> Result<(), CliError> {
    let Some(dir) = dir else {
        return emit(None, &to_json(&items));
    };
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_owned(), source })?;
    for (k, item) in items.iter().enumerate() {
        write_file(&dir.join(format!("{prefix}-{k}.json")), &to_json(item))?;
    }
    log::info!("wrote {} files to {}", items.len(), dir.display());
    Ok(())
}

/// Runs one command; the returned code is 0 or 1 (a conclusion failed).
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { monoid, act, output, pretty } => {
            let monoid = load_monoid(&monoid)?;
            let act = act.as_deref().map(load_act).transpose()?;
            if let Some(a) = &act {
                if !a.monoid().same_structure(&monoid) {
                    return Err(AlgebraError::HostMismatch.into());
                }
            }
            let report = analyze(&monoid, act.as_ref());
            let text = if pretty { render_analysis(&report) } else { to_json(&report) };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { statement, monoid, act, max_act_size, report, pretty } => {
            let statements = parse_statements(&[statement])?;
            let monoid = Arc::new(load_monoid(&monoid)?);
            let act = act.as_deref().map(load_act).transpose()?;
            if let Some(a) = &act {
                if !a.monoid().same_structure(&monoid) {
                    return Err(AlgebraError::HostMismatch.into());
                }
            }
            let verdicts = verify_all(&statements, &monoid, act.as_ref(), max_act_size);
            let json = to_json(&verdicts);
            if let Some(path) = &report {
                write_file(path, &json)?;
            }
            emit(None, &if pretty { render_verdicts(&verdicts) } else { json })?;
            Ok(i32::from(verdicts.iter().any(|v| v.conclusion == Conclusion::Fail)))
        }
        Command::Sweep {
            max_monoid_order,
            max_act_size,
            statements,
            workers,
            require_nonvacuous,
            max_instances,
            time_limit_ms,
            report,
            pretty,
        } => {
            let config = SweepConfig {
                max_monoid_order,
                max_act_size,
                statements: parse_statements(&statements)?,
                require_nonvacuous_count: require_nonvacuous,
                workers,
                max_instances,
                time_limit_ms,
            };
            let result = run_sweep(&config);
            let sweep = match &result {
                Ok(r) => r,
                Err(SweepError::BudgetExceeded { partial }) => partial.as_ref(),
                Err(_) => return result.map(|_| 0).map_err(CliError::from),
            };
            let json = to_json(sweep);
            if let Some(path) = &report {
                write_file(path, &json)?;
            }
            emit(None, &if pretty { render_sweep(sweep) } else { json })?;
            let failed = i32::from(sweep.has_failures());
            result.map(|_| failed).map_err(CliError::from)
        }
        Command::Enumerate { kind, order, size, monoid, output, naive } => {
            match kind {
                Kind::Monoids => {
                    let n = order.ok_or_else(|| CliError::Usage("--order is required".into()))?;
                    let monoids = if naive { enumerate_monoids_naive(n) } else { enumerate_monoids(n) };
                    write_structures(output.as_deref(), &format!("monoid-{n}"), &monoids)?;
                }
                Kind::Acts => {
                    let m = size.ok_or_else(|| CliError::Usage("--size is required".into()))?;
                    let path = monoid.ok_or_else(|| CliError::Usage("--monoid is required".into()))?;
                    let s = Arc::new(load_monoid(&path)?);
                    let acts = if naive { enumerate_acts_naive(&s, m) } else { enumerate_acts(&s, m) };
                    let files: Vec<ActFile> = acts.into_iter().map(ActFile::from).collect();
                    write_structures(output.as_deref(), &format!("act-{m}"), &files)?;
                }
            }
            Ok(0)
        }
    }
}
