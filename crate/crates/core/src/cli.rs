//! The `even-graphs` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or identity check fails,
//! 2 for bad input or a resource limit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::count::{CountCache, CountEngine, CountError, CountKind, CountReport, DEFAULT_CAP};
use crate::oracle::{
    LabelledGraph, Limits, ObjectKind, Oracle, OracleError, Parity, DEFAULT_SEED, MAX_VERTICES,
};
use crate::perm::{Domain, Edges};
use crate::selfcheck::{self, MAX_SELFCHECK_N};

#[derive(Debug, Parser)]
#[command(name = "even-graphs", version, about = "Count graphs, tournaments and odd graphs up to isomorphism")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one exact count.
    Count {
        #[arg(long, value_enum)]
        kind: CountKind,
        #[arg(long = "n")]
        n: usize,
        /// Count cache (`n<TAB>kind<TAB>value` lines), read and updated.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Raise the largest accepted n.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print n, graphs, tournaments, odd, even, identity status for n = 1..=max-n.
    Table {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Decide whether an edge-list graph is even or odd.
    Classify {
        /// Edge list: `n m`, then m lines `u v` (1-based). Defaults to stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List one canonical representative per isomorphism class as `n:bits`.
    Enumerate {
        #[arg(long, value_enum)]
        kind: CountKind,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run every exhaustive verification suite.
    Selfcheck {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
    #[error("output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) | CliError::Output(_) => 2,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::OutOfRange { .. } => CliError::Input(e.to_string()),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Count { kind, n, cache, cap } => {
            let engine = count_engine(cap, err)?;
            cmd_count(&engine, kind, n, cache.as_deref(), out)
        }
        Command::Table { max_n, cache, cap } => {
            let engine = count_engine(cap, err)?;
            cmd_table(&engine, max_n, cache.as_deref(), out)
        }
        Command::Classify { input, cap } => {
            let oracle = oracle(cap, err)?;
            let text = read_input(input.as_deref())?;
            let doc = EdgeListDocument::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
            cmd_classify(&oracle, &doc, out)
        }
        Command::Enumerate { kind, n, cap } => {
            let oracle = oracle(cap, err)?;
            cmd_enumerate(&oracle, kind, n, out)
        }
        Command::Selfcheck { max_n, seed } => cmd_selfcheck(max_n, seed, out),
    }
}

fn count_engine(cap: Option<usize>, err: &mut dyn Write) -> Result<CountEngine, CliError> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    if cap > DEFAULT_CAP {
        writeln!(
            err,
            "warning: cap {cap} exceeds the default {DEFAULT_CAP}; the number of cycle types grows like exp(pi*sqrt(2n/3))"
        )?;
    }
    Ok(CountEngine::with_cap(cap))
}

fn oracle(cap: Option<usize>, err: &mut dyn Write) -> Result<Oracle, CliError> {
    let Some(cap) = cap else {
        return Ok(Oracle::default());
    };
    if cap > MAX_VERTICES {
        return Err(CliError::Input(format!(
            "--cap {cap} exceeds the representable maximum {MAX_VERTICES}"
        )));
    }
    writeln!(
        err,
        "warning: oracle limits raised to n <= {cap}; brute-force work grows like n! * 2^(n(n-1)/2)"
    )?;
    Ok(Oracle::new(Limits::uniform(cap)))
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn load_cache(path: Option<&Path>) -> Result<Option<CountCache>, CliError> {
    path.map(|p| CountCache::load(p).map_err(|e| CliError::Input(e.to_string())))
        .transpose()
}

fn store_cache(path: Option<&Path>, cache: Option<&CountCache>) -> Result<(), CliError> {
    if let (Some(p), Some(c)) = (path, cache) {
        c.save(p).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(())
}

/// The report for `n`, from the cache when all four values are there.
fn report_for(
    engine: &CountEngine,
    n: usize,
    cache: &mut Option<CountCache>,
) -> Result<CountReport, CliError> {
    if n == 0 || n > engine.cap() {
        return Err(CountError::OutOfRange { n, cap: engine.cap() }.into());
    }
    if let Some(c) = cache.as_ref() {
        let cached: Option<Vec<_>> = CountKind::ALL.iter().map(|&k| c.get(n, k).cloned()).collect();
        if let Some(v) = cached {
            let [g, t, o, e]: [_; 4] = v.try_into().unwrap();
            return Ok(CountReport::new(n, g, t, o, e));
        }
    }
    let report = engine.verify_identity(n)?;
    if let Some(c) = cache.as_mut() {
        for kind in CountKind::ALL {
            c.insert(n, kind, report.get(kind).clone());
        }
    }
    Ok(report)
}

fn row_ok(r: &CountReport) -> bool {
    r.identity_holds && (r.n < 2 || r.even_matches_tournaments())
}

pub fn cmd_count(
    engine: &CountEngine,
    kind: CountKind,
    n: usize,
    cache_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut cache = load_cache(cache_path)?;
    let report = report_for(engine, n, &mut cache)?;
    if !row_ok(&report) {
        return Err(CliError::Verification(format!(
            "identity fails at n = {n}: {report:?}"
        )));
    }
    writeln!(out, "{}", report.get(kind))?;
    store_cache(cache_path, cache.as_ref())
}

pub fn cmd_table(
    engine: &CountEngine,
    max_n: usize,
    cache_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if max_n == 0 || max_n > engine.cap() {
        return Err(CountError::OutOfRange {
            n: max_n,
            cap: engine.cap(),
        }
        .into());
    }
    let mut cache = load_cache(cache_path)?;
    let mut failed = Vec::new();
    for n in 1..=max_n {
        let r = report_for(engine, n, &mut cache)?;
        let ok = row_ok(&r);
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            n,
            r.graphs,
            r.tournaments,
            r.odd_graphs,
            r.even_graphs,
            if ok { "ok" } else { "FAIL" }
        )?;
        if !ok {
            failed.push(n);
        }
    }
    store_cache(cache_path, cache.as_ref())?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("identity fails for n in {failed:?}")))
    }
}

pub fn cmd_classify(
    oracle: &Oracle,
    doc: &EdgeListDocument,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = doc.to_graph()?;
    let verdict = oracle.classify_parity(&graph)?;
    match verdict.witness {
        Some(w) => writeln!(out, "odd {w}")?,
        None => writeln!(out, "even")?,
    }
    Ok(())
}

pub fn cmd_enumerate(
    oracle: &Oracle,
    kind: CountKind,
    n: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    let reps = match kind {
        CountKind::Graphs => oracle.isomorphism_classes(n, ObjectKind::Graph)?,
        CountKind::Tournaments => oracle.isomorphism_classes(n, ObjectKind::Tournament)?,
        CountKind::Odd | CountKind::Even => {
            let wanted = if kind == CountKind::Odd {
                Parity::Odd
            } else {
                Parity::Even
            };
            oracle
                .graph_classes_with_parity(n)?
                .into_iter()
                .filter(|&(_, p)| p == wanted)
                .map(|(b, _)| b)
                .collect()
        }
    };
    for r in reps {
        writeln!(out, "{n}:{r}")?;
    }
    Ok(())
}

pub fn cmd_selfcheck(max_n: usize, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    if max_n == 0 || max_n > MAX_SELFCHECK_N {
        return Err(CliError::Input(format!(
            "--max-n must be in 1..={MAX_SELFCHECK_N}, got {max_n}"
        )));
    }
    let mut first_failure = None;
    for outcome in selfcheck::run_all(max_n, seed) {
        match &outcome.result {
            Ok(cases) => writeln!(out, "PASS\t{}\t{cases} cases", outcome.name)?,
            Err(counterexample) => {
                writeln!(out, "FAIL\t{}\t{counterexample}", outcome.name)?;
                first_failure.get_or_insert_with(|| format!("{}: {counterexample}", outcome.name));
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(f) => Err(CliError::Verification(format!("first counterexample: {f}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

/// A graph given as `n m` followed by `m` lines `u v`, 1-based, either
/// endpoint order. Blank lines are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub n: usize,
    /// Normalised so that `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl EdgeListDocument {
    pub fn parse(text: &str) -> Result<Self, EdgeListError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(EdgeListError {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let [n, m] = parse_two(header_line, header)?;
        if n == 0 {
            return Err(EdgeListError {
                line: header_line,
                message: "n must be at least 1".into(),
            });
        }
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for _ in 0..m {
            let (line, text) = lines.next().ok_or_else(|| EdgeListError {
                line: last_line + 1,
                message: format!("expected {m} edges, found {}", edges.len()),
            })?;
            last_line = line;
            let [u, v] = parse_two(line, text)?;
            if u == 0 || v == 0 || u > n || v > n {
                return Err(EdgeListError {
                    line,
                    message: format!("endpoint outside 1..={n}"),
                });
            }
            if u == v {
                return Err(EdgeListError {
                    line,
                    message: format!("loop at vertex {u}"),
                });
            }
            let pair = (u.min(v), u.max(v));
            if edges.contains(&pair) {
                return Err(EdgeListError {
                    line,
                    message: format!("duplicate edge {{{}, {}}}", pair.0, pair.1),
                });
            }
            edges.push(pair);
        }
        if let Some((line, _)) = lines.next() {
            return Err(EdgeListError {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        Ok(Self { n, edges })
    }

    pub fn to_graph(&self) -> Result<LabelledGraph, CliError> {
        if self.n > MAX_VERTICES {
            return Err(CliError::Input(format!(
                "n = {} exceeds the representable maximum {MAX_VERTICES} ({} pairs)",
                self.n,
                Edges::size(self.n)
            )));
        }
        Ok(LabelledGraph::from_edges(self.n, &self.edges)?)
    }
}

fn parse_two(line: usize, text: &str) -> Result<[usize; 2], EdgeListError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let bad = |message: String| EdgeListError { line, message };
    if fields.len() != 2 {
        return Err(bad(format!("expected two integers, found `{text}`")));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| bad(format!("`{s}` is not a nonnegative integer")))
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}
