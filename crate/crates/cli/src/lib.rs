//! Argument parsing and subcommands for the `chrombound` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use chrombound::engine::{chromatic_number_from, chromatic_polynomial, EngineError, MemoCache};
use chrombound::enumerate::{self, EnumError, Guards};
use chrombound::families::{FamilyError, FamilySpec};
use chrombound::graph::{Graph, GraphError};
use chrombound::verify::{self, emit_report, ReportFormat, Verifier, VerifyError, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Integrity(_) => EXIT_INTEGRITY,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::TooLarge { .. } => CliError::Usage(e.to_string()),
            other => CliError::Integrity(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(inner) => inner.into(),
            VerifyError::Serialize(s) => CliError::Integrity(s),
            other => CliError::Usage(other.to_string()),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}
usage_from!(EnumError, FamilyError, GraphError);

#[derive(Debug, Parser)]
#[command(name = "chrombound", version, about = "Exact chromatic polynomials and an exhaustive check of the k-chromatic coloring bound")]
pub struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic polynomial of a graph6 string, a family such as `cycle:5`, or `-` for graph6 lines on stdin
    Poly(PolyArgs),
    /// Isomorph-free graphs of a class, one canonical graph6 per line
    Enumerate(EnumerateArgs),
    /// Run a verification suite and write its report
    Verify(VerifyArgs),
    /// Compare engine evaluations with brute-force coloring counts
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    pub input: String,
    /// Evaluation point (repeatable)
    #[arg(long = "x")]
    pub x: Vec<u64>,
    /// Evaluate at 0..=X_MAX
    #[arg(long)]
    pub x_max: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    All,
    Trianglefree,
    Alpha2conn,
    #[value(name = "ck-alpha2")]
    CkAlpha2,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct GuardArgs {
    /// Largest n for enumeration of all graphs
    #[arg(long, default_value_t = Guards::default().all_graphs)]
    pub guard_all: usize,
    /// Largest n for triangle-free (and independence number <= 2) enumeration
    #[arg(long, default_value_t = Guards::default().triangle_free)]
    pub guard_triangle_free: usize,
}

impl GuardArgs {
    fn guards(&self) -> Guards {
        Guards { all_graphs: self.guard_all, triangle_free: self.guard_triangle_free, ..Guards::default() }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub class: GraphClass,
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub guards: GuardArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Main,
    K2k3,
    LemmaClique,
    Prop3,
    Lemma5,
    Universal,
    Identities,
    Decomposition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub k: Option<usize>,
    /// Single order for lemma-clique and universal (default: k..=n-max)
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Evaluation point (repeatable)
    #[arg(long = "x")]
    pub x: Vec<u64>,
    /// Evaluate at k..=X_MAX
    #[arg(long)]
    pub x_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Include elapsed time and cache statistics (makes the report run-dependent)
    #[arg(long)]
    pub stats: bool,
    /// Keep every individual check in the report
    #[arg(long)]
    pub full: bool,
    #[command(flatten)]
    pub guards: GuardArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub x_max: u64,
    #[command(flatten)]
    pub guards: GuardArgs,
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(stdout, "{}", e.render()) } else { write!(stderr, "{}", e.render()) };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(stderr, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INTEGRITY;
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Poly(a) => cmd_poly(a, stdout),
        Command::Enumerate(a) => cmd_enumerate(a, stdout, stderr),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Oracle(a) => cmd_oracle(a, stdout),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_graphs(input: &str) -> Result<Vec<(String, Graph)>, CliError> {
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| Ok((l.to_owned(), Graph::from_graph6(l)?)))
            .collect();
    }
    if input.contains(':') {
        let spec: FamilySpec = input.parse()?;
        return Ok(spec.instances()?.into_iter().map(|i| (i.name, i.graph)).collect());
    }
    Ok(vec![(input.to_owned(), Graph::from_graph6(input)?)])
}

pub fn cmd_poly(a: &PolyArgs, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let graphs = read_graphs(&a.input)?;
    let xs: Vec<u64> = match (a.x.is_empty(), a.x_max) {
        (_, Some(m)) => a.x.iter().copied().chain(0..=m).collect(),
        (false, None) => a.x.clone(),
        (true, None) => (0..=5).collect(),
    };
    let cache = MemoCache::new();
    for (i, (name, g)) in graphs.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let pi = chromatic_polynomial(g, &cache)?;
        writeln!(out, "graph: {name} ({}, n={}, m={})", g.to_graph6(), g.order(), g.edge_count())?;
        writeln!(out, "pi(x) = {pi}")?;
        writeln!(out, "coefficients: {}", pi.coeff_list())?;
        if let Some(f) = pi.factored() {
            writeln!(out, "factored: {f}")?;
        }
        writeln!(out, "chromatic number: {}", chromatic_number_from(&pi))?;
        for &x in &xs {
            writeln!(out, "pi({x}) = {}", pi.eval_at(x as i64))?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_enumerate(a: &EnumerateArgs, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let guards = a.guards.guards();
    let stream = match a.class {
        GraphClass::All => enumerate::all_graphs_with(a.n, &guards)?,
        GraphClass::Trianglefree => enumerate::triangle_free_graphs_with(a.n, &guards)?,
        GraphClass::Alpha2conn => enumerate::alpha_le2_connected_with(a.n, &guards)?,
        GraphClass::CkAlpha2 => {
            let k = a.k.ok_or_else(|| CliError::Usage("ck-alpha2 needs --k".into()))?;
            enumerate::ck_alpha_le2_with(a.n, k, &guards)?
        }
    };
    out.write_all(stream.to_graph6_lines().as_bytes())?;
    writeln!(err, "{} graphs", stream.len())?;
    Ok(EXIT_OK)
}

fn points(a: &VerifyArgs, low: u64) -> Vec<u64> {
    let mut xs = a.x.clone();
    if let Some(m) = a.x_max {
        xs.extend(low..=m);
    }
    if xs.is_empty() {
        xs.extend(low..=low + 4);
    }
    xs.sort_unstable();
    xs.dedup();
    xs
}

fn orders(a: &VerifyArgs, k: usize, default_max: usize) -> Vec<usize> {
    match a.n {
        Some(n) => vec![n],
        None => (k..=a.n_max.unwrap_or(default_max)).collect(),
    }
}

/// Builds the report for the selected suite.
pub fn build_report(a: &VerifyArgs, verifier: &Verifier) -> Result<VerifyReport, CliError> {
    let k = a.k.unwrap_or(4);
    let per_order = |f: &dyn Fn(usize) -> Result<VerifyReport, VerifyError>| -> Result<VerifyReport, CliError> {
        let ns = orders(a, k, k + 3);
        if let Some(&last) = ns.last() {
            verifier.guards.check_all_graphs(last)?;
        }
        let mut ns = ns.into_iter();
        let first = ns.next().ok_or_else(|| CliError::Usage(format!("--n-max must be at least k = {k}")))?;
        let mut report = f(first)?;
        for n in ns {
            report = report.merge(f(n)?);
        }
        Ok(report)
    };
    let report = match a.suite {
        Suite::Main => verifier.verify_theorem_main(a.n_max.unwrap_or(8), k, &points(a, k as u64))?,
        Suite::K2k3 => {
            let xs = if a.x.is_empty() && a.x_max.is_none() { vec![3] } else { points(a, 3) };
            verifier.verify_k2_k3(a.n_max.unwrap_or(8), &xs)?
        }
        Suite::LemmaClique => per_order(&|n| verifier.verify_lemma_clique(n, k, &points(a, k as u64)))?,
        Suite::Universal => per_order(&|n| verifier.verify_universal(n, k, &points(a, k as u64)))?,
        Suite::Prop3 => verifier.verify_prop3(a.n_max.unwrap_or(8))?,
        Suite::Lemma5 => verifier.verify_lemma5_structure(k, &points(a, k as u64))?,
        Suite::Identities => verifier.verify_identities(a.samples, a.seed)?,
        Suite::Decomposition => verifier.verify_decomposition(a.n_max.unwrap_or(7))?,
    };
    Ok(report)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let start = Instant::now();
    let verifier = Verifier { guards: a.guards.guards(), full: a.full, ..Verifier::new() };
    let mut report = build_report(a, &verifier)?;
    if a.stats {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        report.cache = Some(verifier.cache.stats());
    }
    let format = match a.format {
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Csv => ReportFormat::Csv,
    };
    let bytes = emit_report(&report, format)?;
    match &a.out {
        Some(path) => fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    writeln!(err, "{}", report.summary())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
}

pub fn cmd_oracle(a: &OracleArgs, out: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    let start = Instant::now();
    let summary = verify::oracle_equivalence(a.n_max, a.x_max, &a.guards.guards(), &MemoCache::new())?;
    for (g6, x, engine, brute) in &summary.mismatches {
        writeln!(out, "mismatch {g6} x={x}: engine {engine}, brute force {brute}")?;
    }
    writeln!(
        out,
        "oracle: n <= {}, x in 0..={}: {} graphs, {} evaluations, {} mismatches, {} ms",
        summary.n_max,
        summary.x_max,
        summary.graphs,
        summary.evaluations,
        summary.mismatches.len(),
        start.elapsed().as_millis()
    )?;
    Ok(if summary.mismatches.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS })
}
