//! Command-line front end for `hamspec`.
//!
//! [`run`] does all the work and returns the exit code so tests can drive
//! it without spawning processes.

mod parse;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamspec::graph::{canonical_form, graph6_decode, graph6_encode, MAX_ISO_ORDER};
use hamspec::hamilton::HamSolver;
use hamspec::spectral::{spectral_radius, DEFAULT_TOL};
use hamspec::verify::*;
use hamspec::{Error, Graph};
use serde_json::json;

pub use parse::{parse_family, ParseError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

/// Samples drawn by the random theorem 2 check unless `--samples` is given.
pub const THEOREM2_SAMPLES: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(name = "hamspec", version, about = "Spectral radius and Hamiltonicity checks for small graphs")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius with a certified bracket.
    Rho {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Hamilton path and cycle decisions with witnesses.
    Ham {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        path: bool,
        #[arg(long)]
        cycle: bool,
    },
    /// Run a verification check over a range of orders.
    Verify(VerifyArgs),
    /// Reproduce the spectral radius tables as CSV.
    Tables,
    /// Enumerate labeled graphs and print the survivors as graph6.
    Search(SearchArgs),
}

/// Graph input: a family expression, a graph6 string, or graph6 lines on stdin.
#[derive(Debug, Args)]
pub struct Input {
    #[arg(short = 'f', long, conflicts_with = "graph6")]
    pub family: Option<String>,
    #[arg(short = 'g', long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Theorem1,
    Theorem2,
    #[value(name = "lemmaG1")]
    LemmaG1,
    #[value(name = "lemmaG2")]
    LemmaG2,
    Corollaries,
    #[value(name = "fn_cycle")]
    FnCycle,
    Appendix,
    Join,
    Bounds,
    Chvatal,
    #[value(name = "erdos_gallai")]
    ErdosGallai,
    Tables,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    /// Single order; shorthand for `--n-min N --n-max N`.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub long_running: bool,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub tol_guard: Option<f64>,
    /// Keep wall-clock times in JSON and CSV output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    #[arg(long, default_value_t = 0)]
    pub min_edges: usize,
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub non_hamiltonian: bool,
    #[arg(long)]
    pub non_traceable: bool,
    /// Keep graphs whose spectral radius may reach this value (bracket upper end).
    #[arg(long)]
    pub min_rho: Option<f64>,
    /// One representative per isomorphism class.
    #[arg(long)]
    pub unique: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub long_running: bool,
}

/// Everything that stops a command before it produces a verdict.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bad family expression '{input}' {source}")]
    Family { input: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(Error::Infeasible { .. }) => EXIT_INFEASIBLE,
            Self::Io(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(config: &CliConfig, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(config: &CliConfig, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CliResult<i32> {
    let fmt = config.output;
    match &config.command {
        Command::Rho { input, tol } => rho(input, *tol, fmt, stdin, out),
        Command::Ham { input, path, cycle } => {
            let (path, cycle) = if *path || *cycle { (*path, *cycle) } else { (true, true) };
            ham(input, path, cycle, fmt, stdin, out)
        }
        Command::Verify(args) => verify(args, fmt, out),
        Command::Tables => tables(fmt, out),
        Command::Search(args) => search(args, fmt, out),
    }
}

fn jobs(requested: Option<usize>) -> CliResult<usize> {
    match requested {
        Some(0) => usage("--jobs must be at least 1"),
        Some(j) => Ok(j),
        None => Ok(std::thread::available_parallelism().map_or(1, |p| p.get())),
    }
}

fn read_graphs(input: &Input, stdin: &mut dyn BufRead) -> CliResult<Vec<(String, Graph)>> {
    if let Some(f) = &input.family {
        let spec = parse_family(f).map_err(|source| CliError::Family {
            input: f.clone(),
            source,
        })?;
        let graphs = spec.members()?;
        if graphs.len() == 1 {
            return Ok(vec![(spec.to_string(), graphs[0])]);
        }
        return Ok(graphs.into_iter().enumerate().map(|(i, g)| (format!("{spec}[{i}]"), g)).collect());
    }
    if let Some(g6) = &input.graph6 {
        return Ok(vec![(g6.clone(), graph6_decode(g6)?)]);
    }
    let mut graphs = Vec::new();
    for line in stdin.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push((line.to_string(), graph6_decode(line)?));
    }
    if graphs.is_empty() {
        return usage("no input graph: pass --family, --graph6 or graph6 lines on stdin");
    }
    Ok(graphs)
}

fn rho(input: &Input, tol: f64, fmt: Output, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CliResult<i32> {
    if tol.is_nan() || tol <= 0.0 {
        return usage("--tol must be positive");
    }
    let graphs = read_graphs(input, stdin)?;
    if fmt == Output::Csv {
        writeln!(out, "input,order,size,value,lower,upper,iterations")?;
    }
    for (name, g) in graphs {
        let est = spectral_radius::<f64>(&g, tol)?;
        match fmt {
            Output::Text => writeln!(
                out,
                "{name}: rho = {:.10} in [{:.12}, {:.12}] (width {:.1e}, {} iterations)",
                est.value,
                est.lower,
                est.upper,
                est.width(),
                est.iterations
            )?,
            Output::Csv => writeln!(
                out,
                "\"{name}\",{},{},{},{},{},{}",
                g.order(),
                g.size(),
                est.value,
                est.lower,
                est.upper,
                est.iterations
            )?,
            Output::Json => writeln!(
                out,
                "{}",
                json!({
                    "input": name,
                    "order": g.order(),
                    "size": g.size(),
                    "value": est.value,
                    "lower": est.lower,
                    "upper": est.upper,
                    "iterations": est.iterations,
                })
            )?,
        }
    }
    Ok(EXIT_PASS)
}

fn witness_text(w: &Option<Vec<usize>>) -> String {
    w.as_ref()
        .map(|o| o.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn ham(
    input: &Input,
    path: bool,
    cycle: bool,
    fmt: Output,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let graphs = read_graphs(input, stdin)?;
    if let Some((_, g)) = graphs.iter().find(|(_, g)| g.order() > hamspec::hamilton::MAX_HAM_ORDER) {
        return Err(Error::TooLarge {
            n: g.order(),
            max: hamspec::hamilton::MAX_HAM_ORDER,
            method: "Hamilton search",
        }
        .into());
    }
    let mut solver = HamSolver::new();
    if fmt == Output::Csv {
        writeln!(out, "input,kind,found,witness")?;
    }
    for (name, g) in graphs {
        let mut rows = Vec::new();
        if path {
            rows.push(("path", solver.find_path(&g)));
        }
        if cycle {
            rows.push(("cycle", solver.find_cycle(&g)));
        }
        for (kind, w) in rows {
            match fmt {
                Output::Text => match &w {
                    Some(_) => writeln!(out, "{name}: Hamilton {kind} {}", witness_text(&w))?,
                    None => writeln!(out, "{name}: no Hamilton {kind}")?,
                },
                Output::Csv => writeln!(out, "\"{name}\",{kind},{},{}", w.is_some(), witness_text(&w))?,
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"input": name, "kind": kind, "found": w.is_some(), "witness": w})
                )?,
            }
        }
    }
    Ok(EXIT_PASS)
}

fn default_range(check: Check) -> RangeInclusive<usize> {
    match check {
        Check::Theorem1 | Check::LemmaG1 | Check::FnCycle => 4..=7,
        Check::Theorem2 => 5..=7,
        Check::LemmaG2 => 5..=8,
        Check::Join | Check::Bounds | Check::ErdosGallai => 1..=7,
        Check::Chvatal => 3..=7,
        Check::Appendix => 7..=1000,
        Check::Corollaries | Check::Tables | Check::All => 0..=0,
    }
}

fn resolve_range(args: &VerifyArgs) -> CliResult<RangeInclusive<usize>> {
    let d = default_range(args.check);
    let (lo, hi) = match (args.n, args.n_min, args.n_max) {
        (Some(n), _, _) => (n, n),
        (None, lo, hi) => (lo.unwrap_or(*d.start()), hi.unwrap_or(*d.end())),
    };
    if lo > hi {
        return usage(format!("empty order range {lo}..={hi}"));
    }
    Ok(lo..=hi)
}

fn run_check(check: Check, range: RangeInclusive<usize>, opts: &VerifyOptions, samples: u64) -> CliResult<Vec<VerificationReport>> {
    let per_n = |f: &dyn Fn(usize) -> hamspec::Result<VerificationReport>| -> CliResult<Vec<VerificationReport>> {
        range.clone().map(|n| f(n).map_err(CliError::from)).collect()
    };
    match check {
        Check::Theorem1 => per_n(&|n| verify_theorem1(n, opts)),
        Check::Theorem2 => per_n(&|n| {
            if n <= 8 {
                verify_theorem2_smalln(n, opts)
            } else {
                verify_theorem2_random(n, samples, opts)
            }
        }),
        Check::LemmaG1 => per_n(&|n| verify_lemma_g1(n, opts)),
        Check::LemmaG2 => per_n(&|n| verify_lemma_g2(n, opts)),
        Check::FnCycle => per_n(&|n| verify_fiedler_nikiforov_cycle(n, opts)),
        Check::Join => per_n(&|n| verify_join_equivalence(n, opts)),
        Check::Bounds => per_n(&|n| verify_bounds(n, opts)),
        Check::Chvatal => per_n(&|n| verify_chvatal(n, opts)),
        Check::ErdosGallai => per_n(&|n| verify_erdos_gallai(n, opts)),
        Check::Appendix => Ok(vec![verify_appendix(*range.end())?]),
        Check::Corollaries => Ok(vec![verify_corollaries(opts)?]),
        Check::Tables => Ok(vec![reproduce_tables()?]),
        Check::All => {
            let mut reports = Vec::new();
            for c in [
                Check::Tables,
                Check::Theorem1,
                Check::Theorem2,
                Check::LemmaG1,
                Check::LemmaG2,
                Check::Corollaries,
                Check::FnCycle,
                Check::Appendix,
            ] {
                reports.extend(run_check(c, default_range(c), opts, samples)?);
            }
            reports.extend(run_check(Check::Theorem2, 14..=14, opts, samples)?);
            Ok(reports)
        }
    }
}

fn verify(args: &VerifyArgs, fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    if args.check == Check::All && (args.n.is_some() || args.n_min.is_some() || args.n_max.is_some()) {
        return usage("--check all runs every check at its default orders; drop the order flags");
    }
    let mut opts = VerifyOptions {
        jobs: jobs(args.jobs)?,
        long_running: args.long_running,
        ..VerifyOptions::default()
    };
    if let Some(s) = args.samples {
        opts.samples = s;
    }
    if let Some(s) = args.seed {
        opts.seed = s;
    }
    if let Some(t) = args.tol_guard {
        if t.is_nan() || t <= 0.0 {
            return usage("--tol-guard must be positive");
        }
        opts.tol_guard = t;
    }
    let range = resolve_range(args)?;
    let mut reports = run_check(args.check, range, &opts, args.samples.unwrap_or(THEOREM2_SAMPLES))?;
    if !args.timing && fmt != Output::Text {
        reports = reports.iter().map(VerificationReport::without_timing).collect();
    }
    write_reports(&reports, fmt, out)?;
    Ok(exit_code(&reports))
}

/// [`EXIT_FAIL`] if any report failed. PARTIAL evidence is not a failure.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn write_reports(reports: &[VerificationReport], fmt: Output, out: &mut dyn Write) -> CliResult<()> {
    match fmt {
        Output::Json => {
            let text = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::to_string_pretty(reports).expect("reports serialize")
            };
            writeln!(out, "{text}")?;
        }
        Output::Csv => {
            writeln!(out, "check_id,n_min,n_max,scanned,exceptions,violations,verdict,elapsed_ms")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.check_id,
                    r.n[0],
                    r.n[1],
                    r.scanned,
                    r.exceptions.len(),
                    r.violations.len(),
                    r.verdict,
                    r.elapsed_ms
                )?;
            }
        }
        Output::Text => {
            for r in reports {
                let mut s = format!(
                    "{} n={}..{}: {} ({} scanned, {} exceptions, {} violations, {} ms)",
                    r.check_id,
                    r.n[0],
                    r.n[1],
                    r.verdict,
                    r.scanned,
                    r.exceptions.len(),
                    r.violations.len(),
                    r.elapsed_ms
                );
                for e in &r.exceptions {
                    let _ = write!(s, "\n  exception {} {} x{}", e.graph6, e.family.as_deref().unwrap_or("-"), e.count);
                }
                for v in &r.violations {
                    let _ = write!(s, "\n  violation {v}");
                }
                writeln!(out, "{s}")?;
            }
        }
    }
    Ok(())
}

fn tables(fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    let rows = table_rows()?;
    let report = reproduce_tables()?;
    match fmt {
        Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?,
        Output::Csv | Output::Text => write!(out, "{}", tables_csv(&rows))?,
    }
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Default)]
struct Survivors {
    labeled: Vec<String>,
    classes: BTreeSet<String>,
    solver: HamSolver,
}

impl Merge for Survivors {
    fn merge(&mut self, other: Self) {
        self.labeled.extend(other.labeled);
        self.classes.extend(other.classes);
    }
}

fn search(args: &SearchArgs, fmt: Output, out: &mut dyn Write) -> CliResult<i32> {
    if args.unique && args.n > MAX_ISO_ORDER {
        return usage(format!("--unique needs n <= {MAX_ISO_ORDER}"));
    }
    let mut filters = Filters::min_degree(args.min_degree).with_min_edges(args.min_edges);
    if let Some(m) = args.max_edges {
        filters = filters.with_max_edges(m);
    }
    if args.connected {
        filters = filters.connected();
    }
    let keep = |g: &Graph, solver: &mut HamSolver| {
        if args.non_hamiltonian && solver.cycle_exists(g) {
            return false;
        }
        if args.non_traceable && solver.path_exists(g) {
            return false;
        }
        match args.min_rho {
            Some(t) if (g.max_degree() as f64) < t => false,
            Some(t) => spectral_radius::<f64>(g, DEFAULT_TOL).map_or(true, |e| e.upper >= t),
            None => true,
        }
    };
    let (found, scanned) = scan(
        args.n,
        &filters,
        jobs(args.jobs)?,
        args.long_running,
        Survivors::default,
        |acc: &mut Survivors, g| {
            if !keep(g, &mut acc.solver) {
                return;
            }
            if args.unique {
                acc.classes.insert(graph6_encode(&canonical_form(g).expect("order checked")));
            } else {
                acc.labeled.push(graph6_encode(g));
            }
        },
    )?;
    let survivors: Vec<String> = if args.unique {
        found.classes.into_iter().collect()
    } else {
        found.labeled
    };
    match fmt {
        Output::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json!({
                "n": args.n,
                "filters": filters.describe(),
                "scanned": scanned,
                "survivors": survivors,
            }))
            .expect("json")
        )?,
        Output::Csv => {
            writeln!(out, "graph6")?;
            for s in &survivors {
                writeln!(out, "{s}")?;
            }
        }
        Output::Text => {
            for s in &survivors {
                writeln!(out, "{s}")?;
            }
        }
    }
    Ok(EXIT_PASS)
}
