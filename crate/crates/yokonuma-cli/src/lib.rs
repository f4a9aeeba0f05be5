//! Command-line front end for the exact solid-torus link invariants:
//! compute one invariant, tabulate a corpus, or run a verification
//! suite. All the mathematics lives in the `yokonuma` crate; this crate
//! only parses flags, schedules work, and formats JSON records.

pub mod suites;
pub mod wordgen;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use yokonuma::link::{rho_invariant, rho_tilde_invariant, GammaMode, InvariantOptions};
use yokonuma::{parse_poly, Budget, BraidWord, RhoSpec, TraceError, TraceParams};

/// Errors split by exit code: unusable input exits 2, an exhausted
/// resource budget exits 3.
#[derive(Clone, Debug)]
pub enum CliError {
    Input(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Resource(m) => m,
        }
    }

    fn at_line(self, lineno: usize) -> CliError {
        match self {
            CliError::Input(m) => CliError::Input(format!("line {lineno}: {m}")),
            CliError::Resource(m) => CliError::Resource(format!("line {lineno}: {m}")),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::Parameter(m) => CliError::Input(m),
            other => CliError::Resource(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "yhlink",
    version,
    about = "Exact three-variable invariants of framed links in the solid torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant of one braid word and print a JSON record.
    Compute(ComputeArgs),
    /// Compute a JSON-lines table for every braid word in a file.
    Table(TableArgs),
    /// Run a verification suite and report its checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Number of torus colors.
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Comma-separated colors: components must use exactly these colors.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<u32>>,
    /// Comma-separated colors for the averaged family (components may
    /// use any subset).
    #[arg(long, value_delimiter = ',')]
    dset: Option<Vec<u32>>,
    /// Crossing weight: "sym", "1", or an invertible polynomial.
    #[arg(long, default_value = "sym")]
    gamma: String,
    /// Trace-parameter overrides: lines of "<color> <winding> <polynomial>".
    #[arg(long)]
    params: Option<PathBuf>,
    /// Cap on the affine degree the trace evaluator will process.
    #[arg(long)]
    budget: Option<i64>,
}

#[derive(Args)]
struct ComputeArgs {
    /// The braid word, for example "B2: s1 s1 s1".
    #[arg(long)]
    braid: String,
    /// Write the record here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Input file: one braid word per line, optional "name=" prefix,
    /// '#' starts a comment.
    #[arg(long)]
    input: PathBuf,
    /// Write the records here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads. The output never depends on this.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite: iso, traces, markov, props, or skein.
    suite: String,
    /// Restrict to one number of colors.
    #[arg(long)]
    d: Option<u32>,
    /// Restrict to one number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Sample count for the randomized suites.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 2026)]
    seed: u64,
    /// One property for the props suite: markov, skein, quadratic,
    /// winding, or reduction.
    #[arg(long)]
    prop: Option<String>,
    /// Cap on the affine degree the trace evaluator will process.
    #[arg(long)]
    budget: Option<i64>,
}

/// One output row. Field order is the canonical JSON key order.
#[derive(Serialize)]
struct Record {
    name: String,
    n: usize,
    d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    set: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dset: Option<Vec<u32>>,
    gamma: String,
    components: usize,
    polynomial: String,
}

enum Family {
    ExactSupport(Vec<u32>),
    Averaged(Vec<u32>),
}

/// Everything needed to evaluate one word, shared across worker threads.
struct Job {
    d: u32,
    family: Family,
    gamma_label: String,
    params: BTreeMap<u32, TraceParams>,
    opts: InvariantOptions,
}

fn validate_colors(raw: &[u32], d: u32, flag: &str) -> Result<Vec<u32>, CliError> {
    if raw.is_empty() {
        return Err(CliError::Input(format!("{flag} needs at least one color")));
    }
    let mut out = raw.to_vec();
    out.sort_unstable();
    out.dedup();
    if out.len() != raw.len() {
        return Err(CliError::Input(format!("{flag} repeats a color")));
    }
    if out[0] < 1 || *out.last().unwrap() > d {
        return Err(CliError::Input(format!("{flag} colors must lie in 1..={d}")));
    }
    Ok(out)
}

fn parse_gamma(text: &str, d: u32) -> Result<(GammaMode, String), CliError> {
    match text {
        "sym" => Ok((GammaMode::Symbolic, "symbolic".to_string())),
        "1" => Ok((GammaMode::One, "1".to_string())),
        other => {
            let p = parse_poly(other, d).map_err(|e| CliError::Input(format!("--gamma: {e}")))?;
            let label = p.to_string();
            Ok((GammaMode::Fixed(p), label))
        }
    }
}

/// Lines of "<color> <winding> <polynomial>"; '#' starts a comment.
/// Windings not listed stay symbolic.
fn parse_params_file(text: &str, d: u32) -> Result<BTreeMap<u32, TraceParams>, CliError> {
    let mut map: BTreeMap<u32, TraceParams> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 3 {
            return Err(CliError::Input(format!(
                "params line {lineno}: expected <color> <winding> <polynomial>"
            )));
        }
        let color: u32 = tokens[0]
            .parse()
            .map_err(|_| CliError::Input(format!("params line {lineno}: bad color")))?;
        let winding: i64 = tokens[1]
            .parse()
            .map_err(|_| CliError::Input(format!("params line {lineno}: bad winding")))?;
        if color < 1 || color > d {
            return Err(CliError::Input(format!(
                "params line {lineno}: color must lie in 1..={d}"
            )));
        }
        if winding == 0 {
            return Err(CliError::Input(format!(
                "params line {lineno}: winding 0 is fixed to 1"
            )));
        }
        let poly = parse_poly(&tokens[2..].join(" "), d)
            .map_err(|e| CliError::Input(format!("params line {lineno}: {e}")))?;
        map.entry(color)
            .or_insert_with(|| TraceParams::symbolic(color))
            .set(winding, poly);
    }
    Ok(map)
}

fn build_job(args: &FamilyArgs) -> Result<Job, CliError> {
    let d = args.d;
    if d < 1 {
        return Err(CliError::Input("--d must be at least 1".to_string()));
    }
    let family = match (&args.set, &args.dset) {
        (Some(s), None) => Family::ExactSupport(validate_colors(s, d, "--set")?),
        (None, Some(s)) => Family::Averaged(validate_colors(s, d, "--dset")?),
        (None, None) => {
            return Err(CliError::Input(
                "give a color set with --set or --dset".to_string(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Input(
                "--set and --dset are mutually exclusive".to_string(),
            ))
        }
    };
    let (gamma, gamma_label) = parse_gamma(&args.gamma, d)?;
    let params = match &args.params {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            parse_params_file(&text, d)?
        }
        None => BTreeMap::new(),
    };
    let mut budget = Budget::default();
    if let Some(limit) = args.budget {
        budget.max_x_degree = limit;
    }
    Ok(Job {
        d,
        family,
        gamma_label,
        params,
        opts: InvariantOptions { gamma, budget },
    })
}

fn compute_record(job: &Job, name: &str, word: &BraidWord) -> Result<Record, CliError> {
    let poly = match &job.family {
        Family::ExactSupport(set) => {
            let mut params = BTreeMap::new();
            for &color in set {
                let p = job
                    .params
                    .get(&color)
                    .cloned()
                    .unwrap_or_else(|| TraceParams::symbolic(color));
                params.insert(color, p);
            }
            let spec = RhoSpec::with_params(job.d, set, params);
            rho_invariant(word, &spec, &job.opts)?
        }
        Family::Averaged(dset) => rho_tilde_invariant(word, job.d, dset, &job.params, &job.opts)?,
    };
    Ok(Record {
        name: name.to_string(),
        n: word.n(),
        d: job.d,
        set: match &job.family {
            Family::ExactSupport(s) => Some(s.clone()),
            Family::Averaged(_) => None,
        },
        dset: match &job.family {
            Family::Averaged(s) => Some(s.clone()),
            Family::ExactSupport(_) => None,
        },
        gamma: job.gamma_label.clone(),
        components: word.components(),
        polynomial: poly.to_string(),
    })
}

/// Strip comments, split an optional "name=" prefix, parse the word.
/// `Ok(None)` means the line is blank.
fn parse_named_word(raw: &str) -> Result<Option<(String, BraidWord)>, String> {
    let line = raw.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return Ok(None);
    }
    let (name, body) = match line.split_once('=') {
        Some((n, rest)) => {
            let n = n.trim();
            if n.is_empty() {
                return Err("empty name before '='".to_string());
            }
            (n.to_string(), rest.trim())
        }
        None => (String::new(), line),
    };
    let word = BraidWord::parse(body)?;
    let name = if name.is_empty() { word.to_string() } else { name };
    Ok(Some((name, word)))
}

/// Write everything at once so a failure never leaves partial output.
fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Input(format!("standard output: {e}"))),
    }
}

fn run_compute(args: &ComputeArgs) -> Result<(), CliError> {
    let job = build_job(&args.family)?;
    let (name, word) = match parse_named_word(&args.braid) {
        Ok(Some(pair)) => pair,
        Ok(None) => return Err(CliError::Input("--braid is empty".to_string())),
        Err(e) => return Err(CliError::Input(format!("--braid: {e}"))),
    };
    let record = compute_record(&job, &name, &word)?;
    let mut line = serde_json::to_string(&record).expect("records always serialize");
    line.push('\n');
    emit(args.output.as_deref(), &line)
}

fn run_table(args: &TableArgs) -> Result<(), CliError> {
    let job = build_job(&args.family)?;
    let text = fs::read_to_string(&args.input)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
    let mut rows: Vec<(usize, String, BraidWord)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        match parse_named_word(raw) {
            Ok(None) => {}
            Ok(Some((name, word))) => rows.push((idx + 1, name, word)),
            Err(e) => return Err(CliError::Input(format!("line {}: {e}", idx + 1))),
        }
    }

    let threads = args.threads.max(1).min(rows.len().max(1));
    let results: Vec<(usize, Result<Record, CliError>)> = if threads <= 1 {
        rows.iter()
            .map(|(lineno, name, word)| (*lineno, compute_record(&job, name, word)))
            .collect()
    } else {
        // Round-robin split; results land back in input order, so the
        // output bytes never depend on the thread count.
        let mut merged: Vec<Option<(usize, Result<Record, CliError>)>> =
            rows.iter().map(|_| None).collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for t in 0..threads {
                let rows = &rows;
                let job = &job;
                handles.push(scope.spawn(move || {
                    let mut part = Vec::new();
                    let mut k = t;
                    while k < rows.len() {
                        let (lineno, name, word) = &rows[k];
                        part.push((k, (*lineno, compute_record(job, name, word))));
                        k += threads;
                    }
                    part
                }));
            }
            for h in handles {
                for (k, item) in h.join().expect("a table worker panicked") {
                    merged[k] = Some(item);
                }
            }
        });
        merged
            .into_iter()
            .map(|slot| slot.expect("every row is computed exactly once"))
            .collect()
    };

    let mut out = String::new();
    for (lineno, result) in results {
        match result {
            Ok(rec) => {
                out.push_str(&serde_json::to_string(&rec).expect("records always serialize"));
                out.push('\n');
            }
            Err(e) => return Err(e.at_line(lineno)),
        }
    }
    emit(args.output.as_deref(), &out)
}

/// Returns whether every check passed.
fn run_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let checks = match args.suite.as_str() {
        "iso" => suites::iso_suite(args.d, args.n, args.samples.unwrap_or(100), args.seed)?,
        "traces" => {
            let mut c = suites::trace_axiom_checks(args.seed)?;
            c.extend(suites::trace_consistency_checks(
                args.samples.unwrap_or(100),
                args.seed,
            )?);
            c
        }
        "markov" => suites::markov_suite(args.samples.unwrap_or(200), args.seed, args.budget)?,
        "skein" => suites::skein_suite(args.samples.unwrap_or(100), args.seed)?,
        "props" => suites::props_suite(args.prop.as_deref(), args.samples, args.seed, args.budget)?,
        other => {
            return Err(CliError::Input(format!(
                "unknown suite {other:?}; expected iso, traces, markov, props, or skein"
            )))
        }
    };
    let mut failed = 0usize;
    for c in &checks {
        if c.pass {
            if c.detail.is_empty() {
                println!("ok {}", c.label);
            } else {
                println!("ok {} ({})", c.label, c.detail);
            }
        } else {
            failed += 1;
            println!("FAIL {}: {}", c.label, c.detail);
        }
    }
    println!("{} checks, {failed} failed", checks.len());
    Ok(failed == 0)
}

/// Parse the command line and run it; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Compute(args) => run_compute(args).map(|()| true),
        Command::Table(args) => run_table(args).map(|()| true),
        Command::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
