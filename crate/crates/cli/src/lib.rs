//! The `hypermatch` command line. [`run`] parses arguments, writes the
//! report to `out` and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or a verdict of true |
//! | 1 | a verdict of false |
//! | 2 | usage error or unreadable input |
//! | 3 | instance too large |

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hypermatch::constructions::{is_saturated, ConstructionKind, ConstructionSpec};
use hypermatch::formulas::{
    alpha_k_result, anti_ramsey_3, anti_ramsey_large_n, lower_bound_perfect, s_threshold_result,
    turan_3, turan_conjectured, FormulaResult, FormulaValue,
};
use hypermatch::oracle::{brute_cross_intersecting_max, brute_turan_stable_threads, hilton_milner_bound};
use hypermatch::rainbow::{
    build_h1_coloring, build_h2_coloring, build_turan_plus_one_coloring,
    certify_no_rainbow_perfect_matching_threads,
};
use hypermatch::shifting::{is_dominance_closed, is_stable, shift, stabilize};
use hypermatch::{Certificate, EdgeColoring, UniformHypergraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "hypermatch", version, about = "Turán and anti-Ramsey numbers of hypergraph matchings")]
struct Cli {
    /// Worker threads for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a closed-form value.
    Formulas {
        #[arg(long, value_enum)]
        name: FormulaName,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        /// Bracket width for `alpha`.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Build a construction and write it in the text format.
    Construct {
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Clique vertex set of `D`, comma separated.
        #[arg(long, value_delimiter = ',')]
        u: Option<Vec<usize>>,
        /// Cover set of `Hcover`, comma separated.
        #[arg(long, value_delimiter = ',')]
        w: Option<Vec<usize>>,
        /// A construction spec as inline JSON or a path to a JSON file.
        #[arg(long, conflicts_with_all = ["kind", "n", "k", "s", "u", "w"])]
        spec: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a claim about a hypergraph or coloring file and print a certificate.
    Verify {
        #[arg(long, value_enum)]
        certificate: Claim,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Compare an exhaustive search with its closed form.
    Oracle {
        #[arg(long, value_enum)]
        name: OracleName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Print a CSV table of values over a range of n.
    Table {
        #[arg(long, value_enum)]
        family: TableFamily,
        /// Inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n_range: (u64, u64),
        /// Restrict to one value of s.
        #[arg(long)]
        s: Option<u64>,
    },
    /// Run randomized shifting and matching checks.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormulaName {
    Turan3,
    TuranConjectured,
    Ar3,
    ArLarge,
    LbPerfect,
    S0,
    Alpha,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "D")]
    D,
    #[value(name = "Hcover")]
    Hcover,
    #[value(name = "DScript")]
    DScript,
    #[value(name = "H1")]
    H1,
    #[value(name = "H2")]
    H2,
    TuranPlusOne,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Claim {
    NoRainbowPm,
    NuEqualsS,
    Stable,
    Saturated,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleName {
    Turan,
    HiltonMilner,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFamily {
    Ar3,
    Turan3,
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let (a, b) = text.split_once("..").ok_or("expected a..b")?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    TooLarge(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::TooLarge(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::TooLarge(m) | Failure::Io(m) => m,
        }
    }
}

impl From<hypermatch::Error> for Failure {
    fn from(e: hypermatch::Error) -> Self {
        match e {
            hypermatch::Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let threads = cli.threads.max(1);
    let result = match cli.command {
        Command::Formulas { name, n, k, s, tol } => formulas(out, name, n, k, s, tol),
        Command::Construct {
            kind,
            n,
            k,
            s,
            u,
            w,
            spec,
            output,
        } => construct(out, kind, n, k, s, u, w, spec, output),
        Command::Verify { certificate, input, s } => verify(out, certificate, &input, s, threads),
        Command::Oracle { name, n, k, s, m, l } => oracle(out, name, n, k, s, m, l, threads),
        Command::Table { family, n_range, s } => table(out, family, n_range, s),
        Command::Props { seed, cases, max_n } => props(out, seed, cases, max_n),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

/// Reads a hypergraph file.
pub fn parse_hypergraph(path: &Path) -> hypermatch::Result<UniformHypergraph> {
    let text = read(path)?;
    UniformHypergraph::from_text(&text)
}

/// Reads a coloring file.
pub fn parse_coloring(path: &Path) -> hypermatch::Result<EdgeColoring> {
    let text = read(path)?;
    EdgeColoring::from_text(&text)
}

fn read(path: &Path) -> hypermatch::Result<String> {
    fs::read_to_string(path)
        .map_err(|e| hypermatch::Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn formulas(out: &mut dyn Write, name: FormulaName, n: Option<u64>, k: Option<u64>, s: Option<u64>, tol: f64) -> Outcome {
    let result: FormulaResult = match name {
        FormulaName::Turan3 => turan_3(need(n, "n")?, need(s, "s")?),
        FormulaName::TuranConjectured => turan_conjectured(need(n, "n")?, need(k, "k")?, need(s, "s")?),
        FormulaName::Ar3 => anti_ramsey_3(need(n, "n")?, need(s, "s")?),
        FormulaName::ArLarge => anti_ramsey_large_n(need(n, "n")?, need(k, "k")?, need(s, "s")?),
        FormulaName::LbPerfect => lower_bound_perfect(need(n, "n")?, need(k, "k")?)?,
        FormulaName::S0 => s_threshold_result(need(n, "n")?, need(k, "k")?)?,
        FormulaName::Alpha => {
            let k = usize::try_from(need(k, "k")?).map_err(|_| Failure::Usage("k is too large".into()))?;
            alpha_k_result(k, tol)?
        }
    };
    print_json(out, &result)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn construct(
    out: &mut dyn Write,
    kind: Option<Kind>,
    n: Option<usize>,
    k: Option<usize>,
    s: Option<usize>,
    u: Option<Vec<usize>>,
    w: Option<Vec<usize>>,
    spec: Option<String>,
    output: Option<PathBuf>,
) -> Outcome {
    let text = if let Some(spec) = spec {
        let source = if spec.trim_start().starts_with('{') {
            spec
        } else {
            fs::read_to_string(&spec)?
        };
        let spec: ConstructionSpec =
            serde_json::from_str(&source).map_err(|e| Failure::Usage(format!("bad spec: {e}")))?;
        spec.resolved()?.build()?.to_text()
    } else {
        let kind = need(kind, "kind")?;
        let n = need(n, "n")?;
        let plain = |c: ConstructionKind, k: usize| -> Result<String, Failure> {
            let mut spec = ConstructionSpec::new(c, n, k, need(s, "s")?);
            spec.u = u.clone();
            spec.w = w.clone();
            Ok(spec.resolved()?.build()?.to_text())
        };
        match kind {
            Kind::D => plain(ConstructionKind::D, need(k, "k")?)?,
            Kind::Hcover => plain(ConstructionKind::Hcover, need(k, "k")?)?,
            Kind::DScript => plain(ConstructionKind::DScript, k.unwrap_or(3))?,
            Kind::H1 => build_h1_coloring(n, need(k, "k")?)?.to_text(),
            Kind::H2 => build_h2_coloring(n, need(k, "k")?)?.to_text(),
            Kind::TuranPlusOne => build_turan_plus_one_coloring(n, need(k, "k")?, need(s, "s")?)?
                .coloring
                .to_text(),
        }
    };
    match output {
        Some(path) => {
            fs::write(&path, &text)?;
            print_json(out, &json!({ "written": path.display().to_string(), "bytes": text.len() }))?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn verify(out: &mut dyn Write, claim: Claim, input: &Path, s: Option<usize>, threads: usize) -> Outcome {
    let cert = match claim {
        Claim::NoRainbowPm => certify_no_rainbow_perfect_matching_threads(&parse_coloring(input)?, threads)?,
        Claim::NuEqualsS => {
            let s = need(s, "s")?;
            let h = parse_hypergraph(input)?;
            let start = Instant::now();
            let m = h.maximum_matching();
            let mut cert = Certificate::new(format!("matching number equals {s}"))
                .with("n", h.n())
                .with("k", h.k())
                .with("edges", h.edge_count())
                .with("s", s)
                .with("matching_number", m.size())
                .with("maximum_matching", json!(m.edge_lists()));
            cert.search_size = h.edge_count() as u64;
            cert.verdict = m.size() == s;
            cert.elapsed_ms = start.elapsed().as_millis() as u64;
            cert
        }
        Claim::Stable => {
            let h = parse_hypergraph(input)?;
            let start = Instant::now();
            let stable = is_stable(&h);
            let closed = is_dominance_closed(&h);
            let mut cert = Certificate::new("fixed by every (i,j)-shift")
                .with("n", h.n())
                .with("k", h.k())
                .with("edges", h.edge_count())
                .with("shift_check", stable)
                .with("dominance_check", closed);
            cert.search_size = h.edge_count() as u64;
            cert.verdict = stable && closed;
            cert.elapsed_ms = start.elapsed().as_millis() as u64;
            cert
        }
        Claim::Saturated => {
            let s = need(s, "s")?;
            let h = parse_hypergraph(input)?;
            let start = Instant::now();
            let nu = h.matching_number();
            let mut cert = Certificate::new(format!("{s}-saturated"))
                .with("n", h.n())
                .with("k", h.k())
                .with("edges", h.edge_count())
                .with("s", s)
                .with("matching_number", nu);
            cert.search_size = hypermatch::combinatorics::small_binomial(h.n(), h.k()) - h.edge_count() as u64;
            cert.verdict = is_saturated(&h, s);
            cert.elapsed_ms = start.elapsed().as_millis() as u64;
            cert
        }
    };
    print_json(out, &cert)?;
    Ok(if cert.verdict { 0 } else { 1 })
}

#[derive(Serialize)]
struct Agreement {
    oracle: u64,
    formula: u64,
    agree: bool,
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    out: &mut dyn Write,
    name: OracleName,
    n: Option<usize>,
    k: usize,
    s: Option<usize>,
    m: Option<usize>,
    l: usize,
    threads: usize,
) -> Outcome {
    let (oracle, formula) = match name {
        OracleName::Turan => {
            let (n, s) = (need(n, "n")?, need(s, "s")?);
            let brute = brute_turan_stable_threads(n, k, s, threads)?;
            let closed = if k == 3 {
                turan_3(n as u64, s as u64 + 1)
            } else {
                turan_conjectured(n as u64, k as u64, s as u64)
            };
            (brute, integer(&closed)?)
        }
        OracleName::HiltonMilner => {
            let m = need(m.or(n), "m")?;
            let brute = brute_cross_intersecting_max(m, l)?;
            let bound = hilton_milner_bound(m, l);
            (brute, u64::try_from(bound).map_err(|_| Failure::Usage("bound out of range".into()))?)
        }
    };
    let agree = oracle == formula;
    print_json(out, &Agreement { oracle, formula, agree })?;
    Ok(if agree { 0 } else { 1 })
}

fn integer(r: &FormulaResult) -> Result<u64, Failure> {
    match &r.value {
        FormulaValue::Integer(v) => u64::try_from(v).map_err(|_| Failure::Usage(format!("{} is out of range", r.name))),
        FormulaValue::Interval { .. } => Err(Failure::Usage(format!("{} is not an integer", r.name))),
    }
}

fn table(out: &mut dyn Write, family: TableFamily, (a, b): (u64, u64), only_s: Option<u64>) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::Io(e.to_string());
    w.write_record(["family", "n", "s", "value", "valid"]).map_err(csv_err)?;
    for n in a..=b {
        let (lo, hi) = match family {
            TableFamily::Ar3 => (2, n / 3),
            TableFamily::Turan3 => (1, n / 3 + 1),
        };
        for s in lo..=hi {
            if only_s.is_some_and(|t| t != s) {
                continue;
            }
            let (name, r) = match family {
                TableFamily::Ar3 => ("ar3", anti_ramsey_3(n, s)),
                TableFamily::Turan3 => ("turan3", turan_3(n, s)),
            };
            let value = r.integer().map(|v| v.to_string()).unwrap_or_default();
            let valid = serde_json::to_value(r.valid).map_err(|e| Failure::Io(e.to_string()))?;
            w.write_record([name, &n.to_string(), &s.to_string(), &value, valid.as_str().unwrap_or("")])
                .map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    out.write_all(&bytes)?;
    Ok(0)
}

fn props(out: &mut dyn Write, seed: u64, cases: usize, max_n: usize) -> Outcome {
    if !(3..=10).contains(&max_n) {
        return Err(Failure::Usage(format!("--max-n must be between 3 and 10, got {max_n}")));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let n = rng.gen_range(3..=max_n);
        let density: f64 = rng.gen_range(0.1..0.7);
        let keep: Vec<bool> = (0..hypermatch::combinatorics::small_binomial(n, 3))
            .map(|_| rng.gen_bool(density))
            .collect();
        let masks = hypermatch::combinatorics::KSubsets::new(n, 3)
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e));
        let h = UniformHypergraph::from_masks(n, 3, masks)?;
        let nu = h.matching_number();
        if !h.has_matching_of_size(nu) || h.has_matching_of_size(nu + 1) {
            failures.push(json!({ "case": case, "check": "matching number", "graph": h.to_text() }));
        }
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let shifted = shift(&h, i, j)?;
        if shifted.edge_count() != h.edge_count() || shifted.matching_number() > nu {
            failures.push(json!({ "case": case, "check": format!("shift {i} {j}"), "graph": h.to_text() }));
        }
        let st = stabilize(&h);
        if stabilize(&st) != st || !is_dominance_closed(&st) || is_stable(&h) != is_dominance_closed(&h) {
            failures.push(json!({ "case": case, "check": "stabilize", "graph": h.to_text() }));
        }
    }
    let ok = failures.is_empty();
    print_json(out, &json!({ "seed": seed, "cases": cases, "failures": failures }))?;
    Ok(if ok { 0 } else { 1 })
}
