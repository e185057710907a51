//! Library side of the `hyperlambda` binary, so commands can be driven in-process.
//!
//! Exit codes: 0 converged or true, 1 usage or parse error, 2 best-effort or false.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlambda::bounds::{bound_suite_max, bound_suite_min, entry_bounds, structural_bounds, BoundReport};
use hyperlambda::combinatorics as comb;
use hyperlambda::io::{parse, to_json};
use hyperlambda::solver::{brute_force_lambda, lambda_curve};
use hyperlambda::{lambda_max, lambda_min, EigenResult, Family, SolveOptions, Status, Target, WeightedHypergraph};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_WEAK: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hyperlambda", version, about = "p-spectral radius of weighted uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Graph file, JSON or text.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Run restarts on one thread. Output is identical either way.
    #[arg(long)]
    serial: bool,
}

impl Common {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            tol: self.tol,
            restarts: self.restarts,
            seed: self.seed,
            parallel: !self.serial,
            ..SolveOptions::default()
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TargetArg {
    Max,
    Min,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Max => Target::Max,
            TargetArg::Min => Target::Min,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Property {
    Connected,
    KTight,
    OddTransversal,
    EvenTransversal,
    KLinear,
    KSetRegular,
    Steiner,
    EquivalenceClasses,
    Chromatic,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FamilyArg {
    Complete,
    Multipartite,
    Turan,
    Cycle,
    BetaStar,
    TStar,
    SingleEdge,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// λ^(p) or λ_min^(p) with residual and status.
    Compute {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = TargetArg::Max)]
        target: TargetArg,
        /// Print the eigenvector (12 significant digits).
        #[arg(long)]
        vector: bool,
    },
    /// Audit every bound against the computed extremes.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate one combinatorial predicate.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        k: Option<usize>,
    },
    /// CSV of p, lambda, lambda_min, h, f over a p grid.
    Curve {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1.0)]
        p_from: f64,
        #[arg(long, default_value_t = 6.0)]
        p_to: f64,
        #[arg(long, default_value_t = 11)]
        steps: usize,
    },
    /// Brute-force estimate, independent of the main solver.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = TargetArg::Max)]
        target: TargetArg,
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
    },
    /// Write a standard family graph as JSON.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Comma-separated part sizes.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// Destination file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// λ^(q) of seeded random r-graphs, normalized by prob·n^{r-r/q}.
    Random {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
}

/// A command failure, carrying the exit code and message for stderr.
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    match dispatch(cli.cmd, &echo, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Cmd, echo: &str, out: &mut dyn Write) -> Outcome {
    match cmd {
        Cmd::Compute { common, target, vector } => compute(&common, target.into(), vector, echo, out),
        Cmd::Bounds { common } => bounds(&common, echo, out),
        Cmd::Check { common, property, k } => check(&common, property, k, echo, out),
        Cmd::Curve { common, p_from, p_to, steps } => curve(&common, p_from, p_to, steps, echo, out),
        Cmd::Oracle { common, target, samples } => oracle(&common, target.into(), samples, echo, out),
        Cmd::Construct { family, r, n, k, t, parts, output } => construct(family, r, n, k, t, parts, output, out),
        Cmd::Random { common, r, n, prob, q, trials } => random(&common, r, n, prob, q, trials, echo, out),
    }
}

fn load(common: &Common) -> Result<(WeightedHypergraph, String), Failure> {
    let path = common.input.as_ref().ok_or_else(|| Failure(EXIT_USAGE, "--input is required".into()))?;
    let bytes = fs::read(path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let g = parse(&bytes).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    Ok((g, format!("{:x}", Sha256::digest(&bytes))))
}

fn check_p(p: f64, flag: &str) -> Result<(), Failure> {
    if p >= 1.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Failure(EXIT_USAGE, format!("{flag} must be a finite real >= 1, got {p}")))
    }
}

/// Rounds to 12 significant digits; -0 becomes 0.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Converged => EXIT_OK,
        Status::BestEffort => EXIT_WEAK,
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Converged => "converged",
        Status::BestEffort => "best-effort",
    }
}

fn solve(g: &WeightedHypergraph, p: f64, target: Target, opts: &SolveOptions) -> Result<EigenResult, Failure> {
    Ok(match target {
        Target::Max => lambda_max(g, p, opts)?,
        Target::Min => lambda_min(g, p, opts)?,
    })
}

fn compute(common: &Common, target: Target, vector: bool, echo: &str, out: &mut dyn Write) -> Outcome {
    let (g, digest) = load(common)?;
    check_p(common.p, "--p")?;
    let res = solve(&g, common.p, target, &common.options())?;
    let label = if target == Target::Max { "lambda" } else { "lambda_min" };
    let coords: Vec<f64> = res.vector.coords().iter().map(|&v| sig12(v)).collect();
    if common.json {
        let mut v = json!({
            "command": echo,
            "input_digest": digest,
            "p": common.p,
            "seed": common.seed,
            "target": if target == Target::Max { "max" } else { "min" },
            "value": res.value,
            "residual": res.residual,
            "status": status_str(res.status),
            "iterations": res.iterations,
            "restarts_used": res.restarts_used,
        });
        if vector {
            v["vector"] = json!(coords);
        }
        emit_json(out, &v)?;
    } else {
        writeln!(out, "{label} = {:.7}", res.value)?;
        match res.residual {
            Some(r) => writeln!(out, "residual = {r:.3e}")?,
            None => writeln!(out, "residual = n/a")?,
        }
        writeln!(out, "status = {}", status_str(res.status))?;
        if vector {
            let text: Vec<String> = coords.iter().map(|v| v.to_string()).collect();
            writeln!(out, "vector = {}", text.join(" "))?;
        }
    }
    Ok(status_code(res.status))
}

fn bounds(common: &Common, echo: &str, out: &mut dyn Write) -> Outcome {
    let (g, digest) = load(common)?;
    let p = common.p;
    check_p(p, "--p")?;
    let opts = common.options();
    let max = lambda_max(&g, p, &opts)?;
    let min = lambda_min(&g, p, &opts)?;
    let mut reports: Vec<BoundReport> = bound_suite_max(&g, p, Some(max.value))?;
    reports.extend(structural_bounds(&g, p, Some(max.value), None)?);
    reports.extend(bound_suite_min(&g, p, Some(min.value), Some(max.value))?);
    reports.extend(entry_bounds(&g, p, &max)?);
    let violated: Vec<&str> = reports.iter().filter(|b| b.violated(common.tol)).map(|b| b.name.as_str()).collect();
    if common.json {
        emit_json(
            out,
            &json!({
                "command": echo,
                "input_digest": digest,
                "p": p,
                "lambda": max.value,
                "lambda_status": status_str(max.status),
                "lambda_min": min.value,
                "lambda_min_status": status_str(min.status),
                "bounds": reports,
                "violated": violated,
            }),
        )?;
    } else {
        writeln!(out, "lambda = {:.7} ({})", max.value, status_str(max.status))?;
        writeln!(out, "lambda_min = {:.7} ({})", min.value, status_str(min.status))?;
        writeln!(
            out,
            "{:<22} {:<6} {:>14} {:>14} {:>12} {:<8} source",
            "name", "side", "bound", "value", "slack", "applies"
        )?;
        for b in &reports {
            let value = b.value.map_or("-".into(), |v| format!("{v:.7}"));
            let slack = b.slack.map_or("-".into(), |s| format!("{s:.3e}"));
            let side = format!("{:?}", b.side).to_lowercase();
            let mark = if b.violated(common.tol) { " VIOLATED" } else { "" };
            writeln!(
                out,
                "{:<22} {:<6} {:>14.7} {:>14} {:>12} {:<8} {}{mark}",
                b.name, side, b.bound, value, slack, b.applies, b.source
            )?;
        }
    }
    let weak = max.status != Status::Converged || min.status != Status::Converged || !violated.is_empty();
    Ok(if weak { EXIT_WEAK } else { EXIT_OK })
}

fn need_k(k: Option<usize>, property: &str) -> Result<usize, Failure> {
    k.ok_or_else(|| Failure(EXIT_USAGE, format!("--k is required for {property}")))
}

fn check(common: &Common, property: Property, k: Option<usize>, echo: &str, out: &mut dyn Write) -> Outcome {
    let (g, digest) = load(common)?;
    // (truth value, detail for the report)
    let (truth, detail): (bool, Value) = match property {
        Property::Connected => (comb::is_connected(&g), Value::Null),
        Property::KTight => {
            let t = comb::is_k_tight(&g, need_k(k, "k-tight")?)?;
            (t.tight, json!(t.witness))
        }
        Property::OddTransversal => {
            let u = comb::odd_transversal(&g);
            (u.is_some(), json!(u))
        }
        Property::EvenTransversal => {
            let u = comb::even_transversal(&g);
            (u.is_some(), json!(u))
        }
        Property::KLinear => (comb::is_k_linear(&g, need_k(k, "k-linear")?)?, Value::Null),
        Property::KSetRegular => (comb::is_k_set_regular(&g, need_k(k, "k-set-regular")?)?, Value::Null),
        Property::Steiner => (comb::is_steiner(&g, need_k(k, "steiner")?)?, Value::Null),
        Property::EquivalenceClasses => (true, json!(comb::equivalence_classes(&g))),
        Property::Chromatic => (true, json!(comb::chromatic_number_exact(&g)?)),
    };
    let name = property.to_possible_value().expect("no skipped variants").get_name().to_string();
    if common.json {
        emit_json(
            out,
            &json!({ "command": echo, "input_digest": digest, "property": name, "k": k, "value": truth, "detail": detail }),
        )?;
    } else {
        match property {
            Property::EquivalenceClasses | Property::Chromatic => writeln!(out, "{detail}")?,
            _ if truth && !detail.is_null() => writeln!(out, "true U = {detail}")?,
            _ if truth => writeln!(out, "true")?,
            Property::KTight if !detail.is_null() => writeln!(out, "false U = {detail}")?,
            _ => writeln!(out, "false")?,
        }
    }
    Ok(if truth { EXIT_OK } else { EXIT_WEAK })
}

fn curve(common: &Common, from: f64, to: f64, steps: usize, echo: &str, out: &mut dyn Write) -> Outcome {
    let (g, digest) = load(common)?;
    check_p(from, "--p-from")?;
    check_p(to, "--p-to")?;
    let grid: Vec<f64> = match steps {
        0 => return Err(Failure(EXIT_USAGE, "--steps must be at least 1".into())),
        1 if from == to => vec![from],
        1 => return Err(Failure(EXIT_USAGE, "--steps 1 needs --p-from equal to --p-to".into())),
        _ if !(from < to) => return Err(Failure(EXIT_USAGE, "--p-from must be below --p-to".into())),
        _ => (0..steps).map(|i| from + (to - from) * i as f64 / (steps - 1) as f64).collect(),
    };
    let points = lambda_curve(&g, &grid, &common.options())?;
    if common.json {
        let rows: Vec<Value> = points
            .iter()
            .map(|c| json!({ "p": c.p, "lambda": c.lambda, "lambda_min": c.lambda_min, "h": c.h, "f": c.f }))
            .collect();
        emit_json(out, &json!({ "command": echo, "input_digest": digest, "points": rows }))?;
    } else {
        writeln!(out, "p,lambda,lambda_min,h,f")?;
        for c in &points {
            writeln!(out, "{},{},{},{},{}", sig12(c.p), sig12(c.lambda), sig12(c.lambda_min), sig12(c.h), sig12(c.f))?;
        }
    }
    Ok(EXIT_OK)
}

fn oracle(common: &Common, target: Target, samples: usize, echo: &str, out: &mut dyn Write) -> Outcome {
    let (g, digest) = load(common)?;
    check_p(common.p, "--p")?;
    if samples == 0 {
        return Err(Failure(EXIT_USAGE, "--samples must be positive".into()));
    }
    let value = brute_force_lambda(&g, common.p, target, samples, common.seed);
    if common.json {
        emit_json(
            out,
            &json!({ "command": echo, "input_digest": digest, "p": common.p, "seed": common.seed, "value": value }),
        )?;
    } else {
        writeln!(out, "oracle = {value:.7}")?;
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: FamilyArg,
    r: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    t: Option<usize>,
    parts: Option<Vec<usize>>,
    output: Option<PathBuf>,
    out: &mut dyn Write,
) -> Outcome {
    let req = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure(EXIT_USAGE, format!("--{flag} is required for this family")))
    };
    let spec = match family {
        FamilyArg::Complete => Family::Complete { r: req(r, "r")?, n: req(n, "n")? },
        FamilyArg::Multipartite => Family::CompleteMultipartite {
            r: req(r, "r")?,
            parts: parts.ok_or_else(|| Failure(EXIT_USAGE, "--parts is required for this family".into()))?,
        },
        FamilyArg::Turan => Family::Turan { n: req(n, "n")?, k: req(k, "k")? },
        FamilyArg::Cycle => Family::Cycle { r: req(r, "r")?, n: req(n, "n")? },
        FamilyArg::BetaStar => Family::BetaStar { r: req(r, "r")?, k: req(k, "k")? },
        FamilyArg::TStar => Family::TStar { r: req(r, "r")?, t: req(t, "t")?, n: req(n, "n")? },
        FamilyArg::SingleEdge => Family::SingleEdge { r: req(r, "r")? },
    };
    let text = to_json(&WeightedHypergraph::construct(&spec)?) + "\n";
    match output {
        Some(path) => fs::write(&path, text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?,
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn random(
    common: &Common,
    r: usize,
    n: usize,
    prob: f64,
    q: f64,
    trials: usize,
    echo: &str,
    out: &mut dyn Write,
) -> Outcome {
    check_p(q, "--q")?;
    if !(0.0..=1.0).contains(&prob) {
        return Err(Failure(EXIT_USAGE, format!("--prob must lie in [0, 1], got {prob}")));
    }
    if trials == 0 {
        return Err(Failure(EXIT_USAGE, "--trials must be positive".into()));
    }
    let scale = prob * (n as f64).powf(r as f64 - r as f64 / q);
    let mut rows = Vec::with_capacity(trials);
    for i in 0..trials {
        let seed = common.seed.wrapping_add(i as u64);
        let g = WeightedHypergraph::random_gnp(r, n, prob, seed)?;
        let res = lambda_max(&g, q, &SolveOptions { seed, ..common.options() })?;
        rows.push((seed, g.edge_count(), res.value, res.value / scale, res.status));
    }
    if common.json {
        let trials: Vec<Value> = rows
            .iter()
            .map(|&(seed, m, l, ratio, s)| json!({ "seed": seed, "edges": m, "lambda": l, "ratio": ratio, "status": status_str(s) }))
            .collect();
        emit_json(out, &json!({ "command": echo, "normalizer": scale, "trials": trials }))?;
    } else {
        writeln!(out, "seed,edges,lambda,ratio,status")?;
        for (seed, m, l, ratio, s) in rows {
            writeln!(out, "{seed},{m},{},{},{}", sig12(l), sig12(ratio), status_str(s))?;
        }
    }
    Ok(EXIT_OK)
}
