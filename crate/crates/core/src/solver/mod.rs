//! Numerical computation of λ^(p)(G) and λ_min^(p)(G).

mod ascent;
mod curve;
mod oracle;
mod simplex;
mod sphere;

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use curve::{lambda_curve, CurvePoint};
pub use oracle::brute_force_lambda;

use crate::combinatorics::{equivalence_classes, odd_transversal, vertex_degrees};
use crate::error::{invalid, Error, Result};
use crate::graph::WeightedHypergraph;
use crate::numeric::{factorial, normalize_p, p_norm, signed_pow};
use crate::polyform::{eval_unchecked, grad_into, PointOnSphere};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Auto,
    FixedPoint,
    ProjectedGradient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Eigenequations met to tolerance and the value is known to be the global extremum.
    Converged,
    /// Best value over restarts; global optimality not certified or tolerance not met.
    BestEffort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    /// Shift ρ of the fixed-point map; `None` uses (r-1)!·Δ(G).
    pub shift: Option<f64>,
    pub seed: u64,
    pub mode: Mode,
    /// Run restarts on the rayon pool. Results do not depend on this flag.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 100_000, restarts: 32, shift: None, seed: 0, mode: Mode::Auto, parallel: true }
    }
}

impl SolveOptions {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return invalid(format!("tol must be positive, got {}", self.tol));
        }
        if self.restarts == 0 {
            return invalid("restarts must be at least 1");
        }
        if let Some(s) = self.shift {
            if !(s >= 0.0 && s.is_finite()) {
                return invalid(format!("shift must be a nonnegative real, got {s}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub value: f64,
    pub vector: PointOnSphere,
    /// Max-norm defect of the eigenequations; `None` at p = 1.
    pub residual: Option<f64>,
    pub iterations: usize,
    pub restarts_used: usize,
    pub status: Status,
    pub target: Target,
}

/// Outcome of a single local run.
#[derive(Debug, Clone)]
pub(crate) struct Run {
    pub value: f64,
    pub x: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 1.0 && p.is_finite()) {
        return invalid(format!("p must be a finite real >= 1, got {p}"));
    }
    Ok(())
}

/// Per-coordinate defect |λ x_k|x_k|^{p-2} - (1/r) ∂_k P|, maximized.
pub(crate) fn residual_raw(lambda: f64, x: &[f64], grad: &[f64], p: f64, r: f64) -> f64 {
    x.iter().zip(grad).map(|(&xk, &gk)| (lambda * signed_pow(xk, p - 1.0) - gk / r).abs()).fold(0.0, f64::max)
}

fn residual_at(g: &WeightedHypergraph, p: f64, lambda: f64, x: &[f64]) -> f64 {
    let mut grad = vec![0.0; x.len()];
    grad_into(g, x, &mut grad);
    residual_raw(lambda, x, &grad, p, g.rank() as f64)
}

pub fn eigen_residual(g: &WeightedHypergraph, p: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    check_p(p)?;
    if p == 1.0 {
        return invalid("eigenequations are not available at p = 1");
    }
    if x.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: x.len() });
    }
    let nrm = p_norm(x, p);
    if (nrm - 1.0).abs() > 1e-9 {
        return invalid(format!("vector is not on the unit sphere (norm {nrm})"));
    }
    Ok(residual_at(g, p, lambda, x))
}

/// Collatz–Wielandt envelope (min_k, max_k) of (1/r) ∂_k P(x) x_k^{1-p}.
/// `x` is rescaled onto the unit sphere first.
pub fn collatz_wielandt(g: &WeightedHypergraph, p: f64, x: &[f64]) -> Result<(f64, f64)> {
    check_p(p)?;
    if p == 1.0 {
        return invalid("Collatz-Wielandt envelope needs p > 1");
    }
    if x.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: x.len() });
    }
    if let Some(k) = x.iter().position(|&v| !(v > 0.0)) {
        return invalid(format!("entry {k} is not positive"));
    }
    let mut y = x.to_vec();
    normalize_p(&mut y, p);
    let mut grad = vec![0.0; y.len()];
    grad_into(g, &y, &mut grad);
    let r = g.rank() as f64;
    let ratios = y.iter().zip(&grad).map(|(&v, &gk)| gk / r * v.powf(1.0 - p));
    Ok(ratios.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), q| (lo.min(q), hi.max(q))))
}

/// For an approximate eigenpair at p = r, whether |λ| ≤ λ^(r)(G) + 1e-6.
pub fn algebraic_modulus_check(g: &WeightedHypergraph, lambda: f64, x: &[f64], opts: &SolveOptions) -> Result<bool> {
    let p = g.rank() as f64;
    let mut y = x.to_vec();
    if y.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: y.len() });
    }
    if !normalize_p(&mut y, p) {
        return invalid("eigenvector must be nonzero");
    }
    let res = residual_at(g, p, lambda, &y);
    if res > 1e-6 {
        return invalid(format!("not an eigenpair at p = r (residual {res:e})"));
    }
    Ok(lambda.abs() <= lambda_max(g, p, opts)?.value + 1e-6)
}

fn run_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random point of the open simplex (flat Dirichlet).
fn random_simplex(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut y: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln() + 1e-12).collect();
    let s: f64 = y.iter().sum();
    y.iter_mut().for_each(|v| *v /= s);
    y
}

fn class_average(x: &mut [f64], classes: &[Vec<usize>]) {
    for c in classes.iter().filter(|c| c.len() > 1) {
        let m = c.iter().map(|&v| x[v]).sum::<f64>() / c.len() as f64;
        c.iter().for_each(|&v| x[v] = m);
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    Ordering::Equal
}

/// Best run: extremal value, ties within `tol` broken by the smallest vector.
fn pick(runs: &[Run], target: Target, tol: f64) -> usize {
    let better = |a: f64, b: f64| if target == Target::Max { a > b } else { a < b };
    let mut best = 0;
    for i in 1..runs.len() {
        if better(runs[i].value, runs[best].value) {
            best = i;
        }
    }
    let v = runs[best].value;
    let slack = tol * v.abs().max(1.0);
    let mut chosen = best;
    for (i, run) in runs.iter().enumerate() {
        if (run.value - v).abs() <= slack && lex_cmp(&run.x, &runs[chosen].x) == Ordering::Less {
            chosen = i;
        }
    }
    chosen
}

fn execute<F>(count: usize, parallel: bool, f: F) -> Vec<Run>
where
    F: Fn(usize) -> Run + Sync + Send,
{
    if parallel {
        (0..count).into_par_iter().map(f).collect()
    } else {
        (0..count).map(f).collect()
    }
}

fn default_shift(g: &WeightedHypergraph) -> f64 {
    let delta = vertex_degrees(g).into_iter().fold(0.0, f64::max);
    factorial(g.rank() - 1) * delta
}

fn empty_result(g: &WeightedHypergraph, p: f64, target: Target) -> EigenResult {
    let n = g.order();
    let x = if n == 0 { Vec::new() } else { vec![(n as f64).powf(-1.0 / p); n] };
    EigenResult {
        value: 0.0,
        vector: PointOnSphere::from_normalized(x, p),
        residual: (p > 1.0).then_some(0.0),
        iterations: 0,
        restarts_used: 0,
        status: Status::Converged,
        target,
    }
}

/// Nonnegative starting points for the maximization, in y = |x|^p coordinates:
/// the barycenter, perturbed edge barycenters, then random simplex points.
fn max_starts(g: &WeightedHypergraph, restarts: usize, seed: u64) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut starts = vec![vec![1.0 / n as f64; n]];
    let m = g.edge_count();
    let edge_seeds = (restarts / 4).min(m);
    let edges: Vec<&[usize]> = g.edges().map(|(e, _)| e).collect();
    for j in 0..edge_seeds {
        let e = edges[j * m / edge_seeds];
        let mut y = vec![0.05; n];
        e.iter().for_each(|&v| y[v] = 1.0);
        let s: f64 = y.iter().sum();
        starts.push(y.into_iter().map(|v| v / s).collect());
    }
    let mut i = 0;
    while starts.len() < restarts.max(1) {
        starts.push(random_simplex(&mut run_rng(seed, i), n));
        i += 1;
    }
    starts.truncate(restarts.max(1));
    starts
}

fn max_runs(
    g: &WeightedHypergraph,
    p: f64,
    opts: &SolveOptions,
    warm: Option<&[f64]>,
    classes: &[Vec<usize>],
) -> Vec<Run> {
    let mut starts = max_starts(g, opts.restarts, opts.seed);
    if let Some(w) = warm {
        starts.push(w.iter().map(|v| v.abs().powf(p)).collect());
    }
    let rho = opts.shift.unwrap_or_else(|| default_shift(g));
    let use_pg = opts.mode == Mode::ProjectedGradient;
    execute(starts.len(), opts.parallel, |i| {
        let y = &starts[i];
        if p == 1.0 {
            return simplex::optimize(g, y.clone(), Target::Max, opts.tol, opts.max_iter);
        }
        let mut x: Vec<f64> = y.iter().map(|v| v.powf(1.0 / p)).collect();
        class_average(&mut x, classes);
        normalize_p(&mut x, p);
        if use_pg {
            let mut run = sphere::optimize(g, p, x, Target::Max, opts.tol, opts.max_iter);
            run.x.iter_mut().for_each(|v| *v = v.abs());
            run.value = eval_unchecked(g, &run.x);
            run
        } else {
            let run = ascent::optimize(g, p, x, rho, opts.tol, opts.max_iter);
            if run.converged || run.iterations >= opts.max_iter {
                return run;
            }
            polish_max(g, p, run, opts)
        }
    })
}

/// Finishes a stagnated fixed-point run with projected gradient steps.
fn polish_max(g: &WeightedHypergraph, p: f64, run: Run, opts: &SolveOptions) -> Run {
    let budget = opts.max_iter - run.iterations;
    let mut pg = sphere::optimize(g, p, run.x.clone(), Target::Max, opts.tol, budget);
    pg.x.iter_mut().for_each(|v| *v = v.abs());
    pg.value = eval_unchecked(g, &pg.x);
    pg.iterations += run.iterations;
    let before = residual_at(g, p, run.value, &run.x);
    let after = residual_at(g, p, pg.value, &pg.x);
    if pg.value >= run.value - opts.tol * run.value.abs().max(1.0) && after <= before {
        pg.converged = after <= opts.tol;
        pg
    } else {
        run
    }
}

fn finish_max(
    g: &WeightedHypergraph,
    p: f64,
    opts: &SolveOptions,
    run: &Run,
    classes: &[Vec<usize>],
    count: usize,
) -> EigenResult {
    let mut run = run.clone();
    if p > 1.0 && classes.iter().any(|c| c.len() > 1) {
        let mut x = run.x.clone();
        class_average(&mut x, classes);
        normalize_p(&mut x, p);
        let rho = opts.shift.unwrap_or_else(|| default_shift(g));
        let mut polished = ascent::optimize(g, p, x, rho, opts.tol, opts.max_iter);
        if !polished.converged && polished.iterations < opts.max_iter {
            polished = polish_max(g, p, polished, opts);
        }
        class_average(&mut polished.x, classes);
        normalize_p(&mut polished.x, p);
        polished.value = eval_unchecked(g, &polished.x);
        polished.iterations += run.iterations;
        if polished.value >= run.value - opts.tol * run.value.abs().max(1.0) {
            run = polished;
        }
    }
    let residual = (p > 1.0).then(|| residual_at(g, p, run.value, &run.x));
    let certified = p >= g.rank() as f64;
    let status = match residual {
        Some(res) if res <= opts.tol && certified && run.converged => Status::Converged,
        _ => Status::BestEffort,
    };
    EigenResult {
        value: run.value,
        vector: PointOnSphere::from_normalized(run.x, p),
        residual,
        iterations: run.iterations,
        restarts_used: count,
        status,
        target: Target::Max,
    }
}

/// λ^(p)(G) = max of P_G over the unit l^p sphere, with a nonnegative maximizer.
pub fn lambda_max(g: &WeightedHypergraph, p: f64, opts: &SolveOptions) -> Result<EigenResult> {
    lambda_max_warm(g, p, opts, None)
}

/// [`lambda_max`] with an extra starting point, e.g. a solution at a nearby p.
pub fn lambda_max_warm(
    g: &WeightedHypergraph,
    p: f64,
    opts: &SolveOptions,
    warm: Option<&[f64]>,
) -> Result<EigenResult> {
    check_p(p)?;
    opts.validate()?;
    if let Some(w) = warm {
        if w.len() != g.order() {
            return Err(Error::LengthMismatch { expected: g.order(), got: w.len() });
        }
    }
    if g.is_empty() {
        return Ok(empty_result(g, p, Target::Max));
    }
    let classes = equivalence_classes(g);
    let runs = max_runs(g, p, opts, warm, &classes);
    let best = pick(&runs, Target::Max, opts.tol);
    Ok(finish_max(g, p, opts, &runs[best], &classes, runs.len()))
}

/// One result per restart, unreduced; used to exhibit non-unique maximizers.
pub fn lambda_max_all(g: &WeightedHypergraph, p: f64, opts: &SolveOptions) -> Result<Vec<EigenResult>> {
    check_p(p)?;
    opts.validate()?;
    if g.is_empty() {
        return Ok(vec![empty_result(g, p, Target::Max)]);
    }
    let runs = max_runs(g, p, opts, None, &[]);
    let certified = p >= g.rank() as f64;
    Ok(runs
        .into_iter()
        .map(|run| {
            let residual = (p > 1.0).then(|| residual_at(g, p, run.value, &run.x));
            let status = match residual {
                Some(res) if res <= opts.tol && certified => Status::Converged,
                _ => Status::BestEffort,
            };
            EigenResult {
                value: run.value,
                vector: PointOnSphere::from_normalized(run.x, p),
                residual,
                iterations: run.iterations,
                restarts_used: 1,
                status,
                target: Target::Max,
            }
        })
        .collect())
}

/// λ_min^(p)(G) = min of P_G over the unit l^p sphere.
pub fn lambda_min(g: &WeightedHypergraph, p: f64, opts: &SolveOptions) -> Result<EigenResult> {
    check_p(p)?;
    opts.validate()?;
    if g.is_empty() {
        return Ok(empty_result(g, p, Target::Min));
    }
    let max = lambda_max(g, p, opts)?;
    let transversal = odd_transversal(g);
    let flipped = transversal.as_ref().map(|u| {
        let mut x = max.vector.coords().to_vec();
        u.iter().for_each(|&v| x[v] = -x[v]);
        x
    });
    if g.rank() % 2 == 1 {
        let x = flipped.unwrap_or_else(|| max.vector.coords().iter().map(|v| -v).collect());
        let value = eval_unchecked(g, &x);
        let residual = (p > 1.0).then(|| residual_at(g, p, value, &x));
        return Ok(EigenResult {
            value,
            vector: PointOnSphere::from_normalized(x, p),
            residual,
            iterations: max.iterations,
            restarts_used: max.restarts_used,
            status: max.status,
            target: Target::Min,
        });
    }

    let n = g.order();
    let mut starts: Vec<Vec<f64>> = Vec::with_capacity(opts.restarts + 1);
    if let Some(x) = &flipped {
        starts.push(x.clone());
    }
    for i in 0..opts.restarts as u64 {
        let mut rng = run_rng(opts.seed ^ 0x005e_ed0f_f11b, i);
        let y = random_simplex(&mut rng, n);
        starts.push(y.iter().map(|&v| if rng.gen::<bool>() { v } else { -v }).collect());
    }
    let runs = execute(starts.len(), opts.parallel, |i| {
        let x0 = starts[i].clone();
        if p == 1.0 {
            let mut y = vec![0.0; 2 * n];
            let s: f64 = x0.iter().map(|v| v.abs()).sum();
            for (k, &v) in x0.iter().enumerate() {
                y[if v >= 0.0 { k } else { n + k }] = v.abs() / s;
            }
            simplex::optimize(g, y, Target::Min, opts.tol, opts.max_iter)
        } else {
            let mut x = x0;
            x.iter_mut().for_each(|v| *v = signed_pow(*v, 1.0 / p));
            normalize_p(&mut x, p);
            sphere::optimize(g, p, x, Target::Min, opts.tol, opts.max_iter)
        }
    });
    let best = pick(&runs, Target::Min, opts.tol);
    let run = runs[best].clone();
    let residual = (p > 1.0).then(|| residual_at(g, p, run.value, &run.x));
    let attains_bound = transversal.is_some() && run.value <= -max.value + 2.0 * opts.tol * max.value.max(1.0);
    let status = if max.status == Status::Converged && attains_bound && residual.is_some_and(|r| r <= opts.tol) {
        Status::Converged
    } else {
        Status::BestEffort
    };
    Ok(EigenResult {
        value: run.value,
        vector: PointOnSphere::from_normalized(run.x, p),
        residual,
        iterations: run.iterations,
        restarts_used: runs.len(),
        status,
        target: Target::Min,
    })
}
