//! Inequalities on λ^(p) and λ_min^(p) as checkable reports.
//!
//! Every function returns [`BoundReport`]s. A report carries the bound, whether
//! its hypotheses were verified for the given graph, and, when an estimate of
//! the spectral quantity is supplied, the slack. A negative slack beyond
//! `2·tol` on an applicable bound means the solver (or the inequality) is wrong.

use itertools::Itertools;
use serde::Serialize;

use crate::closed_forms::closed_form;
use crate::combinatorics::{
    chromatic_number_exact, is_k_linear, is_partite_witness, partite_number_exact, set_degrees, vertex_degrees,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{Family, WeightedHypergraph};
use crate::numeric::{binomial, factorial, falling_factorial, kahan_sum};
use crate::solver::{lambda_max, lambda_min, EigenResult, SolveOptions, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub side: Side,
    pub bound: f64,
    /// Hypotheses verified for this graph.
    pub applies: bool,
    /// Short description of the inequality.
    pub source: String,
    /// The audited quantity, when known.
    pub value: Option<f64>,
    /// bound − value for upper bounds, value − bound for lower bounds.
    pub slack: Option<f64>,
}

impl BoundReport {
    fn new(name: &str, side: Side, bound: f64, applies: bool, source: &str) -> Self {
        Self { name: name.into(), side, bound, applies, source: source.into(), value: None, slack: None }
    }

    /// Attaches the audited value and computes the slack.
    pub fn with_value(mut self, v: Option<f64>) -> Self {
        if let Some(v) = v {
            self.value = Some(v);
            self.slack = Some(match self.side {
                Side::Upper => self.bound - v,
                Side::Lower => v - self.bound,
            });
        }
        self
    }

    /// Applicable, audited, and off by more than `2·tol`.
    pub fn violated(&self, tol: f64) -> bool {
        self.applies && self.slack.is_some_and(|s| s < -2.0 * tol)
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 1.0 && p.is_finite()) {
        return invalid(format!("p must be a finite real >= 1, got {p}"));
    }
    Ok(())
}

fn same_shape(g1: &WeightedHypergraph, g2: &WeightedHypergraph) -> Result<()> {
    if g1.rank() != g2.rank() {
        return Err(Error::RankMismatch(g1.rank(), g2.rank()));
    }
    if g1.order() != g2.order() {
        return Err(Error::OrderMismatch(g1.order(), g2.order()));
    }
    Ok(())
}

fn n_pow(n: usize, e: f64) -> f64 {
    if n == 0 {
        return if e == 0.0 { 1.0 } else { 0.0 };
    }
    (n as f64).powf(e)
}

/// Bounds in terms of order, size and weight norms.
pub fn bound_suite_max(g: &WeightedHypergraph, p: f64, lambda: Option<f64>) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    let r = g.rank();
    let n = g.order();
    let rf = r as f64;
    let size = g.size();
    let rfact = factorial(r);
    let nr = falling_factorial(n, r);
    let lower = if n == 0 { 0.0 } else { rfact * size / n_pow(n, rf / p) };
    let mut out = vec![
        BoundReport::new("uniform-vector", Side::Lower, lower, true, "value of the polyform at the uniform vector"),
        BoundReport::new(
            "max-weight",
            Side::Upper,
            if n == 0 { 0.0 } else { g.max_weight() * nr / n_pow(n, rf / p) },
            true,
            "max weight times the complete-graph value; equality iff constant",
        ),
    ];
    if p > 1.0 {
        let q = p / (p - 1.0);
        let norm = rfact * kahan_sum(g.edges().map(|(_, w)| w.powf(q))).powf(1.0 / q);
        let ratio = if n == 0 { 0.0 } else { nr / n_pow(n, rf) };
        out.push(BoundReport::new(
            "holder-maclaurin",
            Side::Upper,
            ratio.powf(1.0 / p) * norm,
            true,
            "((n)_r/n^r)^{1/p} |r!G|_{p/(p-1)}",
        ));
    } else {
        let ratio = if n == 0 { 0.0 } else { nr / n_pow(n, rf) };
        out.push(BoundReport::new(
            "maclaurin",
            Side::Upper,
            ratio * g.max_weight(),
            true,
            "(n)_r/n^r |G|_inf at p = 1",
        ));
    }
    out.push(BoundReport::new(
        "size",
        Side::Upper,
        rfact * size.powf(1.0 - 1.0 / p),
        g.is_unweighted(),
        "r! |G|^{1-1/p} for unweighted graphs",
    ));
    Ok(out.into_iter().map(|b| b.with_value(lambda)).collect())
}

/// Bounds whose hypotheses are structural: partiteness, chromatic number,
/// linearity, set degrees, maximum degree.
///
/// `witness` is an optional partition proving k-partiteness; without it the
/// partite number is searched exactly for small orders and the k-partite
/// bounds are skipped above that.
pub fn structural_bounds(
    g: &WeightedHypergraph,
    p: f64,
    lambda: Option<f64>,
    witness: Option<&[Vec<usize>]>,
) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    let r = g.rank();
    let rf = r as f64;
    let n = g.order();
    let size = g.size();
    let rfact = factorial(r);
    let unweighted = g.is_unweighted();
    let mut out = Vec::new();

    let parts = match witness {
        Some(w) if is_partite_witness(g, w) => Some(w.iter().filter(|c| !c.is_empty()).count()),
        Some(_) => return invalid("witness is not a partition with every edge meeting each part at most once"),
        None => match partite_number_exact(g) {
            Ok(k) => Some(k),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    if let Some(k) = parts.filter(|_| !g.is_empty()) {
        if k == r {
            out.push(BoundReport::new(
                "r-partite",
                Side::Upper,
                rfact / rf.powf(rf / p) * size.powf(1.0 - 1.0 / p),
                unweighted,
                "(r!/r^{r/p}) |G|^{1-1/p} for r-partite graphs; equality iff complete r-partite (p > 1)",
            ));
        } else if k > r {
            let c = falling_factorial(k, r) / (k as f64).powf(rf);
            out.push(BoundReport::new(
                "k-partite-size",
                Side::Upper,
                c.powf(1.0 / p) * (rfact * size).powf(1.0 - 1.0 / p),
                unweighted,
                "((k)_r/k^r)^{1/p} (r!|G|)^{1-1/p} for k-partite graphs, k > r",
            ));
            out.push(BoundReport::new(
                "k-partite-order",
                Side::Upper,
                c * n_pow(n, rf - rf / p),
                unweighted,
                "((k)_r/k^r) n^{r-r/p} for k-partite graphs, k > r",
            ));
        }
    }

    if let Ok(chi) = chromatic_number_exact(g) {
        if chi >= 1 {
            let c = 1.0 - (chi as f64).powf(1.0 - rf);
            out.push(BoundReport::new(
                "chromatic-size",
                Side::Upper,
                c.powf(1.0 / p) * (rfact * size).powf(1.0 - 1.0 / p),
                unweighted,
                "(1 - chi^{1-r})^{1/p} (r!|G|)^{1-1/p}",
            ));
            out.push(BoundReport::new(
                "chromatic-order",
                Side::Upper,
                c * n_pow(n, rf - rf / p),
                unweighted,
                "(1 - chi^{1-r}) n^{r-r/p}",
            ));
        }
    }

    for k in 1..r.saturating_sub(1) {
        if !unweighted || g.is_empty() || !is_k_linear(g, k)? {
            continue;
        }
        let pk = rf / (k + 1) as f64;
        if (p - pk).abs() <= 1e-12 * pk {
            out.push(BoundReport::new(
                &format!("{k}-linear"),
                Side::Upper,
                rfact / binomial(r, k + 1) * binomial(n, k + 1) / n_pow(n, (k + 1) as f64),
                true,
                "r! C(r,k+1)^{-1} C(n,k+1)/n^{k+1} at p = r/(k+1) for k-linear graphs; equality iff Steiner(k+1,r,n)",
            ));
        }
        if p <= pk {
            out.push(BoundReport::new(
                &format!("{k}-linear-small-p"),
                Side::Upper,
                rfact / falling_factorial(r, k + 1),
                true,
                "r!/(r)_{k+1} for k-linear graphs and 1 <= p <= r/(k+1)",
            ));
        }
    }

    if !g.is_empty() {
        for k in 2..r {
            let sd = set_degrees(g, k)?;
            let base = rfact * size / n_pow(n, rf / p);
            let factor = falling_factorial(n, k) * sd.max / (falling_factorial(r, k) * size);
            out.push(BoundReport::new(
                &format!("set-degree-{k}"),
                Side::Upper,
                base * factor.powf(rf / (k as f64 * p)),
                p >= rf / k as f64,
                "r!|G|/n^{r/p} ((n)_k Δ_k/((r)_k |G|))^{r/(kp)} for p >= r/k",
            ));
        }
        let delta = vertex_degrees(g).into_iter().fold(0.0, f64::max);
        out.push(BoundReport::new(
            "max-degree",
            Side::Upper,
            factorial(r - 1) * delta / n_pow(n, rf / p - 1.0),
            p >= rf,
            "(r-1)! Δ / n^{r/p-1} for p >= r; equality iff a Δ-regular component (p = r)",
        ));
        out.push(BoundReport::new(
            "max-degree-small-p",
            Side::Upper,
            factorial(r - 1) * delta.powf((1.0 - 1.0 / p) / (1.0 - 1.0 / rf)),
            unweighted && p > 1.0 && p < rf,
            "(r-1)! Δ^{(1-1/p)/(1-1/r)} for unweighted graphs and 1 < p < r (strict)",
        ));
        out.push(BoundReport::new(
            "star",
            Side::Lower,
            rfact / rf.powf(rf / p) * delta.powf(1.0 - (rf - 1.0) / p),
            unweighted,
            "(r!/r^{r/p}) Δ^{1-(r-1)/p}; equality for β-stars",
        ));
    }
    Ok(out.into_iter().map(|b| b.with_value(lambda)).collect())
}

/// Lower bounds on λ_min^(p). `lambda_max` enables the sign-flip bound.
pub fn bound_suite_min(
    g: &WeightedHypergraph,
    p: f64,
    lambda_min: Option<f64>,
    lambda_max: Option<f64>,
) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    let r = g.rank();
    let rf = r as f64;
    let even = r.is_multiple_of(2);
    let unweighted = g.is_unweighted();
    let mut out = vec![
        BoundReport::new(
            "min-size",
            Side::Lower,
            -(factorial(r) * g.size()).powf(1.0 - 1.0 / p) / 2f64.powf(1.0 / p),
            even && unweighted,
            "-(r!|G|)^{1-1/p}/2^{1/p} for even r",
        ),
        BoundReport::new(
            "min-order",
            Side::Lower,
            -n_pow(g.order(), rf - rf / p) / 2.0,
            even && unweighted,
            "-n^{r-r/p}/2 for even r",
        ),
    ];
    if let Some(l) = lambda_max {
        out.push(BoundReport::new("sign-flip", Side::Lower, -l, true, "λ_min >= -λ"));
    }
    Ok(out.into_iter().map(|b| b.with_value(lambda_min)).collect())
}

/// Spectral estimates for G1, G2 and G1 + G2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeylEstimates {
    pub max1: f64,
    pub max2: f64,
    pub max_sum: f64,
    pub min1: f64,
    pub min2: f64,
    pub min_sum: f64,
}

/// Subadditivity of λ and the sandwich for λ_min of a weighted sum.
pub fn weyl_check(
    g1: &WeightedHypergraph,
    g2: &WeightedHypergraph,
    p: f64,
    est: &WeylEstimates,
) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    same_shape(g1, g2)?;
    Ok(vec![
        BoundReport::new("weyl-max", Side::Upper, est.max1 + est.max2, true, "λ(G1+G2) <= λ(G1) + λ(G2)")
            .with_value(Some(est.max_sum)),
        BoundReport::new(
            "weyl-min-lower",
            Side::Lower,
            est.min1 + est.min2,
            true,
            "λ_min(G1) + λ_min(G2) <= λ_min(G1+G2)",
        )
        .with_value(Some(est.min_sum)),
        BoundReport::new("weyl-min-upper", Side::Upper, est.max1 + est.min2, true, "λ_min(G1+G2) <= λ(G1) + λ_min(G2)")
            .with_value(Some(est.min_sum)),
    ])
}

/// Solves the six problems and runs [`weyl_check`].
pub fn weyl_solve(
    g1: &WeightedHypergraph,
    g2: &WeightedHypergraph,
    p: f64,
    opts: &SolveOptions,
) -> Result<(WeylEstimates, Vec<BoundReport>)> {
    let sum = g1.weighted_sum(g2)?;
    let est = WeylEstimates {
        max1: lambda_max(g1, p, opts)?.value,
        max2: lambda_max(g2, p, opts)?.value,
        max_sum: lambda_max(&sum, p, opts)?.value,
        min1: lambda_min(g1, p, opts)?.value,
        min2: lambda_min(g2, p, opts)?.value,
        min_sum: lambda_min(&sum, p, opts)?.value,
    };
    Ok((est, weyl_check(g1, g2, p, &est)?))
}

/// |λ(G1) − λ(G2)| and |λ_min(G1) − λ_min(G2)| are at most (r!k)^{1-1/p}
/// where k counts edges in exactly one of the graphs.
pub fn perturbation_check(
    g1: &WeightedHypergraph,
    g2: &WeightedHypergraph,
    p: f64,
    opts: &SolveOptions,
) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    same_shape(g1, g2)?;
    if !g1.is_unweighted() || !g2.is_unweighted() {
        return Err(Error::Weighted);
    }
    let k = g1.symmetric_difference_count(g2)?;
    let bound = if k == 0 { 0.0 } else { (factorial(g1.rank()) * k as f64).powf(1.0 - 1.0 / p) };
    let dmax = (lambda_max(g1, p, opts)?.value - lambda_max(g2, p, opts)?.value).abs();
    let dmin = (lambda_min(g1, p, opts)?.value - lambda_min(g2, p, opts)?.value).abs();
    let src = "(r!k)^{1-1/p} for graphs differing in k edges";
    Ok(vec![
        BoundReport::new("perturbation-max", Side::Upper, bound, true, src).with_value(Some(dmax)),
        BoundReport::new("perturbation-min", Side::Upper, bound, true, src).with_value(Some(dmin)),
    ])
}

/// Bracket for λ(G) + λ(complement of G).
pub fn nordhaus_check(g: &WeightedHypergraph, p: f64, opts: &SolveOptions) -> Result<[BoundReport; 2]> {
    check_p(p)?;
    if !g.is_unweighted() {
        return Err(Error::Weighted);
    }
    let co = g.complement()?;
    let sum = lambda_max(g, p, opts)?.value + lambda_max(&co, p, opts)?.value;
    let n = g.order();
    let nr = falling_factorial(n, g.rank());
    Ok([
        BoundReport::new(
            "nordhaus-upper",
            Side::Upper,
            2f64.powf(1.0 / p) * nr.powf(1.0 - 1.0 / p),
            true,
            "2^{1/p} (n)_r^{1-1/p}",
        )
        .with_value(Some(sum)),
        BoundReport::new(
            "nordhaus-lower",
            Side::Lower,
            if n == 0 { 0.0 } else { nr / n_pow(n, g.rank() as f64 / p) },
            true,
            "(n)_r/n^{r/p}; equality for regular graphs when p >= r",
        )
        .with_value(Some(sum)),
    ])
}

/// Vertex set meeting every edge at most once, greedily heaviest first.
fn star_like_set(g: &WeightedHypergraph, weight: &[f64]) -> Vec<usize> {
    let n = g.order();
    let mut adjacent = vec![false; n * n];
    for (e, _) in g.edges() {
        for (a, b) in e.iter().copied().tuple_combinations() {
            adjacent[a * n + b] = true;
            adjacent[b * n + a] = true;
        }
    }
    let order: Vec<usize> = (0..n).sorted_by(|&a, &b| weight[b].total_cmp(&weight[a]).then(a.cmp(&b))).collect();
    let mut u: Vec<usize> = Vec::new();
    for v in order {
        if u.iter().all(|&w| !adjacent[v * n + w]) {
            u.push(v);
        }
    }
    u.sort_unstable();
    u
}

/// Audits entry bounds on an eigenvector to λ^(p)(G).
///
/// Each report states the tightest instance found. Applicability requires the
/// result to be an eigenpair with residual ≤ 1e-8, so nothing applies at p = 1.
pub fn entry_bounds(g: &WeightedHypergraph, p: f64, result: &EigenResult) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    if result.target != Target::Max {
        return invalid("entry bounds concern eigenvectors to λ^(p), not λ_min");
    }
    let x = result.vector.coords();
    if x.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: x.len() });
    }
    let mut out = Vec::new();
    if g.is_empty() {
        return Ok(out);
    }
    let r = g.rank();
    let rf = r as f64;
    let n = g.order();
    let lambda = result.value;
    let eigen = result.residual.is_some_and(|res| res <= 1e-8);
    let unweighted = g.is_unweighted();
    let y: Vec<f64> = x.iter().map(|v| v.abs().powf(p)).collect();

    let top = y.iter().copied().fold(0.0, f64::max);
    out.push(
        BoundReport::new("entry", Side::Upper, 1.0 / rf, eigen && unweighted, "|x_k|^p <= 1/r; equality for β-stars")
            .with_value(Some(top)),
    );

    let u = star_like_set(g, &y);
    let mass = kahan_sum(u.iter().map(|&v| y[v]));
    out.push(
        BoundReport::new(
            "star-like-set",
            Side::Upper,
            1.0 / rf,
            eigen && unweighted,
            "sum of |x_k|^p over a set meeting every edge at most once is <= 1/r",
        )
        .with_value(Some(mass)),
    );

    if p > 1.0 && lambda > 0.0 {
        let d = vertex_degrees(g);
        let scale = factorial(r - 1) / lambda.powf(p / (p - 1.0));
        // worst vertex: least slack
        let (k, _) = (0..n)
            .map(|k| (k, scale * d[k] - y[k]))
            .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("nonempty graph has vertices");
        out.push(
            BoundReport::new(
                "entry-degree",
                Side::Upper,
                scale * d[k],
                eigen && unweighted,
                "|x_k|^p <= (r-1)! d(k) / λ^{p/(p-1)}",
            )
            .with_value(Some(y[k])),
        );
    }

    if n >= 2 {
        let d = vertex_degrees(g);
        let delta = d.iter().copied().fold(f64::INFINITY, f64::min);
        let sigma = y.iter().copied().fold(f64::INFINITY, f64::min);
        let a = lambda * n_pow(n, rf / p - 1.0) / factorial(r - 1);
        let lhs = (a.powf(p) - delta.powf(p)) * sigma.powi(r as i32 - 1);
        let rhs = binomial(n - 1, r - 1)
            * delta.powf(p - 1.0)
            * ((1.0 - sigma).powi(r as i32 - 1) / ((n - 1) as f64).powi(r as i32 - 1) - sigma.powi(r as i32 - 1));
        out.push(
            BoundReport::new(
                "min-entry",
                Side::Upper,
                rhs,
                eigen && unweighted && p <= rf,
                "((λn^{r/p-1}/(r-1)!)^p - δ^p) σ^{r-1} <= C(n-1,r-1) δ^{p-1} ((1-σ)^{r-1}/(n-1)^{r-1} - σ^{r-1}), σ = min |x_i|^p",
            )
            .with_value(Some(lhs)),
        );
    }
    Ok(out)
}

/// χ(G) <= λ(G_(2))/(r−1) + 1, with λ(G_(2)) the spectral radius of the
/// 2-section. The report audits the exact chromatic number (small orders).
pub fn section_coloring_bound(g: &WeightedHypergraph, opts: &SolveOptions) -> Result<BoundReport> {
    let r = g.rank();
    let section = if r == 2 { g.support() } else { g.support().k_section(2)? };
    let lambda = lambda_max(&section, 2.0, opts)?.value;
    let chi = chromatic_number_exact(g)?;
    Ok(BoundReport::new(
        "two-section-coloring",
        Side::Upper,
        lambda / (r - 1) as f64 + 1.0,
        true,
        "χ(G) <= λ(G_(2))/(r-1) + 1",
    )
    .with_value(Some(chi as f64)))
}

/// Two-sided estimates for the Turán 2-graph T_k(n) at exponent p.
///
/// `turan-upper-stated` is the bracket 2|T|n^{-2/p}(1 + k/(4pn^2)); it only
/// holds when k divides n (for instance T_2(3) = K_{1,2} has λ^(2) = √2 above
/// it), so it is flagged inapplicable otherwise. `turan-upper-partite` is the
/// k-partite size bound, valid for all n.
pub fn turan_bounds(n: usize, k: usize, p: f64, lambda: Option<f64>) -> Result<Vec<BoundReport>> {
    check_p(p)?;
    let t = WeightedHypergraph::construct(&Family::Turan { n, k })?;
    let two_t = 2.0 * t.size();
    let base = two_t * n_pow(n, -2.0 / p);
    let kk = k.min(n) as f64;
    let mut out = vec![
        BoundReport::new("turan-lower", Side::Lower, base, true, "2|T| n^{-2/p}"),
        BoundReport::new(
            "turan-upper-stated",
            Side::Upper,
            base * (1.0 + k as f64 / (4.0 * p * (n * n) as f64)),
            n.is_multiple_of(k),
            "2|T| n^{-2/p} (1 + k/(4pn^2)); valid when k | n",
        ),
    ];
    if kk >= 2.0 {
        out.push(BoundReport::new(
            "turan-upper-partite",
            Side::Upper,
            (1.0 - 1.0 / kk).powf(1.0 / p) * two_t.powf(1.0 - 1.0 / p),
            true,
            "(1-1/k)^{1/p} (2|T|)^{1-1/p}",
        ));
    }
    if p == 1.0 && n >= k {
        out.push(BoundReport::new(
            "turan-lagrangian",
            Side::Upper,
            1.0 - 1.0 / k as f64,
            true,
            "λ^(1)(T_k(n)) = 1 - 1/k",
        ));
        out.push(BoundReport::new(
            "turan-lagrangian-lower",
            Side::Lower,
            1.0 - 1.0 / k as f64,
            true,
            "λ^(1)(T_k(n)) = 1 - 1/k",
        ));
    }
    Ok(out.into_iter().map(|b| b.with_value(lambda)).collect())
}

/// Complete r-partite graph with parts 1, k, …, k.
pub fn hofmeister_graph(r: usize, k: usize) -> Result<WeightedHypergraph> {
    WeightedHypergraph::construct(&Family::CompleteMultipartite { r, parts: hofmeister_parts(r, k) })
}

fn hofmeister_parts(r: usize, k: usize) -> Vec<usize> {
    std::iter::once(1).chain(std::iter::repeat_n(k, r - 1)).collect()
}

/// For the graph of [`hofmeister_graph`], compares λ^(r) with the degree
/// moment (r−1)!((1/n)Σ d^s)^{1/s}, s = r/(r−1) + ε. Reported as an upper
/// bound: for large k the moment exceeds λ, so no lower bound of this shape
/// can hold for every graph.
pub fn hofmeister_check(r: usize, k: usize, eps: f64) -> Result<BoundReport> {
    if !(eps > 0.0) {
        return invalid(format!("eps must be positive, got {eps}"));
    }
    let g = hofmeister_graph(r, k)?;
    let rf = r as f64;
    let lambda = closed_form(&Family::CompleteMultipartite { r, parts: hofmeister_parts(r, k) }, rf)?.value;
    let s = rf / (rf - 1.0) + eps;
    let d = vertex_degrees(&g);
    let moment = (kahan_sum(d.iter().map(|v| v.powf(s))) / g.order() as f64).powf(1.0 / s);
    Ok(BoundReport::new(
        "degree-moment",
        Side::Upper,
        factorial(r - 1) * moment,
        true,
        "(r-1)! ((1/n) Σ d^{r/(r-1)+ε})^{1/(r/(r-1)+ε)} exceeds λ for this construction",
    )
    .with_value(Some(lambda)))
}
