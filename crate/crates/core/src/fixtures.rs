//! Regression fixtures for solver semantics: non-unique maximizers, maximizers
//! with zero entries, spurious fixed points, sparse zero-eigenvalue solutions
//! and sign patterns of eigenvectors.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::combinatorics::{even_transversal, is_connected, is_even_transversal, is_k_tight};
use crate::error::Result;
use crate::graph::{Family, WeightedHypergraph};
use crate::io::to_json;
use crate::numeric::factorial;
use crate::polyform::eval_unchecked;
use crate::solver::{eigen_residual, lambda_max, lambda_max_all, SolveOptions};

/// What a fixture asserts.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expectation {
    /// λ^(p) = value and at least two distinct eigenvectors attain it.
    MultipleMaximizers { value: f64, tol: f64 },
    /// λ^(p) = value and the maximizer has a zero entry.
    ZeroEntry { value: f64, tol: f64 },
    /// A fixed point with eigenvalue `spurious` exists, but λ^(p) exceeds it by `margin`.
    BeatsSpurious { spurious: f64, margin: f64 },
    /// The uniform vector solves the eigenequations with value `uniform`,
    /// yet λ^(p) exceeds it by `margin`.
    StrictGap { uniform: f64, margin: f64 },
    /// (0, x) solves the eigenequations for this sparse x.
    ZeroEigenpair { vector: Vec<f64> },
    /// Flipping signs on a proper even transversal keeps an eigenvector.
    MixedSignMaximizer,
    /// k-tight but not (k+1)-tight.
    Tightness { k: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    #[serde(skip)]
    pub graph: WeightedHypergraph,
    pub p: f64,
    pub expectation: Expectation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub value: Option<f64>,
    pub detail: String,
}

/// r-edges {0..r-1} and {0..s-1, r..2r-s-1}: two edges sharing s vertices.
pub fn two_edges_sharing(r: usize, s: usize) -> Result<WeightedHypergraph> {
    let a: Vec<usize> = (0..r).collect();
    let b: Vec<usize> = (0..s).chain(r..2 * r - s).collect();
    WeightedHypergraph::unweighted(r, 2 * r - s, [a, b])
}

/// Steiner(2,3,7): the lines of the Fano plane.
pub fn fano() -> WeightedHypergraph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    WeightedHypergraph::unweighted(3, 7, lines).expect("valid lines")
}

pub fn fixture_catalog() -> Vec<Fixture> {
    let mk = |name: &str, description: &str, graph: WeightedHypergraph, p: f64, expectation| Fixture {
        name: name.into(),
        description: description.into(),
        graph,
        p,
        expectation,
    };
    let bowtie = two_edges_sharing(3, 1).expect("valid");
    let mut out = vec![
        mk(
            "bowtie-p2",
            "two 3-edges sharing one vertex at p = 2: a continuum of maximizers",
            bowtie.clone(),
            2.0,
            Expectation::MultipleMaximizers { value: 2.0 / 3f64.sqrt(), tol: 1e-5 },
        ),
        mk(
            "bowtie-p1.5",
            "two 3-edges sharing one vertex at p = 1.5: maximizer supported on one edge",
            bowtie.clone(),
            1.5,
            Expectation::ZeroEntry { value: 2.0 / 3.0, tol: 1e-5 },
        ),
    ];
    for r in [3, 4] {
        out.push(mk(
            &format!("shared-{}-of-{r}", r - 2),
            "two r-edges sharing r-2 vertices at p = r: the single-edge vector is a fixed point below λ",
            two_edges_sharing(r, r - 2).expect("valid"),
            r as f64,
            Expectation::BeatsSpurious { spurious: factorial(r - 1), margin: 0.05 },
        ));
    }
    out.push(mk(
        "cycle-3-12-p2",
        "C_12^3 at p = 2: the uniform vector satisfies the eigenequations but is not maximal",
        WeightedHypergraph::construct(&Family::Cycle { r: 3, n: 12 }).expect("valid"),
        2.0,
        Expectation::StrictGap { uniform: 6.0 * 12f64.powf(1.0 - 1.5), margin: 0.01 },
    ));
    let mut sparse = vec![0.0; 5];
    sparse[0] = 1.0;
    out.push(mk(
        "complete-3-5-zero",
        "K_5^3 at p = 2: vectors supported on r-2 vertices solve the eigenequations with λ = 0",
        WeightedHypergraph::construct(&Family::Complete { r: 3, n: 5 }).expect("valid"),
        2.0,
        Expectation::ZeroEigenpair { vector: sparse },
    ));
    out.push(mk(
        "shared-2-of-3-signs",
        "two 3-edges sharing 2 vertices at p = 3 > r-1: the shared pair is a proper even transversal",
        two_edges_sharing(3, 2).expect("valid"),
        3.0,
        Expectation::MixedSignMaximizer,
    ));
    out.push(mk(
        "bowtie-tightness",
        "two 3-edges sharing one vertex: 1-tight, not 2-tight",
        bowtie,
        2.0,
        Expectation::Tightness { k: 1 },
    ));
    out
}

fn distinct_count(vectors: &[&[f64]], sep: f64) -> usize {
    let mut reps: Vec<&[f64]> = Vec::new();
    for v in vectors {
        if reps.iter().all(|w| v.iter().zip(*w).any(|(a, b)| (a - b).abs() > sep)) {
            reps.push(v);
        }
    }
    reps.len()
}

pub fn run_fixture(f: &Fixture, opts: &SolveOptions) -> Result<FixtureOutcome> {
    let g = &f.graph;
    let p = f.p;
    let outcome = |passed: bool, value: Option<f64>, detail: String| FixtureOutcome {
        name: f.name.clone(),
        passed,
        value,
        detail,
    };
    match &f.expectation {
        Expectation::MultipleMaximizers { value, tol } => {
            let best = lambda_max(g, p, opts)?.value;
            let all = lambda_max_all(g, p, opts)?;
            let at_max: Vec<&[f64]> = all
                .iter()
                .filter(|e| (e.value - best).abs() <= 1e-8 && e.residual.is_some_and(|r| r <= 1e-8))
                .map(|e| e.vector.coords())
                .collect();
            let distinct = distinct_count(&at_max, 1e-6);
            let ok = (best - value).abs() <= *tol && distinct >= 2;
            Ok(outcome(ok, Some(best), format!("{distinct} distinct maximizers")))
        }
        Expectation::ZeroEntry { value, tol } => {
            let res = lambda_max(g, p, opts)?;
            let min = res.vector.coords().iter().map(|v| v.abs()).fold(f64::INFINITY, f64::min);
            let ok = (res.value - value).abs() <= *tol && min <= 1e-6;
            Ok(outcome(ok, Some(res.value), format!("min entry {min:e}")))
        }
        Expectation::BeatsSpurious { spurious, margin } => {
            let r = g.rank();
            let mut x = vec![0.0; g.order()];
            x[..r].iter_mut().for_each(|v| *v = (r as f64).powf(-1.0 / p));
            let fixed = eigen_residual(g, p, *spurious, &x)?;
            let res = lambda_max(g, p, opts)?;
            let ok = fixed <= 1e-12 && res.value >= spurious + margin;
            Ok(outcome(ok, Some(res.value), format!("spurious residual {fixed:e}, gap {:.6}", res.value - spurious)))
        }
        Expectation::StrictGap { uniform, margin } => {
            let n = g.order();
            let x = vec![(n as f64).powf(-1.0 / p); n];
            let fixed = eigen_residual(g, p, *uniform, &x)?;
            let res = lambda_max(g, p, opts)?;
            let ok = fixed <= 1e-12 && res.value >= uniform + margin;
            Ok(outcome(ok, Some(res.value), format!("uniform residual {fixed:e}, gap {:.6}", res.value - uniform)))
        }
        Expectation::ZeroEigenpair { vector } => {
            let res = eigen_residual(g, p, 0.0, vector)?;
            Ok(outcome(res == 0.0, Some(0.0), format!("residual {res:e}")))
        }
        Expectation::MixedSignMaximizer => {
            let Some(u) = even_transversal(g) else {
                return Ok(outcome(false, None, "no proper even transversal".into()));
            };
            let res = lambda_max(g, p, opts)?;
            let mut x = res.vector.coords().to_vec();
            u.iter().for_each(|&v| x[v] = -x[v]);
            let mixed = x.iter().any(|&v| v < 0.0) && x.iter().any(|&v| v > 0.0);
            let value = eval_unchecked(g, &x);
            let residual = eigen_residual(g, p, res.value, &x)?;
            let ok = is_connected(g)
                && is_even_transversal(g, &u)
                && mixed
                && (value - res.value).abs() <= 1e-12 * res.value.max(1.0)
                && residual <= 1e-8;
            Ok(outcome(ok, Some(value), format!("transversal {u:?}, residual {residual:e}")))
        }
        Expectation::Tightness { k } => {
            let a = is_k_tight(g, *k)?;
            let b = is_k_tight(g, k + 1)?;
            let ok = a.tight && !b.tight;
            Ok(outcome(ok, None, format!("witness {:?}", b.witness)))
        }
    }
}

#[derive(Debug, Serialize)]
struct ManifestEntry<'a> {
    file: String,
    #[serde(flatten)]
    fixture: &'a Fixture,
}

/// Writes each fixture graph as `<name>.json` plus `manifest.json` with
/// exponents and expectations. Returns the written paths.
pub fn export_fixtures(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let catalog = fixture_catalog();
    let mut manifest = Vec::new();
    for f in &catalog {
        let file = format!("{}.json", f.name);
        let path = dir.join(&file);
        fs::write(&path, to_json(&f.graph) + "\n")?;
        written.push(path);
        manifest.push(ManifestEntry { file, fixture: f });
    }
    let path = dir.join("manifest.json");
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(&path, text + "\n")?;
    written.push(path);
    Ok(written)
}
