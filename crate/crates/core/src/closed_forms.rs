//! Exact values of λ^(p) and λ_min^(p) for standard families, and the scaling
//! rules for blow-ups, disjoint unions and star-like joins.

use serde::Serialize;

use crate::combinatorics::{degree_profile, is_k_set_regular};
use crate::error::{invalid, Error, Result};
use crate::graph::{Family, JoinKind, WeightedHypergraph};
use crate::numeric::{factorial, falling_factorial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VectorShape {
    /// Constant on all vertices.
    Uniform,
    /// Constant on each of two vertex classes.
    TwoLevel,
    /// Constant on one edge, zero elsewhere.
    CanonicalEdge,
    /// Constant within each part.
    PartConstant,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedForm {
    pub p: f64,
    pub value: f64,
    /// λ_min^(p) when known in closed form.
    pub min_value: Option<f64>,
    pub shape: VectorShape,
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 1.0 && p.is_finite()) {
        return invalid(format!("p must be a finite real >= 1, got {p}"));
    }
    Ok(())
}

fn edge_value(r: usize, p: f64) -> f64 {
    factorial(r) / (r as f64).powf(r as f64 / p)
}

pub fn closed_form(spec: &Family, p: f64) -> Result<ClosedForm> {
    check_p(p)?;
    // construct validates the family parameters
    WeightedHypergraph::construct(spec)?;
    let cf = |value: f64, min_value: Option<f64>, shape| Ok(ClosedForm { p, value, min_value, shape });
    match *spec {
        Family::SingleEdge { r } => {
            let v = edge_value(r, p);
            cf(v, Some(-v), VectorShape::Uniform)
        }
        Family::Complete { r, n } => {
            let v = falling_factorial(n, r) / (n as f64).powf(r as f64 / p);
            let min = (r % 2 == 1 || n == r).then_some(-v);
            cf(v, min, VectorShape::Uniform)
        }
        Family::BetaStar { r, k } => {
            let rm1 = (r - 1) as f64;
            if p == rm1 {
                return Err(Error::Unsupported(format!(
                    "beta-star value at exactly p = r-1 = {rm1} is not in the catalog"
                )));
            }
            if p > rm1 {
                let v = edge_value(r, p) * (k as f64).powf(1.0 - rm1 / p);
                cf(v, Some(-v), VectorShape::TwoLevel)
            } else {
                let v = edge_value(r, p);
                cf(v, Some(-v), VectorShape::CanonicalEdge)
            }
        }
        Family::TStar { r, t, n } => {
            let rt = (r - t) as f64;
            let v = falling_factorial(r, t) * rt.powf(rt / p) * falling_factorial(n - t, r - t)
                / ((r as f64).powf(r as f64 / p) * ((n - t) as f64).powf(rt / p));
            cf(v, Some(-v), VectorShape::TwoLevel)
        }
        Family::Cycle { r: 2, n: 4 } => {
            let v = 2f64.powf(3.0 - 4.0 / p);
            cf(v, Some(-v), VectorShape::Uniform)
        }
        Family::CompleteMultipartite { r, ref parts } if parts.len() == r => {
            let prod: f64 = parts.iter().map(|&s| s as f64).product();
            let v = edge_value(r, p) * prod.powf(1.0 - 1.0 / p);
            cf(v, Some(-v), VectorShape::PartConstant)
        }
        _ => Err(Error::Unsupported(format!("no closed form for {spec:?}"))),
    }
}

/// λ^(p) of the blow-up G(k,…,k): k^{r-r/p}·λ. The same factor applies to λ_min.
pub fn blowup_scale(lambda: f64, r: usize, p: f64, k: usize) -> f64 {
    let r = r as f64;
    (k as f64).powf(r - r / p) * lambda
}

/// λ^(p) of a disjoint union from the values of its components.
pub fn union_combine(parts: &[f64], r: usize, p: f64) -> f64 {
    let r = r as f64;
    if parts.is_empty() {
        return 0.0;
    }
    if p <= r {
        return parts.iter().copied().fold(0.0, f64::max);
    }
    let q = p / (p - r);
    let top = parts.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    top * parts.iter().map(|&l| (l / top).powf(q)).sum::<f64>().powf(1.0 / q)
}

/// λ_min^(p) of a disjoint union from the λ_min values of its components.
pub fn union_combine_min(parts: &[f64], r: usize, p: f64) -> f64 {
    let abs: Vec<f64> = parts.iter().map(|v| v.abs()).collect();
    if p <= r as f64 {
        return parts.iter().copied().fold(0.0, f64::min);
    }
    -union_combine(&abs, r, p)
}

/// λ^(p) of a join of G (rank `r_g`) from λ^(p)(G). λ_min of the join is the negative.
pub fn join_scale(lambda: f64, r_g: usize, p: f64, kind: JoinKind) -> f64 {
    match kind {
        JoinKind::K1 => join_scale(lambda, r_g, p, JoinKind::TK1(1)),
        JoinKind::TK1(t) => {
            let r = (r_g + 1) as f64;
            r.powf(1.0 - r / p) * (r - 1.0).powf((r - 1.0) / p) * (t as f64).powf(1.0 - 1.0 / p) * lambda
        }
        JoinKind::KTT(t) => {
            let r = r_g + t;
            let rt = r_g as f64;
            factorial(r) * rt.powf(rt / p) / ((r as f64).powf(r as f64 / p) * factorial(r_g)) * lambda
        }
    }
}

/// r!|G|/n^{r/p} when a regularity argument makes it equal to λ^(p)(G):
/// constant weight on all r-sets (any p), k-set regularity with k ≥ 2 and
/// p ≥ r/k, or vertex regularity with p ≥ r.
pub fn regular_value(g: &WeightedHypergraph, p: f64) -> Result<Option<f64>> {
    check_p(p)?;
    let r = g.rank();
    let n = g.order();
    if n == 0 || g.is_empty() {
        return Ok(None);
    }
    let value = factorial(r) * g.size() / (n as f64).powf(r as f64 / p);
    let complete =
        g.edge_count() as f64 == crate::numeric::binomial(n, r) && g.edges().all(|(_, w)| w == g.max_weight());
    if complete {
        return Ok(Some(value));
    }
    for k in 2..r {
        if p >= r as f64 / k as f64 && is_k_set_regular(g, k)? {
            return Ok(Some(value));
        }
    }
    if p >= r as f64 && degree_profile(g, None)?.is_regular() {
        return Ok(Some(value));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn catalog_examples() {
        assert!(close(closed_form(&Family::Complete { r: 2, n: 3 }, 2.0).unwrap().value, 2.0));
        assert!(close(closed_form(&Family::BetaStar { r: 3, k: 4 }, 3.0).unwrap().value, 2.0 * 4f64.powf(1.0 / 3.0)));
        let ts = closed_form(&Family::TStar { r: 3, t: 1, n: 5 }, 3.0).unwrap().value;
        assert!((ts - 7.55953).abs() < 1e-5);
        assert!(close(ts, join_scale(12.0 / 4f64.powf(2.0 / 3.0), 2, 3.0, JoinKind::K1)));
        assert!(closed_form(&Family::BetaStar { r: 3, k: 4 }, 2.0).is_err());
        assert!(closed_form(&Family::Cycle { r: 3, n: 5 }, 2.0).is_err());
        assert!(closed_form(&Family::SingleEdge { r: 3 }, 0.5).is_err());
        assert!(close(closed_form(&Family::Cycle { r: 2, n: 4 }, 2.0).unwrap().value, 2.0));
    }

    #[test]
    fn scaling_rules() {
        assert!(close(blowup_scale(1.0, 2, 2.0, 2), 2.0));
        assert!(close(blowup_scale(1.7, 3, 2.5, 1), 1.7));
        assert!(close(blowup_scale(2.0, 3, 3.0, 3), 18.0));
        assert_eq!(union_combine(&[2.0, 1.5], 3, 2.0), 2.0);
        let li = 6.0 / 3f64.powf(0.75);
        assert!((union_combine(&[li, li], 3, 4.0) - 3.13016).abs() < 1e-5);
        assert!(close(union_combine(&[li, li], 3, 4.0), 2f64.powf(0.25) * li));
        assert_eq!(union_combine(&[1.25], 3, 7.0), 1.25);
        assert_eq!(union_combine(&[], 3, 7.0), 0.0);
        assert!(close(union_combine_min(&[-li, -li], 3, 4.0), -2f64.powf(0.25) * li));
    }

    #[test]
    fn join_identities() {
        for p in [1.0, 1.5, 2.0, 3.0, 5.0] {
            for r_g in 2..5 {
                assert!(close(join_scale(1.0, r_g, p, JoinKind::TK1(1)), join_scale(1.0, r_g, p, JoinKind::K1)));
                assert!(close(join_scale(1.0, r_g, p, JoinKind::KTT(1)), join_scale(1.0, r_g, p, JoinKind::K1)));
            }
        }
        let f = join_scale(1.0, 2, 3.0, JoinKind::K1);
        assert!((f - 1.5874).abs() < 1e-4);
    }

    #[test]
    fn regular_values() {
        let c6 = WeightedHypergraph::construct(&Family::Cycle { r: 3, n: 6 }).unwrap();
        assert!(close(regular_value(&c6, 3.0).unwrap().unwrap(), 6.0));
        let k43 = WeightedHypergraph::construct(&Family::Complete { r: 3, n: 4 }).unwrap();
        assert!(close(regular_value(&k43, 1.0).unwrap().unwrap(), 0.375));
        let c5 = WeightedHypergraph::construct(&Family::Cycle { r: 2, n: 5 }).unwrap();
        assert_eq!(regular_value(&c5, 1.5).unwrap(), None);
        let fano = WeightedHypergraph::unweighted(
            3,
            7,
            vec![[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
        )
        .unwrap();
        assert_eq!(regular_value(&fano, 1.0).unwrap(), None);
        assert!(regular_value(&fano, 1.5).unwrap().is_some());
    }
}
