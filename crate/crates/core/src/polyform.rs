//! The polyform P_G(x) = r! Σ_e G(e) Π_{i∈e} x_i and its gradient.

use crate::error::{invalid, Error, Result};
use crate::graph::WeightedHypergraph;
use crate::numeric::{factorial, p_norm, KahanSum};

fn check_len(g: &WeightedHypergraph, x: &[f64]) -> Result<()> {
    if x.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: x.len() });
    }
    Ok(())
}

pub fn evaluate(g: &WeightedHypergraph, x: &[f64]) -> Result<f64> {
    check_len(g, x)?;
    Ok(eval_unchecked(g, x))
}

pub fn gradient(g: &WeightedHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(g, x)?;
    let mut out = vec![0.0; x.len()];
    grad_into(g, x, &mut out);
    Ok(out)
}

pub(crate) fn eval_unchecked(g: &WeightedHypergraph, x: &[f64]) -> f64 {
    let mut acc = KahanSum::new();
    for (e, w) in g.edges() {
        let mut prod = w;
        for &v in e {
            prod *= x[v];
        }
        acc.add(prod);
    }
    factorial(g.rank()) * acc.value()
}

/// Writes ∇P_G(x) into `out`; products of the other r-1 coordinates are built from
/// prefix and suffix products so zero coordinates need no special casing.
pub(crate) fn grad_into(g: &WeightedHypergraph, x: &[f64], out: &mut [f64]) {
    let r = g.rank();
    let mut acc = vec![KahanSum::new(); x.len()];
    let mut prefix = vec![1.0; r + 1];
    for (e, w) in g.edges() {
        for i in 0..r {
            prefix[i + 1] = prefix[i] * x[e[i]];
        }
        let mut suffix = 1.0;
        for i in (0..r).rev() {
            acc[e[i]].add(w * prefix[i] * suffix);
            suffix *= x[e[i]];
        }
    }
    let c = factorial(r);
    for (o, a) in out.iter_mut().zip(&acc) {
        *o = c * a.value();
    }
}

/// A point on the unit l^p sphere S_p^{n-1}.
#[derive(Debug, Clone, PartialEq)]
pub struct PointOnSphere {
    coords: Vec<f64>,
    p: f64,
}

impl PointOnSphere {
    /// Normalizes `coords` onto the sphere; the zero vector is rejected.
    pub fn new(mut coords: Vec<f64>, p: f64) -> Result<Self> {
        if !(p >= 1.0 && p.is_finite()) {
            return invalid(format!("p must be a finite real >= 1, got {p}"));
        }
        if !crate::numeric::normalize_p(&mut coords, p) {
            return invalid("cannot normalize the zero vector");
        }
        Ok(Self { coords, p })
    }

    /// Wraps coordinates already on the sphere, or the empty vector of a 0-vertex graph.
    pub(crate) fn from_normalized(coords: Vec<f64>, p: f64) -> Self {
        Self { coords, p }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn norm(&self) -> f64 {
        p_norm(&self.coords, self.p)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&v| v >= 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn examples() {
        let k33 = WeightedHypergraph::construct(&Family::SingleEdge { r: 3 }).unwrap();
        assert_eq!(evaluate(&k33, &[1.0; 3]).unwrap(), 6.0);
        let c = 3f64.powf(-1.0 / 3.0);
        assert!((evaluate(&k33, &[c; 3]).unwrap() - 2.0).abs() < 1e-14);
        let c4 = WeightedHypergraph::construct(&Family::Cycle { r: 2, n: 4 }).unwrap();
        assert!((evaluate(&c4, &[0.5; 4]).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(gradient(&k33, &[1.0; 3]).unwrap(), vec![6.0; 3]);
        let empty = WeightedHypergraph::empty(3, 4).unwrap();
        assert_eq!(gradient(&empty, &[0.3; 4]).unwrap(), vec![0.0; 4]);
        assert!(evaluate(&k33, &[1.0; 2]).is_err());
        assert!(gradient(&k33, &[1.0; 4]).is_err());
    }

    #[test]
    fn point_on_sphere() {
        let x = PointOnSphere::new(vec![3.0, 4.0], 2.0).unwrap();
        assert!((x.norm() - 1.0).abs() < 1e-15);
        assert!(PointOnSphere::new(vec![0.0; 3], 2.0).is_err());
        assert!(PointOnSphere::new(vec![1.0], 0.5).is_err());
    }
}
