use serde::Serialize;

use super::{lambda_max_warm, lambda_min, SolveOptions};
use crate::error::{invalid, Result};
use crate::graph::WeightedHypergraph;
use crate::numeric::factorial;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub p: f64,
    pub lambda: f64,
    pub lambda_min: f64,
    /// λ^(p) · n^{r/p}, nonincreasing in p with limit r!|G|
    pub h: f64,
    /// (λ^(p) / (r!|G|))^p
    pub f: f64,
}

/// λ^(p) and λ_min^(p) along an ascending grid, warm-starting each maximization
/// from the previous grid point.
pub fn lambda_curve(g: &WeightedHypergraph, p_grid: &[f64], opts: &SolveOptions) -> Result<Vec<CurvePoint>> {
    if p_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return invalid("p grid must be strictly ascending");
    }
    let r = g.rank() as f64;
    let n = g.order() as f64;
    let total = factorial(g.rank()) * g.size();
    let mut warm: Option<Vec<f64>> = None;
    let mut out = Vec::with_capacity(p_grid.len());
    for &p in p_grid {
        let max = lambda_max_warm(g, p, opts, warm.as_deref())?;
        let min = lambda_min(g, p, opts)?;
        let lambda = max.value;
        warm = Some(max.vector.into_coords());
        out.push(CurvePoint {
            p,
            lambda,
            lambda_min: min.value,
            h: if n > 0.0 { lambda * n.powf(r / p) } else { 0.0 },
            f: if total > 0.0 { (lambda / total).powf(p) } else { 0.0 },
        });
    }
    Ok(out)
}
