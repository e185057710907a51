//! Projected gradient on the l^p sphere for p > 1, signed coordinates allowed.
//!
//! The Euclidean gradient is projected onto the tangent space {d : ⟨φ(x), d⟩ = 0},
//! φ(x) = x|x|^{p-2}, then the step is retracted radially. Stationary points of this
//! scheme are exactly the eigenvectors. Step sizes start from a Barzilai–Borwein
//! guess and are halved until an Armijo decrease holds.

use super::{residual_raw, Run, Target};
use crate::graph::WeightedHypergraph;
use crate::numeric::{normalize_p, signed_pow};
use crate::polyform::{eval_unchecked, grad_into};

const STABLE_ITERS: usize = 10;
/// Flat steps after which a run is abandoned as stagnant.
const STAGNATION_ITERS: usize = 500;
const ARMIJO: f64 = 1e-4;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Descent direction of sign·P projected on the tangent space at x.
fn direction(x: &[f64], grad: &[f64], p: f64, sign: f64, out: &mut [f64]) {
    let phi: Vec<f64> = x.iter().map(|&v| signed_pow(v, p - 1.0)).collect();
    let pp = dot(&phi, &phi);
    let c = if pp > 0.0 { dot(grad, &phi) / pp } else { 0.0 };
    for k in 0..x.len() {
        out[k] = -sign * (grad[k] - c * phi[k]);
    }
}

pub(crate) fn optimize(
    g: &WeightedHypergraph,
    p: f64,
    mut x: Vec<f64>,
    target: Target,
    tol: f64,
    max_iter: usize,
) -> Run {
    let sign = if target == Target::Min { 1.0 } else { -1.0 };
    let r = g.rank() as f64;
    let n = x.len();
    let mut val = eval_unchecked(g, &x);
    let mut grad = vec![0.0; n];
    grad_into(g, &x, &mut grad);
    let mut d = vec![0.0; n];
    direction(&x, &grad, p, sign, &mut d);
    let mut eta = 1.0 / grad.iter().fold(1e-12f64, |a, v| a.max(v.abs()));
    let mut stable = 0;
    let mut cand = vec![0.0; n];
    let mut cand_grad = vec![0.0; n];
    let mut cand_d = vec![0.0; n];

    for it in 0..max_iter {
        let res = residual_raw(val, &x, &grad, p, r);
        if res <= tol && stable >= STABLE_ITERS {
            return Run { value: val, x, iterations: it, converged: true };
        }
        if stable >= STAGNATION_ITERS {
            return Run { value: val, x, iterations: it, converged: res <= tol };
        }
        let dd = dot(&d, &d);
        if dd == 0.0 {
            return Run { value: val, x, iterations: it, converged: res <= tol };
        }
        let f0 = sign * val;
        let noise = 4.0 * f64::EPSILON * val.abs().max(1e-300);
        let mut accepted = None;
        let mut step = eta;
        for _ in 0..80 {
            for k in 0..n {
                cand[k] = x[k] + step * d[k];
            }
            if normalize_p(&mut cand, p) {
                let v = eval_unchecked(g, &cand);
                let expected = ARMIJO * step * dd;
                if sign * v <= f0 - expected || (expected < noise && sign * v <= f0 + noise) {
                    accepted = Some(v);
                    break;
                }
            }
            step *= 0.5;
        }
        let Some(v) = accepted else {
            return Run { value: val, x, iterations: it, converged: res <= tol };
        };
        grad_into(g, &cand, &mut cand_grad);
        direction(&cand, &cand_grad, p, sign, &mut cand_d);
        // Barzilai–Borwein: s = Δx, y = Δ(gradient) = -(Δd)
        let mut ss = 0.0;
        let mut sy = 0.0;
        for k in 0..n {
            let s = cand[k] - x[k];
            ss += s * s;
            sy += s * (d[k] - cand_d[k]);
        }
        eta = if sy > 0.0 { (ss / sy).clamp(1e-12, 1e12) } else { (step * 2.0).min(1e12) };

        if (v - val).abs() <= tol * val.abs().max(1.0) {
            stable += 1;
        } else {
            stable = 0;
        }
        std::mem::swap(&mut x, &mut cand);
        std::mem::swap(&mut grad, &mut cand_grad);
        std::mem::swap(&mut d, &mut cand_d);
        val = v;
    }
    let res = residual_raw(val, &x, &grad, p, r);
    Run { value: val, x, iterations: max_iter, converged: res <= tol }
}
