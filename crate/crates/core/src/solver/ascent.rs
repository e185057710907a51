//! Shifted fixed-point iteration for the maximum at p > 1.
//!
//! x ← normalize_p((∇P(x)/r + ρ x^{p-1})^{1/(p-1)}) on the nonnegative orthant.
//! Fixed points solve the eigenequations with λ = P(x). The shift is adapted:
//! doubled whenever a step would lower P, relaxed toward ρ/4 after runs of
//! accepted steps. Large ρ turns the map into a short preconditioned gradient
//! step, so an ascent step always exists away from stationary points.

use super::{residual_raw, Run};
use crate::graph::WeightedHypergraph;
use crate::numeric::normalize_p;
use crate::polyform::{eval_unchecked, grad_into};

const STABLE_ITERS: usize = 10;
/// Consecutive flat steps after which the run is handed back unconverged.
const STAGNATION_ITERS: usize = 500;

pub(crate) fn optimize(g: &WeightedHypergraph, p: f64, mut x: Vec<f64>, rho0: f64, tol: f64, max_iter: usize) -> Run {
    let r = g.rank() as f64;
    let n = x.len();
    let rho0 = if rho0 > 0.0 { rho0 } else { 1.0 };
    let rho_floor = rho0 / 4.0;
    let mut rho = rho0;
    let expo = 1.0 / (p - 1.0);

    let mut val = eval_unchecked(g, &x);
    let mut grad = vec![0.0; n];
    grad_into(g, &x, &mut grad);
    let mut cand = vec![0.0; n];
    let mut stable = 0;
    let mut streak = 0;

    for it in 0..max_iter {
        let res = residual_raw(val, &x, &grad, p, r);
        if res <= tol && stable >= STABLE_ITERS {
            return Run { value: val, x, iterations: it, converged: true };
        }
        if stable >= STAGNATION_ITERS {
            return Run { value: val, x, iterations: it, converged: false };
        }
        let mut accepted = None;
        while rho <= rho0 * 1e16 {
            for k in 0..n {
                cand[k] = grad[k] / r + rho * x[k].powf(p - 1.0);
            }
            let top = cand.iter().fold(0.0f64, |a, &b| a.max(b));
            if top <= 0.0 {
                break;
            }
            cand.iter_mut().for_each(|v| *v = (*v / top).powf(expo));
            if !normalize_p(&mut cand, p) {
                break;
            }
            let v = eval_unchecked(g, &cand);
            if v >= val - 1e-15 * val.abs() {
                accepted = Some(v);
                break;
            }
            rho *= 2.0;
            streak = 0;
        }
        let Some(v) = accepted else {
            return Run { value: val, x, iterations: it, converged: res <= tol };
        };
        if (v - val).abs() <= tol * val.abs().max(1.0) {
            stable += 1;
        } else {
            stable = 0;
        }
        std::mem::swap(&mut x, &mut cand);
        val = v;
        grad_into(g, &x, &mut grad);
        streak += 1;
        if streak >= 5 {
            rho = (rho * 0.5).max(rho_floor);
            streak = 0;
        }
    }
    let res = residual_raw(val, &x, &grad, p, r);
    Run { value: val, x, iterations: max_iter, converged: res <= tol }
}
