//! p = 1: projected gradient on a probability simplex.
//!
//! For the maximum the variable is y = x ≥ 0 with Σy = 1. For the minimum the
//! l^1 sphere is covered by the split x = u - v with (u, v) on the 2n-simplex.

use super::{Run, Target};
use crate::graph::WeightedHypergraph;
use crate::numeric::project_simplex;
use crate::polyform::{eval_unchecked, grad_into};

const STABLE_ITERS: usize = 10;
const ARMIJO: f64 = 1e-4;

struct Problem<'a> {
    g: &'a WeightedHypergraph,
    split: bool,
    sign: f64,
}

impl Problem<'_> {
    fn point(&self, y: &[f64]) -> Vec<f64> {
        let n = self.g.order();
        if self.split {
            (0..n).map(|k| y[k] - y[n + k]).collect()
        } else {
            y.to_vec()
        }
    }

    /// Objective sign·P (minimized) and its gradient in y.
    fn eval(&self, y: &[f64], grad: &mut [f64]) -> f64 {
        let x = self.point(y);
        let n = x.len();
        let mut gx = vec![0.0; n];
        grad_into(self.g, &x, &mut gx);
        for k in 0..n {
            grad[k] = self.sign * gx[k];
            if self.split {
                grad[n + k] = -self.sign * gx[k];
            }
        }
        self.sign * eval_unchecked(self.g, &x)
    }
}

fn stationarity(y: &[f64], grad: &[f64]) -> f64 {
    let moved: Vec<f64> = y.iter().zip(grad).map(|(a, b)| a - b).collect();
    project_simplex(&moved).iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

pub(crate) fn optimize(g: &WeightedHypergraph, y0: Vec<f64>, target: Target, tol: f64, max_iter: usize) -> Run {
    let prob = Problem {
        g,
        split: y0.len() == 2 * g.order() && target == Target::Min,
        sign: if target == Target::Min { 1.0 } else { -1.0 },
    };
    let m = y0.len();
    let mut y = project_simplex(&y0);
    let mut grad = vec![0.0; m];
    let mut f = prob.eval(&y, &mut grad);
    let mut eta = 1.0 / grad.iter().fold(1e-12f64, |a, v| a.max(v.abs()));
    let mut stable = 0;
    let mut cand_grad = vec![0.0; m];

    let finish = |y: Vec<f64>, f: f64, it: usize, converged: bool| Run {
        value: prob.sign * f,
        x: prob.point(&y),
        iterations: it,
        converged,
    };

    for it in 0..max_iter {
        let kkt = stationarity(&y, &grad);
        if kkt <= tol && stable >= STABLE_ITERS {
            return finish(y, f, it, true);
        }
        let noise = 4.0 * f64::EPSILON * f.abs().max(1e-300);
        let mut step = eta;
        let mut accepted = None;
        for _ in 0..80 {
            let trial: Vec<f64> = y.iter().zip(&grad).map(|(a, b)| a - step * b).collect();
            let cand = project_simplex(&trial);
            let decrease: f64 = grad.iter().zip(cand.iter().zip(&y)).map(|(gk, (c, yk))| gk * (c - yk)).sum();
            let fc = prob.eval(&cand, &mut cand_grad);
            if fc <= f + ARMIJO * decrease || (decrease.abs() < noise && fc <= f + noise) {
                accepted = Some((cand, fc));
                break;
            }
            step *= 0.5;
        }
        let Some((cand, fc)) = accepted else {
            return finish(y, f, it, kkt <= tol);
        };
        let mut ss = 0.0;
        let mut sy = 0.0;
        for k in 0..m {
            let s = cand[k] - y[k];
            ss += s * s;
            sy += s * (cand_grad[k] - grad[k]);
        }
        eta = if sy > 0.0 { (ss / sy).clamp(1e-12, 1e12) } else { (step * 2.0).min(1e12) };
        if (fc - f).abs() <= tol * f.abs().max(1.0) {
            stable += 1;
        } else {
            stable = 0;
        }
        y = cand;
        f = fc;
        std::mem::swap(&mut grad, &mut cand_grad);
    }
    let kkt = stationarity(&y, &grad);
    finish(y, f, max_iter, kkt <= tol)
}
