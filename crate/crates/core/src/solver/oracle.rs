//! Brute-force estimate of the extremes, independent of the main solvers.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Target;
use crate::graph::WeightedHypergraph;
use crate::numeric::normalize_p;
use crate::polyform::eval_unchecked;

const PATTERN_MAX_ORDER: usize = 10;
const POLISHED: usize = 100;

/// Best value of P_G found by sphere sampling, {-1,0,1} support patterns and a
/// compass-search polish of the best samples. Every candidate is an actual point
/// of the sphere, so the result is a one-sided bound on the true extremum.
pub fn brute_force_lambda(g: &WeightedHypergraph, p: f64, target: Target, samples: usize, seed: u64) -> f64 {
    let n = g.order();
    if n == 0 || g.is_empty() {
        return 0.0;
    }
    let sign = if target == Target::Max { 1.0 } else { -1.0 };
    let score = |x: &[f64]| sign * eval_unchecked(g, x);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<(f64, Vec<f64>)> = Vec::with_capacity(samples);

    for _ in 0..samples {
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        if normalize_p(&mut x, p) {
            pool.push((score(&x), x));
        }
    }
    if n <= PATTERN_MAX_ORDER {
        for pat in (0..n).map(|_| [-1.0, 0.0, 1.0]).multi_cartesian_product() {
            let mut x = pat;
            if normalize_p(&mut x, p) {
                pool.push((score(&x), x));
            }
        }
    }
    pool.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    pool.truncate(POLISHED);
    pool.into_iter().map(|(s, x)| polish(x, s, p, &score)).fold(f64::NEG_INFINITY, f64::max) * sign
}

fn polish(mut x: Vec<f64>, mut best: f64, p: f64, score: &impl Fn(&[f64]) -> f64) -> f64 {
    let mut h = 0.25;
    while h > 1e-10 {
        let mut improved = false;
        for k in 0..x.len() {
            for dir in [h, -h] {
                let mut y = x.clone();
                y[k] += dir;
                if normalize_p(&mut y, p) {
                    let s = score(&y);
                    if s > best {
                        best = s;
                        x = y;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    best
}
