#![allow(dead_code)]

use hyperlambda::{HypergraphBuilder, WeightedHypergraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random unweighted r-graph with 2 <= r <= 4 and n <= max_n.
pub fn small_graph(max_n: usize) -> impl Strategy<Value = WeightedHypergraph> {
    (2usize..=4, 0usize..=3, 0.2f64..0.9, any::<u64>()).prop_map(move |(r, extra, prob, seed)| {
        let n = (r + extra).min(max_n.max(r));
        WeightedHypergraph::random_gnp(r, n, prob, seed).unwrap()
    })
}

/// Random weighted version of [`small_graph`], weights in [0.25, 3).
pub fn small_weighted(max_n: usize) -> impl Strategy<Value = WeightedHypergraph> {
    (small_graph(max_n), any::<u64>()).prop_map(|(g, seed)| reweight(&g, seed))
}

pub fn reweight(g: &WeightedHypergraph, seed: u64) -> WeightedHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = HypergraphBuilder::new(g.rank(), g.order()).unwrap();
    for (e, _) in g.edges() {
        b.set_edge(e, rng.gen_range(0.25..3.0)).unwrap();
    }
    b.build()
}

pub fn vector(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}
