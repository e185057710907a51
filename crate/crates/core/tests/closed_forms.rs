mod common;

use hyperlambda::closed_forms::{
    blowup_scale, closed_form, join_scale, regular_value, union_combine, union_combine_min,
};
use hyperlambda::{lambda_max, lambda_min, Family, JoinKind, SolveOptions, WeightedHypergraph};
use proptest::prelude::*;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn grid(lo: f64) -> Vec<f64> {
    [1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.5].into_iter().filter(|&p| p > lo).collect()
}

fn agree(spec: Family, ps: &[f64]) {
    let g = WeightedHypergraph::construct(&spec).unwrap();
    for &p in ps {
        let cf = closed_form(&spec, p).unwrap();
        let max = lambda_max(&g, p, &opts()).unwrap();
        assert!((max.value - cf.value).abs() <= 1e-6, "{spec:?} p={p}: {} vs {}", max.value, cf.value);
        if let Some(m) = cf.min_value {
            let min = lambda_min(&g, p, &opts()).unwrap();
            assert!((min.value - m).abs() <= 1e-6, "{spec:?} p={p} min: {} vs {m}", min.value);
        }
    }
}

#[test]
fn single_edges_and_complete_graphs() {
    for r in 2..=4 {
        agree(Family::SingleEdge { r }, &grid(0.0));
    }
    for (r, n) in [(2, 5), (3, 5), (4, 6)] {
        agree(Family::Complete { r, n }, &grid(0.0));
    }
}

#[test]
fn cycle_four() {
    agree(Family::Cycle { r: 2, n: 4 }, &grid(0.0));
}

#[test]
fn stars() {
    for (r, k) in [(3, 2), (3, 4), (4, 2), (4, 3)] {
        agree(Family::BetaStar { r, k }, &grid(r as f64 - 1.0));
        let below: Vec<f64> = grid(0.0).into_iter().filter(|&p| p < r as f64 - 1.0).collect();
        agree(Family::BetaStar { r, k }, &below);
    }
    for (r, t, n) in [(3, 1, 5), (3, 2, 5), (4, 1, 6), (4, 2, 6), (4, 3, 6)] {
        agree(Family::TStar { r, t, n }, &grid(r as f64 - 1.0));
    }
}

#[test]
fn complete_multipartite() {
    agree(Family::CompleteMultipartite { r: 3, parts: vec![2, 2, 2] }, &grid(0.0));
    agree(Family::CompleteMultipartite { r: 2, parts: vec![1, 3] }, &grid(0.0));
}

#[test]
fn join_rules_match_families() {
    let k4 = WeightedHypergraph::construct(&Family::Complete { r: 2, n: 4 }).unwrap();
    for p in [1.5, 2.0, 3.0, 5.0] {
        let base = closed_form(&Family::Complete { r: 2, n: 4 }, p).unwrap().value;
        let star = closed_form(&Family::TStar { r: 3, t: 1, n: 5 }, p).unwrap().value;
        assert!((join_scale(base, 2, p, JoinKind::K1) - star).abs() <= 1e-12 * star);
        if p > 2.0 {
            let j = k4.join(JoinKind::K1).unwrap();
            assert!((lambda_max(&j, p, &opts()).unwrap().value - star).abs() <= 1e-6);
        }
    }
}

#[test]
fn regular_values() {
    let c6 = WeightedHypergraph::construct(&Family::Cycle { r: 3, n: 6 }).unwrap();
    assert!((regular_value(&c6, 3.0).unwrap().unwrap() - 6.0).abs() < 1e-12);
    let k43 = WeightedHypergraph::construct(&Family::Complete { r: 3, n: 4 }).unwrap();
    assert!((regular_value(&k43, 1.0).unwrap().unwrap() - 0.375).abs() < 1e-12);
    let c5 = WeightedHypergraph::construct(&Family::Cycle { r: 2, n: 5 }).unwrap();
    assert_eq!(regular_value(&c5, 1.5).unwrap(), None);
}

proptest! {
    #![proptest_config(common::config(20))]

    #[test]
    fn blow_up_scaling(g in common::small_weighted(5), k in 1usize..=3, p in prop_oneof![Just(1.0), 1.0f64..5.0]) {
        prop_assume!(!g.is_empty());
        let r = g.rank();
        let b = g.blow_up(&vec![k; g.order()]).unwrap();
        let lg = lambda_max(&g, p, &opts()).unwrap().value;
        let lb = lambda_max(&b, p, &opts()).unwrap().value;
        let expect = blowup_scale(lg, r, p, k);
        prop_assert!((lb - expect).abs() <= 1e-5 * expect.max(1e-12), "{} vs {}", lb, expect);
    }

    #[test]
    fn union_rules(a in common::small_weighted(4), s: u64, p in prop_oneof![Just(1.0), 1.0f64..7.0]) {
        let b = common::reweight(&WeightedHypergraph::random_gnp(a.rank(), a.rank() + 1, 0.8, s).unwrap(), s);
        let u = a.disjoint_union(&b).unwrap();
        let parts = [lambda_max(&a, p, &opts()).unwrap().value, lambda_max(&b, p, &opts()).unwrap().value];
        let lu = lambda_max(&u, p, &opts()).unwrap().value;
        let expect = union_combine(&parts, a.rank(), p);
        prop_assert!((lu - expect).abs() <= 1e-6 * expect.max(1.0), "{} vs {}", lu, expect);
        if a.rank() % 2 == 1 {
            let mins = [lambda_min(&a, p, &opts()).unwrap().value, lambda_min(&b, p, &opts()).unwrap().value];
            let lm = lambda_min(&u, p, &opts()).unwrap().value;
            prop_assert!((lm - union_combine_min(&mins, a.rank(), p)).abs() <= 1e-6 * expect.max(1.0));
        }
    }
}
