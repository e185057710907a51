mod common;

use common::small_weighted;
use hyperlambda::combinatorics::*;
use hyperlambda::fixtures::{fano, fixture_catalog};
use hyperlambda::numeric::falling_factorial;
use hyperlambda::{Family, WeightedHypergraph};
use proptest::prelude::*;

fn graph_upto_12() -> impl Strategy<Value = WeightedHypergraph> {
    (2usize..=4, 0usize..=12, 0.02f64..0.5, any::<u64>()).prop_map(|(r, n, prob, seed)| {
        let n = n.clamp(r, 12);
        WeightedHypergraph::random_gnp(r, n, prob, seed).unwrap()
    })
}

fn named_graphs() -> Vec<WeightedHypergraph> {
    let mut gs: Vec<WeightedHypergraph> = fixture_catalog().into_iter().map(|f| f.graph).collect();
    gs.push(fano());
    for spec in [
        Family::Complete { r: 3, n: 5 },
        Family::Cycle { r: 2, n: 4 },
        Family::Cycle { r: 3, n: 7 },
        Family::BetaStar { r: 3, k: 3 },
        Family::TStar { r: 4, t: 2, n: 6 },
        Family::CompleteMultipartite { r: 3, parts: vec![2, 2, 2] },
        Family::Turan { n: 7, k: 3 },
        Family::SingleEdge { r: 4 },
    ] {
        gs.push(WeightedHypergraph::construct(&spec).unwrap());
    }
    gs
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn gf2_transversals_match_exhaustive(g in graph_upto_12()) {
        let odd = odd_transversal(&g);
        prop_assert_eq!(odd.is_some(), odd_transversal_exhaustive(&g).unwrap().is_some());
        if let Some(u) = odd {
            prop_assert!(is_odd_transversal(&g, &u));
        }
        let even = even_transversal(&g);
        prop_assert_eq!(even.is_some(), even_transversal_exhaustive(&g).unwrap().is_some());
        if let Some(u) = even {
            prop_assert!(!u.is_empty() && u.len() < g.order() && is_even_transversal(&g, &u));
        }
    }

    #[test]
    fn one_tight_iff_connected(g in graph_upto_12()) {
        prop_assume!(!g.is_empty());
        prop_assert_eq!(is_k_tight(&g, 1).unwrap().tight, is_connected(&g));
    }

    #[test]
    fn tightness_is_downward_closed(g in graph_upto_12()) {
        for k in 2..g.rank() {
            if is_k_tight(&g, k).unwrap().tight {
                prop_assert!(is_k_tight(&g, k - 1).unwrap().tight);
            }
        }
    }

    #[test]
    fn tightness_witness_is_valid(g in graph_upto_12()) {
        for k in 1..g.rank() {
            let t = is_k_tight(&g, k).unwrap();
            if let Some(u) = t.witness {
                prop_assert!(!t.tight && u.len() < g.order());
                prop_assert!(g.edges().any(|(e, _)| e.iter().all(|v| u.contains(v))));
                let blocked = g.edges().all(|(e, _)| {
                    let m = e.iter().filter(|v| u.contains(v)).count();
                    m < k || m == g.rank()
                });
                prop_assert!(blocked);
            }
        }
    }

    #[test]
    fn handshake(g in small_weighted(9)) {
        let total: f64 = vertex_degrees(&g).iter().sum();
        prop_assert!((total - g.rank() as f64 * g.size()).abs() <= 1e-12 * total.max(1.0));
    }

    #[test]
    fn set_regular_degree_value(g in graph_upto_12()) {
        for k in 1..g.rank() {
            if !g.is_empty() && is_k_set_regular(&g, k).unwrap() {
                let d = set_degrees(&g, k).unwrap().max;
                let expect = g.size() * falling_factorial(g.rank(), k) / falling_factorial(g.order(), k);
                prop_assert!((d - expect).abs() <= 1e-9 * expect);
            }
        }
    }

    #[test]
    fn classes_are_automorphism_orbits(g in small_weighted(8)) {
        for c in equivalence_classes(&g) {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    prop_assert!(transposition_is_automorphism(&g, u, v));
                }
            }
        }
    }
}

#[test]
fn named_graphs_agree_with_references() {
    for g in named_graphs() {
        if !g.is_empty() {
            assert_eq!(is_k_tight(&g, 1).unwrap().tight, is_connected(&g), "{g:?}");
        }
        assert_eq!(odd_transversal(&g).is_some(), odd_transversal_exhaustive(&g).unwrap().is_some());
        assert_eq!(even_transversal(&g).is_some(), even_transversal_exhaustive(&g).unwrap().is_some());
    }
}

#[test]
fn steiner_systems_are_linear() {
    let f = fano();
    assert!(is_steiner(&f, 2).unwrap());
    assert!(is_k_linear(&f, 1).unwrap());
    assert!(is_k_set_regular(&f, 2).unwrap());
    assert_eq!(set_degrees(&f, 2).unwrap().max, 1.0);
    let k = WeightedHypergraph::construct(&Family::Complete { r: 3, n: 4 }).unwrap();
    assert!(!is_steiner(&k, 2).unwrap() && !is_k_linear(&k, 1).unwrap() && is_k_linear(&k, 2).unwrap());
}

#[test]
fn spec_examples() {
    let bowtie = hyperlambda::fixtures::two_edges_sharing(3, 1).unwrap();
    assert!(is_k_tight(&bowtie, 1).unwrap().tight);
    assert!(!is_k_tight(&bowtie, 2).unwrap().tight);
    let k53 = WeightedHypergraph::construct(&Family::Complete { r: 3, n: 5 }).unwrap();
    assert!(is_k_tight(&k53, 2).unwrap().tight);
    let c4 = WeightedHypergraph::construct(&Family::Cycle { r: 2, n: 4 }).unwrap();
    assert_eq!(odd_transversal(&c4).map(|u| u.len()), Some(2));
    let k3 = WeightedHypergraph::construct(&Family::Complete { r: 2, n: 3 }).unwrap();
    assert_eq!(odd_transversal(&k3), None);
    assert_eq!(
        chromatic_number_exact(&WeightedHypergraph::construct(&Family::Cycle { r: 2, n: 5 }).unwrap()).unwrap(),
        3
    );
    assert_eq!(
        chromatic_number_exact(&WeightedHypergraph::construct(&Family::Complete { r: 2, n: 6 }).unwrap()).unwrap(),
        6
    );
    let big = WeightedHypergraph::empty(3, 21).unwrap();
    assert!(matches!(is_k_tight(&big, 1), Err(hyperlambda::Error::BudgetExceeded { .. })));
}
