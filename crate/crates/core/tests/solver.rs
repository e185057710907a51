mod common;

use common::{small_graph, small_weighted, vector};
use hyperlambda::bounds::{
    bound_suite_max, bound_suite_min, nordhaus_check, perturbation_check, structural_bounds, weyl_solve,
};
use hyperlambda::combinatorics::{equivalence_classes, is_connected};
use hyperlambda::numeric::{factorial, p_norm};
use hyperlambda::solver::{brute_force_lambda, lambda_curve};
use hyperlambda::{evaluate, lambda_max, lambda_min, SolveOptions, Status, Target, WeightedHypergraph};
use proptest::prelude::*;

const TOL: f64 = 1e-10;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn p_strategy() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), 1.0f64..6.0, Just(2.0), Just(3.0), Just(4.0)]
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn monotone_and_lipschitz_in_p(g in small_weighted(6), p in 1.0f64..5.0, dp in 0.01f64..2.0) {
        let q = p + dp;
        let a = lambda_max(&g, p, &opts()).unwrap();
        let b = lambda_max(&g, q, &opts()).unwrap();
        prop_assert!(a.value <= b.value + 2.0 * TOL, "{} > {}", a.value, b.value);
        prop_assert!(b.value - a.value <= dp * factorial(g.rank()) * g.size() + 2.0 * TOL);
    }

    #[test]
    fn h_and_f_nonincreasing(g in small_graph(6)) {
        prop_assume!(!g.is_empty());
        let grid = [1.0, 1.5, 2.0, 3.0, 4.0, 6.0];
        let curve = lambda_curve(&g, &grid, &opts()).unwrap();
        for w in curve.windows(2) {
            prop_assert!(w[0].lambda <= w[1].lambda + 2.0 * TOL);
            prop_assert!(w[1].h <= w[0].h * (1.0 + 1e-9) + 2.0 * TOL, "h {} -> {}", w[0].h, w[1].h);
            prop_assert!(w[1].f <= w[0].f * (1.0 + 1e-9) + 2.0 * TOL, "f {} -> {}", w[0].f, w[1].f);
        }
    }

    #[test]
    fn rayleigh_bounds(g in small_weighted(6), p in p_strategy(), seed: u64) {
        let max = lambda_max(&g, p, &opts()).unwrap().value;
        let min = lambda_min(&g, p, &opts()).unwrap().value;
        for i in 0..20 {
            let x = vector(g.order(), seed.wrapping_add(i));
            let scale = p_norm(&x, p).powi(g.rank() as i32);
            let v = evaluate(&g, &x).unwrap();
            prop_assert!(v <= max * scale + TOL);
            prop_assert!(v >= min * scale - TOL);
        }
    }

    #[test]
    fn subgraph_monotonicity(g in small_weighted(6), p in p_strategy(), seed: u64) {
        let mut bit = seed;
        let h = g.filter_edges(|_, _| { bit = bit.rotate_left(1); bit & 1 == 1 });
        let lg = lambda_max(&g, p, &opts()).unwrap();
        let lh = lambda_max(&h, p, &opts()).unwrap();
        prop_assert!(lh.value <= lg.value + 2.0 * TOL);
        // induced: λ_min(G) <= λ_min(G[U])
        let u: Vec<usize> = (0..g.order()).filter(|v| (seed >> v) & 1 == 1).collect();
        let (ind, _) = g.induced_subgraph(&u).unwrap();
        if ind.order() > 0 {
            let mg = lambda_min(&g, p, &opts()).unwrap();
            let mi = lambda_min(&ind, p, &opts()).unwrap();
            prop_assert!(mg.value <= mi.value + 2.0 * TOL);
        }
    }

    #[test]
    fn sign_flip_and_unit_range(g in small_weighted(6), p in p_strategy()) {
        let max = lambda_max(&g, p, &opts()).unwrap();
        let min = lambda_min(&g, p, &opts()).unwrap();
        prop_assert!(min.value.abs() <= max.value + 2.0 * TOL);
        prop_assert!((max.value - evaluate(&g, max.vector.coords()).unwrap()).abs() <= 1e-12 * max.value.max(1.0));
        prop_assert!((p_norm(max.vector.coords(), p) - 1.0).abs() <= 1e-12);
        prop_assert!(max.vector.is_nonnegative());
        if p == 1.0 && g.is_unweighted() {
            prop_assert!(max.value < 1.0 && min.value >= -1.0);
        }
        if let (Some(res), Status::Converged) = (max.residual, max.status) {
            prop_assert!(res <= 1e-8);
        }
    }

    #[test]
    fn weyl_inequalities(g in small_weighted(6), seed: u64, p in p_strategy()) {
        let h = common::reweight(&WeightedHypergraph::random_gnp(g.rank(), g.order(), 0.5, seed).unwrap(), seed);
        let (_, reports) = weyl_solve(&g, &h, p, &opts()).unwrap();
        for b in reports {
            // λ_min for even r is not certified below p = r; check the max side always
            if b.name == "weyl-max" || p >= g.rank() as f64 || g.rank() % 2 == 1 {
                prop_assert!(!b.violated(2.0 * TOL), "{:?}", b);
            }
        }
    }

    #[test]
    fn perturbation_bound(g in small_graph(6), seed: u64, p in p_strategy()) {
        let mut bit = seed;
        let h = g.filter_edges(|_, _| { bit = bit.rotate_right(3); bit & 3 != 0 });
        for b in perturbation_check(&g, &h, p, &opts()).unwrap() {
            prop_assert!(!b.violated(TOL), "{:?}", b);
        }
    }

    #[test]
    fn nordhaus_bracket(g in small_graph(6), p in p_strategy()) {
        for b in nordhaus_check(&g, p, &opts()).unwrap() {
            prop_assert!(!b.violated(TOL), "{:?}", b);
        }
    }

    #[test]
    fn applicable_bounds_hold(g in prop_oneof![small_graph(6), small_weighted(6)], p in p_strategy()) {
        let max = lambda_max(&g, p, &opts()).unwrap();
        let min = lambda_min(&g, p, &opts()).unwrap();
        let mut all = bound_suite_max(&g, p, Some(max.value)).unwrap();
        all.extend(structural_bounds(&g, p, Some(max.value), None).unwrap());
        all.extend(bound_suite_min(&g, p, Some(min.value), Some(max.value)).unwrap());
        for b in &all {
            prop_assert!(!b.violated(TOL), "{:?}", b);
        }
        if g.is_unweighted() && p > 1.0 {
            let find = |n: &str| all.iter().find(|b| b.name == n).unwrap().bound;
            prop_assert!(find("holder-maclaurin") <= find("size") * (1.0 + 1e-12));
        }
    }

    #[test]
    fn constant_on_equivalence_classes(g in small_weighted(6), p in 1.01f64..6.0) {
        let x = lambda_max(&g, p, &opts()).unwrap();
        let x = x.vector.coords();
        for c in equivalence_classes(&g) {
            for &v in &c[1..] {
                prop_assert!((x[v] - x[c[0]]).abs() <= 1e-6, "class {:?}: {:?}", c, x);
            }
        }
    }

    // Entries are positive for every p > r-1, but near r-1 they can be as
    // small as 1e-15 (e.g. (w x/λ)^{1/(p-1)} on a weighted path), so the
    // 1e-9 floor is checked from r-1/2 upward.
    #[test]
    fn positive_for_connected_above_r_minus_1(g in small_weighted(6), dp in 0.5f64..3.0) {
        prop_assume!(!g.is_empty() && is_connected(&g));
        let p = g.rank() as f64 - 1.0 + dp;
        let res = lambda_max(&g, p, &opts()).unwrap();
        let min = res.vector.coords().iter().copied().fold(f64::INFINITY, f64::min);
        prop_assert!(min > 1e-9, "min entry {} at p {}", min, p);
    }

    #[test]
    fn unique_at_p_at_least_r(g in small_weighted(6), dp in 0.0f64..3.0, seed: u64) {
        prop_assume!(!g.is_empty() && is_connected(&g));
        let p = g.rank() as f64 + dp;
        let a = lambda_max(&g, p, &opts()).unwrap();
        let b = lambda_max(&g, p, &SolveOptions { seed, restarts: 4, ..opts() }).unwrap();
        prop_assert_eq!(a.status, Status::Converged);
        for (u, v) in a.vector.coords().iter().zip(b.vector.coords()) {
            prop_assert!((u - v).abs() <= 1e-6);
        }
    }
}

#[test]
fn oracle_agreement_on_tiny_graphs() {
    let graphs = [
        WeightedHypergraph::unweighted(3, 3, [[0, 1, 2]]).unwrap(),
        WeightedHypergraph::unweighted(2, 4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap(),
        WeightedHypergraph::unweighted(2, 4, [[0, 1], [1, 2], [0, 2], [2, 3]]).unwrap(),
        WeightedHypergraph::unweighted(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap(),
        WeightedHypergraph::unweighted(4, 4, [[0, 1, 2, 3]]).unwrap(),
    ];
    for g in graphs {
        let r = g.rank() as f64;
        for p in [1.0, 2.0, r, r + 1.0] {
            for target in [Target::Max, Target::Min] {
                let solver = match target {
                    Target::Max => lambda_max(&g, p, &opts()).unwrap().value,
                    Target::Min => lambda_min(&g, p, &opts()).unwrap().value,
                };
                let oracle = brute_force_lambda(&g, p, target, 20_000, 7);
                assert!((solver - oracle).abs() <= 1e-3, "{g:?} p={p} {target:?}: {solver} vs {oracle}");
            }
        }
    }
}

#[test]
fn serial_and_parallel_agree() {
    let g = WeightedHypergraph::random_gnp(3, 8, 0.4, 3).unwrap();
    for p in [1.0, 1.7, 3.0, 4.5] {
        let a = lambda_max(&g, p, &SolveOptions { parallel: true, ..opts() }).unwrap();
        let b = lambda_max(&g, p, &SolveOptions { parallel: false, ..opts() }).unwrap();
        assert_eq!(a, b);
        let a = lambda_min(&g, p, &SolveOptions { parallel: true, ..opts() }).unwrap();
        let b = lambda_min(&g, p, &SolveOptions { parallel: false, ..opts() }).unwrap();
        assert_eq!(a, b);
    }
}
