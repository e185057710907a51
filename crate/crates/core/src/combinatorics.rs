//! Structural predicates and statistics: degrees, connectivity, tightness,
//! transversals, linearity, regularity, equivalence classes and coloring.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::error::{invalid, Error, Result};
use crate::graph::WeightedHypergraph;
use crate::numeric::binomial;

/// Exact subset enumeration limit for tightness.
pub const TIGHTNESS_MAX_ORDER: usize = 20;
/// Exact search limit for the chromatic number.
pub const CHROMATIC_MAX_ORDER: usize = 16;
/// Exhaustive transversal search limit (reference implementation).
pub const EXHAUSTIVE_MAX_ORDER: usize = 24;
const MATCHING_NODE_BUDGET: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SetDegrees {
    pub k: usize,
    /// Nonzero k-set degrees; absent k-sets have degree 0.
    pub table: BTreeMap<Vec<usize>, f64>,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<f64>,
    pub min_degree: f64,
    pub max_degree: f64,
    pub set_degrees: Option<SetDegrees>,
    /// β-degrees; `None` when the exact matching search exceeded its budget.
    pub beta_degrees: Option<Vec<usize>>,
}

impl DegreeProfile {
    pub fn min_beta(&self) -> Option<usize> {
        self.beta_degrees.as_ref().map(|b| b.iter().copied().min().unwrap_or(0))
    }

    pub fn max_beta(&self) -> Option<usize> {
        self.beta_degrees.as_ref().map(|b| b.iter().copied().max().unwrap_or(0))
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree - self.min_degree <= 1e-12 * self.max_degree.max(1.0)
    }
}

pub fn vertex_degrees(g: &WeightedHypergraph) -> Vec<f64> {
    let mut d = vec![0.0; g.order()];
    for (e, w) in g.edges() {
        for &v in e {
            d[v] += w;
        }
    }
    d
}

/// Weighted k-set degrees d(U) for the k-sets that lie in some edge.
pub fn set_degrees(g: &WeightedHypergraph, k: usize) -> Result<SetDegrees> {
    if k == 0 || k >= g.rank() {
        return invalid(format!("set size must satisfy 1 <= k < r (k={k}, r={})", g.rank()));
    }
    let mut table: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for (e, w) in g.edges() {
        for s in e.iter().copied().combinations(k) {
            *table.entry(s).or_insert(0.0) += w;
        }
    }
    let max = table.values().fold(0.0f64, |a, &b| a.max(b));
    let min = if (table.len() as f64) < binomial(g.order(), k) {
        0.0
    } else {
        table.values().fold(f64::INFINITY, |a, &b| a.min(b))
    };
    Ok(SetDegrees { k, table, min, max })
}

pub fn degree_profile(g: &WeightedHypergraph, k: Option<usize>) -> Result<DegreeProfile> {
    let degrees = vertex_degrees(g);
    let min_degree = degrees.iter().copied().fold(f64::INFINITY, f64::min);
    let max_degree = degrees.iter().copied().fold(0.0, f64::max);
    let set_degrees = k.map(|k| set_degrees(g, k)).transpose()?;
    let beta_degrees = (0..g.order()).map(|u| beta_degree(g, u).ok()).collect::<Option<Vec<_>>>();
    Ok(DegreeProfile {
        degrees,
        min_degree: if min_degree.is_finite() { min_degree } else { 0.0 },
        max_degree,
        set_degrees,
        beta_degrees,
    })
}

/// Largest number of edges through `u` pairwise meeting only in `u`.
pub fn beta_degree(g: &WeightedHypergraph, u: usize) -> Result<usize> {
    let links: Vec<Vec<usize>> = g
        .edges()
        .filter(|(e, _)| e.contains(&u))
        .map(|(e, _)| e.iter().copied().filter(|&v| v != u).collect())
        .collect();
    let mut used = vec![false; g.order()];
    let mut best = greedy_packing(&links, g.order());
    let mut nodes = 0;
    pack(&links, 0, 0, &mut used, &mut best, &mut nodes, g.rank() - 1)?;
    Ok(best)
}

fn greedy_packing(sets: &[Vec<usize>], n: usize) -> usize {
    let mut used = vec![false; n];
    let mut count = 0;
    for s in sets {
        if s.iter().all(|&v| !used[v]) {
            s.iter().for_each(|&v| used[v] = true);
            count += 1;
        }
    }
    count
}

#[allow(clippy::too_many_arguments)]
fn pack(
    sets: &[Vec<usize>],
    i: usize,
    cur: usize,
    used: &mut [bool],
    best: &mut usize,
    nodes: &mut usize,
    width: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > MATCHING_NODE_BUDGET {
        return Err(Error::BudgetExceeded { what: "beta-degree matching".into(), limit: MATCHING_NODE_BUDGET });
    }
    if cur > *best {
        *best = cur;
    }
    let free = used.iter().filter(|&&b| !b).count();
    if i == sets.len() || cur + (sets.len() - i).min(free / width.max(1)) <= *best {
        return Ok(());
    }
    let s = &sets[i];
    if s.iter().all(|&v| !used[v]) {
        s.iter().for_each(|&v| used[v] = true);
        pack(sets, i + 1, cur + 1, used, best, nodes, width)?;
        s.iter().for_each(|&v| used[v] = false);
    }
    pack(sets, i + 1, cur, used, best, nodes, width)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }

    fn blocks(mut self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = self.find(v);
            by_root.entry(r).or_default().push(v);
        }
        by_root.into_values().collect()
    }
}

/// Connected components; isolated vertices are singleton blocks. Blocks are
/// ordered by their smallest vertex.
pub fn components(g: &WeightedHypergraph) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(g.order());
    for (e, _) in g.edges() {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    uf.blocks()
}

pub fn is_connected(g: &WeightedHypergraph) -> bool {
    components(g).len() <= 1
}

fn edge_masks(g: &WeightedHypergraph) -> Vec<u32> {
    g.edges().map(|(e, _)| e.iter().fold(0u32, |m, &v| m | (1 << v))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tightness {
    pub tight: bool,
    /// A proper vertex set containing an edge that no edge meets in k..r-1 vertices.
    pub witness: Option<Vec<usize>>,
}

pub fn is_k_tight(g: &WeightedHypergraph, k: usize) -> Result<Tightness> {
    let r = g.rank();
    if k == 0 || k >= r {
        return invalid(format!("tightness needs 1 <= k <= r-1 (k={k}, r={r})"));
    }
    let n = g.order();
    if n > TIGHTNESS_MAX_ORDER {
        return Err(Error::BudgetExceeded {
            what: format!("tightness check on {n} vertices"),
            limit: TIGHTNESS_MAX_ORDER,
        });
    }
    if g.is_empty() {
        return Ok(Tightness { tight: false, witness: None });
    }
    let masks = edge_masks(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for u in 1..full {
        if masks.iter().all(|&e| e & u != e) {
            continue;
        }
        let ok = masks.iter().any(|&e| {
            let c = (e & u).count_ones() as usize;
            c >= k && c < r
        });
        if !ok {
            let witness = (0..n).filter(|&v| u >> v & 1 == 1).collect();
            return Ok(Tightness { tight: false, witness: Some(witness) });
        }
    }
    Ok(Tightness { tight: true, witness: None })
}

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn flip(b: &mut Bits, i: usize) {
    b[i / 64] ^= 1 << (i % 64);
}

/// Solves A z = b over GF(2) with rows given as bitsets. Returns a particular
/// solution (free variables zero) and a basis of the null space.
fn solve_gf2(mut rows: Vec<(Bits, bool)>, n: usize) -> Option<(Bits, Vec<Bits>)> {
    let words = n.div_ceil(64).max(1);
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..rows.len()).find(|&i| bit(&rows[i].0, col)) else {
            continue;
        };
        rows.swap(rank, pr);
        let (pivot_row, pivot_rhs) = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && bit(&row.0, col) {
                for (a, b) in row.0.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
                row.1 ^= pivot_rhs;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let mut particular = vec![0u64; words];
    for (i, &c) in pivots.iter().enumerate() {
        if rows[i].1 {
            flip(&mut particular, c);
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; words];
        flip(&mut v, free);
        for (i, &c) in pivots.iter().enumerate() {
            if bit(&rows[i].0, free) {
                flip(&mut v, c);
            }
        }
        basis.push(v);
    }
    Some((particular, basis))
}

fn parity_rows(g: &WeightedHypergraph, odd: bool) -> Vec<(Bits, bool)> {
    let words = g.order().div_ceil(64).max(1);
    g.edges()
        .map(|(e, _)| {
            let mut b = vec![0u64; words];
            e.iter().for_each(|&v| flip(&mut b, v));
            (b, odd)
        })
        .collect()
}

fn members(b: &Bits, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| bit(b, i)).collect()
}

/// A vertex set meeting every edge in an odd number of vertices.
pub fn odd_transversal(g: &WeightedHypergraph) -> Option<Vec<usize>> {
    let n = g.order();
    solve_gf2(parity_rows(g, true), n).map(|(z, _)| members(&z, n))
}

/// A nonempty proper vertex set meeting every edge in an even number of vertices.
pub fn even_transversal(g: &WeightedHypergraph) -> Option<Vec<usize>> {
    let n = g.order();
    let (_, basis) = solve_gf2(parity_rows(g, false), n)?;
    basis.iter().map(|b| members(b, n)).find(|s| s.len() < n)
}

fn exhaustive_transversal(g: &WeightedHypergraph, odd: bool) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::BudgetExceeded {
            what: format!("exhaustive transversal search on {n} vertices"),
            limit: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let masks: Vec<u32> = edge_masks(g);
    let want = u32::from(odd);
    let (lo, hi) = if odd { (0u32, 1u32 << n) } else { (1u32, (1u32 << n).saturating_sub(1)) };
    for u in lo..hi {
        if masks.iter().all(|&e| (e & u).count_ones() % 2 == want) {
            return Ok(Some((0..n).filter(|&v| u >> v & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// Reference implementation of [`odd_transversal`] by subset enumeration.
pub fn odd_transversal_exhaustive(g: &WeightedHypergraph) -> Result<Option<Vec<usize>>> {
    exhaustive_transversal(g, true)
}

/// Reference implementation of [`even_transversal`] by subset enumeration.
pub fn even_transversal_exhaustive(g: &WeightedHypergraph) -> Result<Option<Vec<usize>>> {
    exhaustive_transversal(g, false)
}

pub fn is_odd_transversal(g: &WeightedHypergraph, u: &[usize]) -> bool {
    g.edges().all(|(e, _)| e.iter().filter(|v| u.contains(v)).count() % 2 == 1)
}

pub fn is_even_transversal(g: &WeightedHypergraph, u: &[usize]) -> bool {
    g.edges().all(|(e, _)| e.iter().filter(|v| u.contains(v)).count() % 2 == 0)
}

fn subset_counts(g: &WeightedHypergraph, k: usize) -> HashMap<Vec<usize>, usize> {
    let mut counts = HashMap::new();
    for (e, _) in g.edges() {
        for s in e.iter().copied().combinations(k) {
            *counts.entry(s).or_insert(0) += 1;
        }
    }
    counts
}

/// Every two edges share at most k vertices.
pub fn is_k_linear(g: &WeightedHypergraph, k: usize) -> Result<bool> {
    if k == 0 || k >= g.rank() {
        return invalid(format!("linearity needs 1 <= k <= r-1 (k={k}, r={})", g.rank()));
    }
    Ok(subset_counts(g, k + 1).values().all(|&c| c <= 1))
}

/// Every k-set of vertices lies in exactly one edge.
pub fn is_steiner(g: &WeightedHypergraph, k: usize) -> Result<bool> {
    if k == 0 || k >= g.rank() {
        return invalid(format!("Steiner systems need 1 <= k < r (k={k}, r={})", g.rank()));
    }
    let counts = subset_counts(g, k);
    Ok(counts.len() as f64 == binomial(g.order(), k) && counts.values().all(|&c| c == 1))
}

/// All k-set degrees are equal (relative tolerance 1e-12).
pub fn is_k_set_regular(g: &WeightedHypergraph, k: usize) -> Result<bool> {
    let sd = set_degrees(g, k)?;
    let regular = sd.max - sd.min <= 1e-12 * sd.max.max(1e-300);
    if regular && !g.is_empty() {
        let expected =
            g.size() * crate::numeric::falling_factorial(g.rank(), k) / crate::numeric::falling_factorial(g.order(), k);
        debug_assert!((sd.max - expected).abs() <= 1e-9 * expected.max(1.0));
    }
    Ok(regular)
}

/// Whether swapping u and v is a weight-preserving automorphism.
pub fn transposition_is_automorphism(g: &WeightedHypergraph, u: usize, v: usize) -> bool {
    let swap = |x: usize| {
        if x == u {
            v
        } else if x == v {
            u
        } else {
            x
        }
    };
    g.edges().all(|(e, w)| {
        let hu = e.contains(&u);
        let hv = e.contains(&v);
        if hu == hv {
            return true;
        }
        let img: Vec<usize> = e.iter().map(|&x| swap(x)).collect();
        g.weight(&img) == w
    })
}

/// Classes of the relation u ~ v iff the transposition (u v) is an automorphism.
pub fn equivalence_classes(g: &WeightedHypergraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if uf.find(u) != uf.find(v) && transposition_is_automorphism(g, u, v) {
                uf.union(u, v);
            }
        }
    }
    uf.blocks()
}

fn min_coloring(n: usize, edges: &[Vec<usize>]) -> usize {
    if n == 0 {
        return 0;
    }
    if edges.is_empty() {
        return 1;
    }
    // edges grouped by their largest vertex: checked once that vertex is colored
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in edges {
        closing[*e.iter().max().unwrap()].push(e);
    }
    fn go(v: usize, k: usize, used: usize, colors: &mut [usize], closing: &[Vec<&[usize]>]) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            colors[v] = c;
            let ok = closing[v].iter().all(|e| e.iter().any(|&x| colors[x] != c));
            if ok && go(v + 1, k, used.max(c + 1), colors, closing) {
                return true;
            }
        }
        false
    }
    let mut colors = vec![0; n];
    (1..=n).find(|&k| go(0, k, 0, &mut colors, &closing)).unwrap_or(n)
}

/// Weak chromatic number: fewest classes with no monochromatic edge.
pub fn chromatic_number_exact(g: &WeightedHypergraph) -> Result<usize> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(Error::BudgetExceeded {
            what: format!("chromatic number on {n} vertices"),
            limit: CHROMATIC_MAX_ORDER,
        });
    }
    let edges: Vec<Vec<usize>> = g.edges().map(|(e, _)| e.to_vec()).collect();
    Ok(min_coloring(n, &edges))
}

/// Fewest classes such that every edge meets each class in at most one vertex.
pub fn partite_number_exact(g: &WeightedHypergraph) -> Result<usize> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(Error::BudgetExceeded {
            what: format!("partite number on {n} vertices"),
            limit: CHROMATIC_MAX_ORDER,
        });
    }
    let mut pairs: Vec<Vec<usize>> =
        g.edges().flat_map(|(e, _)| e.iter().copied().combinations(2).collect::<Vec<_>>()).collect();
    pairs.sort();
    pairs.dedup();
    Ok(min_coloring(n, &pairs))
}

/// Checks that `parts` is a partition of the vertices with every edge meeting
/// each part at most once.
pub fn is_partite_witness(g: &WeightedHypergraph, parts: &[Vec<usize>]) -> bool {
    let mut label = vec![usize::MAX; g.order()];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= g.order() || label[v] != usize::MAX {
                return false;
            }
            label[v] = i;
        }
    }
    if label.contains(&usize::MAX) {
        return false;
    }
    g.edges().all(|(e, _)| e.iter().map(|&v| label[v]).all_unique())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn fam(f: Family) -> WeightedHypergraph {
        WeightedHypergraph::construct(&f).unwrap()
    }

    fn two_edges(shared: usize) -> WeightedHypergraph {
        let second: Vec<usize> = (3 - shared..6 - shared).collect();
        WeightedHypergraph::unweighted(3, 6 - shared, vec![vec![0, 1, 2], second]).unwrap()
    }

    #[test]
    fn degrees() {
        let k43 = fam(Family::Complete { r: 3, n: 4 });
        let dp = degree_profile(&k43, Some(2)).unwrap();
        assert_eq!(dp.degrees, vec![3.0; 4]);
        let sd = dp.set_degrees.unwrap();
        assert_eq!((sd.min, sd.max, sd.table.len()), (2.0, 2.0, 6));
        let bs = fam(Family::BetaStar { r: 3, k: 4 });
        let dp = degree_profile(&bs, None).unwrap();
        assert_eq!(dp.degrees[0], 4.0);
        assert!(dp.degrees[1..].iter().all(|&d| d == 1.0));
        assert_eq!(dp.beta_degrees.as_ref().unwrap()[0], 4);
        let dp = degree_profile(&WeightedHypergraph::empty(3, 4).unwrap(), None).unwrap();
        assert_eq!((dp.min_degree, dp.max_degree), (0.0, 0.0));
        assert!(degree_profile(&k43, Some(3)).is_err());
        assert_eq!(beta_degree(&k43, 0).unwrap(), 1);
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&fam(Family::Cycle { r: 3, n: 5 })).len(), 1);
        let k = fam(Family::SingleEdge { r: 3 });
        assert_eq!(components(&k.disjoint_union(&k).unwrap()), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let g = WeightedHypergraph::unweighted(3, 5, vec![[0, 2, 4]]).unwrap();
        assert_eq!(components(&g), vec![vec![0, 2, 4], vec![1], vec![3]]);
    }

    #[test]
    fn tightness() {
        let g = two_edges(1);
        assert!(is_k_tight(&g, 1).unwrap().tight);
        let t = is_k_tight(&g, 2).unwrap();
        assert!(!t.tight && t.witness.is_some());
        assert!(is_k_tight(&fam(Family::Complete { r: 3, n: 5 }), 2).unwrap().tight);
        assert!(!is_k_tight(&WeightedHypergraph::empty(3, 4).unwrap(), 1).unwrap().tight);
        assert!(is_k_tight(&WeightedHypergraph::empty(3, 21).unwrap(), 1).is_err());
    }

    #[test]
    fn transversals() {
        let c4 = fam(Family::Cycle { r: 2, n: 4 });
        let u = odd_transversal(&c4).unwrap();
        assert!(is_odd_transversal(&c4, &u) && u.len() == 2);
        assert!(odd_transversal(&fam(Family::Complete { r: 2, n: 3 })).is_none());
        let e = fam(Family::SingleEdge { r: 3 });
        assert!(is_odd_transversal(&e, &odd_transversal(&e).unwrap()));
        let u = even_transversal(&e).unwrap();
        assert!(is_even_transversal(&e, &u) && !u.is_empty() && u.len() < 3);
        assert!(even_transversal(&fam(Family::Complete { r: 2, n: 3 })).is_none());
        assert_eq!(even_transversal_exhaustive(&e).unwrap().map(|u| u.len()), Some(2));
    }

    #[test]
    fn linearity_and_steiner() {
        assert!(is_k_linear(&fam(Family::Complete { r: 2, n: 5 }), 1).unwrap());
        let fano = WeightedHypergraph::unweighted(
            3,
            7,
            vec![[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
        )
        .unwrap();
        assert!(is_steiner(&fano, 2).unwrap());
        assert!(is_k_set_regular(&fano, 2).unwrap());
        let g = two_edges(2);
        assert!(!is_k_linear(&g, 1).unwrap());
        assert!(is_k_linear(&g, 2).unwrap());
    }

    #[test]
    fn regularity() {
        assert!(is_k_set_regular(&fam(Family::Complete { r: 4, n: 6 }), 3).unwrap());
        let c5 = fam(Family::Cycle { r: 3, n: 5 });
        assert!(is_k_set_regular(&c5, 1).unwrap());
        assert!(!is_k_set_regular(&c5, 2).unwrap());
    }

    #[test]
    fn classes() {
        assert_eq!(equivalence_classes(&fam(Family::Complete { r: 3, n: 5 })).len(), 1);
        let bs = fam(Family::BetaStar { r: 3, k: 4 });
        assert_eq!(equivalence_classes(&bs), vec![vec![0], vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]]);
        assert_eq!(equivalence_classes(&two_edges(1)), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn coloring() {
        assert_eq!(chromatic_number_exact(&fam(Family::Complete { r: 2, n: 5 })).unwrap(), 5);
        assert_eq!(chromatic_number_exact(&fam(Family::SingleEdge { r: 3 })).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&fam(Family::Cycle { r: 2, n: 5 })).unwrap(), 3);
        assert_eq!(partite_number_exact(&fam(Family::CompleteMultipartite { r: 3, parts: vec![2, 2, 2] })).unwrap(), 3);
        assert!(chromatic_number_exact(&WeightedHypergraph::empty(2, 17).unwrap()).is_err());
        let k222 = fam(Family::CompleteMultipartite { r: 3, parts: vec![2, 2, 2] });
        assert!(is_partite_witness(&k222, &[vec![0, 1], vec![2, 3], vec![4, 5]]));
        assert!(!is_partite_witness(&k222, &[vec![0, 2], vec![1, 3], vec![4, 5]]));
    }
}
