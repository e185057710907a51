//! Weighted uniform hypergraphs, standard families and graph operations.

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::numeric::kahan_sum;

/// An r-uniform hypergraph on vertices `0..n` with strictly positive edge weights.
///
/// Immutable once built. Edges are sorted r-tuples kept in lexicographic order,
/// which fixes the summation order used by every numeric kernel.
#[derive(Debug, Clone)]
pub struct WeightedHypergraph {
    rank: usize,
    n: usize,
    edges: BTreeMap<Vec<usize>, f64>,
    flat: Vec<usize>,
    weights: Vec<f64>,
}

impl PartialEq for WeightedHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.n == other.n && self.edges == other.edges
    }
}

/// Mutable staging area for a [`WeightedHypergraph`].
#[derive(Debug, Clone)]
pub struct HypergraphBuilder {
    rank: usize,
    n: usize,
    edges: BTreeMap<Vec<usize>, f64>,
}

fn check_rank(rank: usize) -> Result<()> {
    if rank < 2 {
        return invalid(format!("rank must be at least 2, got {rank}"));
    }
    Ok(())
}

pub(crate) fn canonical_edge(rank: usize, n: usize, verts: &[usize]) -> Result<Vec<usize>> {
    if verts.len() != rank {
        return invalid(format!("edge {verts:?} has {} vertices, rank is {rank}", verts.len()));
    }
    let mut e = verts.to_vec();
    e.sort_unstable();
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return invalid(format!("vertex {v} out of range for order {n}"));
    }
    if e.windows(2).any(|w| w[0] == w[1]) {
        return invalid(format!("repeated vertex in edge {verts:?}"));
    }
    Ok(e)
}

fn check_weight(w: f64) -> Result<()> {
    if !w.is_finite() || w < 0.0 {
        return invalid(format!("weight must be finite and nonnegative, got {w}"));
    }
    Ok(())
}

impl HypergraphBuilder {
    pub fn new(rank: usize, n: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self { rank, n, edges: BTreeMap::new() })
    }

    /// Sets the weight of an edge. A zero weight removes it.
    pub fn set_edge(&mut self, verts: &[usize], w: f64) -> Result<&mut Self> {
        check_weight(w)?;
        let e = canonical_edge(self.rank, self.n, verts)?;
        if w == 0.0 {
            self.edges.remove(&e);
        } else {
            self.edges.insert(e, w);
        }
        Ok(self)
    }

    /// Adds `w` to the current weight of an edge.
    pub fn add_weight(&mut self, verts: &[usize], w: f64) -> Result<&mut Self> {
        check_weight(w)?;
        let e = canonical_edge(self.rank, self.n, verts)?;
        let cur = self.edges.get(&e).copied().unwrap_or(0.0);
        if cur + w > 0.0 {
            self.edges.insert(e, cur + w);
        }
        Ok(self)
    }

    pub fn build(self) -> WeightedHypergraph {
        WeightedHypergraph::from_map(self.rank, self.n, self.edges)
    }
}

/// The standard families, vertices labeled as documented per variant.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// K_n^r: all r-subsets of `0..n`.
    Complete { r: usize, n: usize },
    /// Complete multipartite r-graph; parts are consecutive vertex blocks.
    CompleteMultipartite { r: usize, parts: Vec<usize> },
    /// Turán 2-graph T_k(n): complete k-partite with balanced consecutive parts.
    Turan { n: usize, k: usize },
    /// C_n^r: segments of r consecutive vertices of Z/nZ.
    Cycle { r: usize, n: usize },
    /// k edges sharing only the center 0; edge i uses vertices 1+i(r-1) .. (i+1)(r-1).
    BetaStar { r: usize, k: usize },
    /// S_{t,n}^r: core `0..t` joined with every (r-t)-subset of `t..n`.
    TStar { r: usize, t: usize, n: usize },
    /// K_r^r on `0..r`.
    SingleEdge { r: usize },
}

/// Star-like joins of a graph with new vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinKind {
    /// G ∨ K_1: one new vertex added to every edge.
    K1,
    /// G ∨ tK_1: t new vertices, each edge extended by one of them.
    TK1(usize),
    /// G ∨ K_t^t: a core of t new vertices added to every edge.
    KTT(usize),
}

impl WeightedHypergraph {
    fn from_map(rank: usize, n: usize, edges: BTreeMap<Vec<usize>, f64>) -> Self {
        let mut flat = Vec::with_capacity(edges.len() * rank);
        let mut weights = Vec::with_capacity(edges.len());
        for (e, &w) in &edges {
            flat.extend_from_slice(e);
            weights.push(w);
        }
        Self { rank, n, edges, flat, weights }
    }

    /// Graph with no edges.
    pub fn empty(rank: usize, n: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self::from_map(rank, n, BTreeMap::new()))
    }

    /// Builds a graph from weighted edges; duplicates and invalid tuples are errors.
    pub fn from_edges<I, E>(rank: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, f64)>,
        E: AsRef<[usize]>,
    {
        check_rank(rank)?;
        let mut map = BTreeMap::new();
        for (verts, w) in edges {
            check_weight(w)?;
            let e = canonical_edge(rank, n, verts.as_ref())?;
            if map.contains_key(&e) {
                return invalid(format!("duplicate edge {e:?}"));
            }
            if w > 0.0 {
                map.insert(e, w);
            }
        }
        Ok(Self::from_map(rank, n, map))
    }

    /// Unweighted graph from a list of edges.
    pub fn unweighted<I, E>(rank: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        Self::from_edges(rank, n, edges.into_iter().map(|e| (e, 1.0)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// |G|: the total edge weight.
    pub fn size(&self) -> f64 {
        kahan_sum(self.weights.iter().copied())
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1.0)
    }

    /// |G|_∞
    pub fn max_weight(&self) -> f64 {
        self.weights.iter().fold(0.0, |a, &w| a.max(w))
    }

    /// Edges in sorted order with their weights.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (&[usize], f64)> + '_ {
        self.flat.chunks_exact(self.rank).zip(self.weights.iter().copied())
    }

    /// Weight of an edge (0 when absent); the tuple need not be sorted.
    pub fn weight(&self, verts: &[usize]) -> f64 {
        let mut e = verts.to_vec();
        e.sort_unstable();
        self.edges.get(&e).copied().unwrap_or(0.0)
    }

    pub fn has_edge(&self, verts: &[usize]) -> bool {
        self.weight(verts) > 0.0
    }

    /// Same edge set, every weight replaced by 1.
    pub fn support(&self) -> Self {
        let map = self.edges.keys().map(|e| (e.clone(), 1.0)).collect();
        Self::from_map(self.rank, self.n, map)
    }

    /// Every weight multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return invalid(format!("scale factor must be positive, got {c}"));
        }
        let map = self.edges.iter().map(|(e, &w)| (e.clone(), w * c)).collect();
        Ok(Self::from_map(self.rank, self.n, map))
    }

    pub fn construct(spec: &Family) -> Result<Self> {
        match *spec {
            Family::Complete { r, n } => {
                check_rank(r)?;
                if n < r {
                    return invalid(format!("complete graph needs n >= r (n={n}, r={r})"));
                }
                Self::unweighted(r, n, (0..n).combinations(r))
            }
            Family::SingleEdge { r } => Self::construct(&Family::Complete { r, n: r }),
            Family::Cycle { r, n } => {
                check_rank(r)?;
                if n <= r {
                    return invalid(format!("cycle needs n > r (n={n}, r={r})"));
                }
                let edges = (0..n).map(|i| (0..r).map(|j| (i + j) % n).collect::<Vec<_>>());
                let mut b = HypergraphBuilder::new(r, n)?;
                for e in edges {
                    b.set_edge(&e, 1.0)?;
                }
                Ok(b.build())
            }
            Family::BetaStar { r, k } => {
                check_rank(r)?;
                if k == 0 {
                    return invalid("beta-star needs k >= 1");
                }
                let n = (r - 1) * k + 1;
                let edges = (0..k).map(|i| {
                    std::iter::once(0).chain((0..r - 1).map(move |j| 1 + i * (r - 1) + j)).collect::<Vec<_>>()
                });
                Self::unweighted(r, n, edges)
            }
            Family::TStar { r, t, n } => {
                check_rank(r)?;
                if t == 0 || t >= r {
                    return invalid(format!("t-star needs r > t >= 1 (r={r}, t={t})"));
                }
                if n < r {
                    return invalid(format!("t-star needs n >= r (n={n}, r={r})"));
                }
                let edges = (t..n).combinations(r - t).map(|rest| (0..t).chain(rest).collect::<Vec<_>>());
                Self::unweighted(r, n, edges)
            }
            Family::CompleteMultipartite { r, ref parts } => {
                check_rank(r)?;
                if parts.contains(&0) {
                    return invalid("multipartite parts must have positive size");
                }
                if parts.len() < r {
                    return invalid(format!("multipartite needs at least r parts ({} < {r})", parts.len()));
                }
                let mut blocks = Vec::with_capacity(parts.len());
                let mut start = 0;
                for &s in parts {
                    blocks.push((start..start + s).collect::<Vec<_>>());
                    start += s;
                }
                let mut edges = Vec::new();
                for choice in (0..parts.len()).combinations(r) {
                    for e in choice.iter().map(|&i| blocks[i].iter().copied()).multi_cartesian_product() {
                        edges.push(e);
                    }
                }
                Self::unweighted(r, start, edges)
            }
            Family::Turan { n, k } => {
                if k < 2 || k > n {
                    return invalid(format!("turan needs 2 <= k <= n (n={n}, k={k})"));
                }
                let parts = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
                Self::construct(&Family::CompleteMultipartite { r: 2, parts })
            }
        }
    }

    /// Replaces vertex v by `mult[v]` clones and each edge by the complete r-partite
    /// graph across its classes.
    pub fn blow_up(&self, mult: &[usize]) -> Result<Self> {
        if mult.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: mult.len() });
        }
        if let Some(v) = mult.iter().position(|&m| m == 0) {
            return invalid(format!("multiplicity of vertex {v} is zero"));
        }
        let mut offset = Vec::with_capacity(self.n + 1);
        offset.push(0);
        for &m in mult {
            offset.push(offset.last().unwrap() + m);
        }
        let mut map = BTreeMap::new();
        for (e, w) in self.edges() {
            for verts in e.iter().map(|&v| offset[v]..offset[v + 1]).multi_cartesian_product() {
                map.insert(verts, w);
            }
        }
        Ok(Self::from_map(self.rank, offset[self.n], map))
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut map = self.edges.clone();
        for (e, w) in other.edges() {
            map.insert(e.iter().map(|v| v + self.n).collect(), w);
        }
        Ok(Self::from_map(self.rank, self.n + other.n, map))
    }

    /// Edge set V^(r) minus E(G); defined for unweighted graphs only.
    pub fn complement(&self) -> Result<Self> {
        if !self.is_unweighted() {
            return Err(Error::Weighted);
        }
        let map =
            (0..self.n).combinations(self.rank).filter(|e| !self.edges.contains_key(e)).map(|e| (e, 1.0)).collect();
        Ok(Self::from_map(self.rank, self.n, map))
    }

    /// Edge-wise sum of weights on the same vertex set.
    pub fn weighted_sum(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let mut map = self.edges.clone();
        for (e, w) in other.edges() {
            *map.entry(e.to_vec()).or_insert(0.0) += w;
        }
        Ok(Self::from_map(self.rank, self.n, map))
    }

    /// Number of edges in exactly one of the two supports.
    pub fn symmetric_difference_count(&self, other: &Self) -> Result<usize> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let only_self = self.edges.keys().filter(|e| !other.edges.contains_key(*e)).count();
        let only_other = other.edges.keys().filter(|e| !self.edges.contains_key(*e)).count();
        Ok(only_self + only_other)
    }

    pub fn join(&self, kind: JoinKind) -> Result<Self> {
        let n = self.n;
        match kind {
            JoinKind::K1 => self.join(JoinKind::TK1(1)),
            JoinKind::TK1(t) => {
                if t == 0 {
                    return invalid("join needs t >= 1");
                }
                let mut map = BTreeMap::new();
                for (e, w) in self.edges() {
                    for c in n..n + t {
                        let mut ne = e.to_vec();
                        ne.push(c);
                        map.insert(ne, w);
                    }
                }
                Ok(Self::from_map(self.rank + 1, n + t, map))
            }
            JoinKind::KTT(t) => {
                if t == 0 {
                    return invalid("join needs t >= 1");
                }
                let map = self.edges().map(|(e, w)| (e.iter().copied().chain(n..n + t).collect(), w)).collect();
                Ok(Self::from_map(self.rank + t, n + t, map))
            }
        }
    }

    /// Subgraph induced by `u`, relabeled to `0..|u|` in increasing order.
    /// Returns the graph and the old id of each new vertex.
    pub fn induced_subgraph(&self, u: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut keep = u.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return invalid(format!("vertex {v} out of range for order {}", self.n));
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let map = self
            .edges()
            .filter(|(e, _)| e.iter().all(|&v| new_id[v] != usize::MAX))
            .map(|(e, w)| (e.iter().map(|&v| new_id[v]).collect(), w))
            .collect();
        Ok((Self::from_map(self.rank, keep.len(), map), keep))
    }

    /// Spanning subgraph keeping the edges selected by `keep`.
    pub fn filter_edges<F: FnMut(&[usize], f64) -> bool>(&self, mut keep: F) -> Self {
        let map = self.edges().filter(|(e, w)| keep(e, *w)).map(|(e, w)| (e.to_vec(), w)).collect();
        Self::from_map(self.rank, self.n, map)
    }

    /// Unweighted k-graph of all k-subsets of edges.
    pub fn k_section(&self, k: usize) -> Result<Self> {
        if k < 2 || k >= self.rank {
            return invalid(format!("k-section needs 2 <= k < r (k={k}, r={})", self.rank));
        }
        let mut map = BTreeMap::new();
        for (e, _) in self.edges() {
            for s in e.iter().copied().combinations(k) {
                map.insert(s, 1.0);
            }
        }
        Ok(Self::from_map(k, self.n, map))
    }

    /// G^r(n, prob): each r-set kept independently, r-sets visited in lexicographic order.
    pub fn random_gnp(r: usize, n: usize, prob: f64, seed: u64) -> Result<Self> {
        check_rank(r)?;
        if !(0.0..=1.0).contains(&prob) {
            return invalid(format!("probability must lie in [0, 1], got {prob}"));
        }
        if n < r {
            return invalid(format!("random graph needs n >= r (n={n}, r={r})"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let map = (0..n).combinations(r).filter(|_| rng.gen::<f64>() < prob).map(|e| (e, 1.0)).collect();
        Ok(Self::from_map(r, n, map))
    }
}
