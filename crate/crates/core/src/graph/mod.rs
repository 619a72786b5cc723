//! Simple undirected graphs with dense bit-row adjacency.
//!
//! Vertices are always `0..n`. Every operation that builds a new graph
//! documents how it labels the result; nothing is relabeled implicitly.

mod connectivity;
mod edgelist;
mod graph6;

use std::fmt;

use crate::error::{Error, Result};

pub use edgelist::{decode_edge_list, encode_edge_list};
pub use graph6::{decode_graph6, encode_graph6};

/// Largest vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 1000;

/// Minimum degree sum over non-adjacent pairs.
///
/// Complete graphs have no non-adjacent pair and get [`Eta::Infinite`], which
/// compares greater than every finite value, so `eta >= bound` filters accept
/// them for any bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    Finite(usize),
    Infinite,
}

impl Eta {
    /// True iff `self >= bound`; negative bounds always pass.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Eta::Infinite => true,
            Eta::Finite(v) => v as i64 >= bound,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Eta::Finite(v) => Some(v),
            Eta::Infinite => None,
        }
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Finite(v) => write!(f, "{v}"),
            Eta::Infinite => f.write_str("inf"),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as `n` rows of `ceil(n / 64)` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Panics
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.insert(0, 1);
        }
        g
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                value: n,
                bound: MAX_VERTICES,
            });
        }
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64);
        let mut g = Graph::new(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in bits(m) {
                if v != u && v < n {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn insert(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    fn erase(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Adds the edge `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let fresh = !self.has_edge(u, v);
        self.insert(u, v);
        Ok(fresh)
    }

    /// Removes the edge `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let present = self.has_edge(u, v);
        self.erase(u, v);
        Ok(present)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        if !g.remove_edge(u, v)? {
            return Err(Error::NotAnEdge { u, v });
        }
        Ok(g)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as raw words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor mask of `v`; only valid for graphs with at most 64 vertices.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| bits(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-adjacent distinct pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        2 * self.edge_count() == self.n * self.n.saturating_sub(1)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn delta(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum of `deg(u) + deg(v)` over non-adjacent distinct pairs.
    pub fn eta(&self) -> Eta {
        let deg = self.degrees();
        let mut best: Option<usize> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    let s = deg[u] + deg[v];
                    best = Some(best.map_or(s, |b| b.min(s)));
                }
            }
        }
        best.map_or(Eta::Infinite, Eta::Finite)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            if a >= self.n {
                return Err(Error::VertexOutOfRange { vertex: a, n: self.n });
            }
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(Error::Precondition(format!("vertex {a} listed twice")));
                }
                if self.has_edge(a, b) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Merges `u` and `v` into one vertex adjacent to `N(u) ∪ N(v) - {u, v}`.
    ///
    /// The merged vertex keeps index `min(u, v)`; index `max(u, v)` is removed
    /// and every larger index shifts down by one.
    pub fn contract_pair(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let (keep, gone) = (u.min(v), u.max(v));
        let mut merged = self.clone();
        for w in self.neighbors(gone).collect::<Vec<_>>() {
            if w != keep {
                merged.insert(keep, w);
            }
        }
        merged.delete_vertex(gone)
    }

    /// `G^{w,U}`: a new vertex `n` joined to every vertex of `apex_neighbors`.
    pub fn cone_over(&self, apex_neighbors: &[usize]) -> Result<Graph> {
        let mut g = self.with_vertices(1);
        for &x in apex_neighbors {
            g.add_edge(self.n, x)?;
        }
        Ok(g)
    }

    /// The cone `G^w`; the apex gets index `n`.
    pub fn cone(&self) -> Graph {
        let all: Vec<usize> = (0..self.n).collect();
        self.cone_over(&all).expect("all vertices are in range")
    }

    /// Copy of `self` with `extra` isolated vertices appended.
    pub fn with_vertices(&self, extra: usize) -> Graph {
        let mut g = Graph::new(self.n + extra);
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        g
    }

    /// `G + K(X)`: every pair inside `set` becomes adjacent.
    pub fn complete_on(&self, set: &[usize]) -> Result<Graph> {
        let mut g = self.clone();
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                g.add_edge(a, b)?;
            }
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition("not a permutation".into()));
            }
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the graph contains `K_k` as a subgraph.
    pub fn has_clique(&self, k: usize) -> bool {
        fn grow(g: &Graph, candidates: Vec<usize>, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if candidates.len() < need {
                return false;
            }
            for (i, &x) in candidates.iter().enumerate() {
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&y| g.has_edge(x, y))
                    .collect();
                if grow(g, next, need - 1) {
                    return true;
                }
            }
            false
        }
        grow(self, (0..self.n).collect(), k)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates the set bits of a word in increasing order.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel5() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn from_edges_examples() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(Graph::from_edges(5, []).unwrap().edge_count(), 0);
        let p3 = Graph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn from_edges_rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn delta_eta_examples() {
        let w5 = wheel5();
        assert_eq!((w5.delta(), w5.eta()), (3, Eta::Finite(6)));
        let c4 = Graph::cycle(4);
        assert_eq!((c4.delta(), c4.eta()), (2, Eta::Finite(4)));
        let k5 = Graph::complete(5);
        assert_eq!((k5.delta(), k5.eta()), (4, Eta::Infinite));
        assert_eq!(Graph::new(0).delta(), 0);
        assert!(Eta::Infinite > Eta::Finite(usize::MAX));
    }

    #[test]
    fn structural_operations() {
        let c4 = Graph::cycle(4);
        let star = c4.contract_pair(0, 2).unwrap();
        assert_eq!(star.n(), 3);
        assert_eq!(star.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(c4.contract_pair(1, 1), Err(Error::SelfLoop(1)));

        let k5_minus_c5 = Graph::cycle(5).complement();
        assert_eq!(k5_minus_c5.complement(), Graph::cycle(5));

        let rim = wheel5().induced(&[1, 2, 3, 4]).unwrap();
        assert_eq!(rim, Graph::cycle(4));
    }

    #[test]
    fn contraction_of_adjacent_pair_drops_the_edge() {
        let k4 = Graph::complete(4);
        let k3 = k4.contract_pair(3, 1).unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn cone_and_cliques() {
        let w5 = Graph::cycle(4).cone();
        assert_eq!(w5.degree(4), 4);
        assert_eq!(w5.edge_count(), 8);
        assert!(w5.has_clique(3));
        assert!(!w5.has_clique(4));
        assert!(Graph::complete(5).has_clique(5));
    }

    #[test]
    fn relabel_checks_permutation() {
        let p = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(p.relabel(&[2, 0, 1]).unwrap().edges(), vec![(0, 2)]);
        assert!(p.relabel(&[0, 0, 1]).is_err());
    }

    #[test]
    fn components_count() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert!(!g.is_connected());
    }

    #[test]
    fn multiword_rows() {
        let mut g = Graph::new(130);
        g.add_edge(3, 129).unwrap();
        g.add_edge(64, 65).unwrap();
        assert_eq!(g.edges(), vec![(3, 129), (64, 65)]);
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![3]);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 2);
    }
}
