//! The `d`-dimensional rigidity matroid of a fixed graph.
//!
//! A [`RigidityOracle`] fixes one random generic point for the graph's
//! vertices plus one spare vertex (index `n`, used as a cone apex), so every
//! rank it reports is the rank of a set of rows of one matrix. That keeps
//! repeated queries mutually consistent: submodularity, monotonicity and
//! closure computations never mix evaluations at different points.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{fill_rigidity_row, rigid_rank, sample_coordinates, CoordinateTable, EchelonBasis, FieldElement};
use crate::graph::Graph;

pub type Edge = (usize, usize);

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = (u.min(v), u.max(v));
    b * (b - 1) / 2 + a
}

/// Rank oracle for the rigidity matroid of `(G, d)` at one generic point.
///
/// Ranks are cached by edge-set signature. The cache uses interior
/// mutability, so an oracle is not `Sync`; give each worker its own.
pub struct RigidityOracle {
    graph: Graph,
    dim: usize,
    seed: u64,
    coords: CoordinateTable,
    cache: RefCell<HashMap<Vec<u64>, usize>>,
}

impl RigidityOracle {
    pub fn new(graph: Graph, dim: usize, seed: u64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Precondition("dimension must be at least 1".into()));
        }
        let coords = sample_coordinates(graph.n() + 1, dim, seed);
        Ok(RigidityOracle {
            graph,
            dim,
            seed,
            coords,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Column count of the rows built by this oracle (`d * (n + 1)`).
    pub fn width(&self) -> usize {
        self.coords.vertices() * self.dim
    }

    /// Rigidity-matrix row of a pair of vertices in `0..=n`.
    pub fn row(&self, u: usize, v: usize) -> Vec<FieldElement> {
        let mut row = vec![FieldElement::ZERO; self.width()];
        fill_rigidity_row(&self.coords, u, v, &mut row);
        row
    }

    /// Echelon basis spanned by the rows of `pairs`.
    pub fn basis_of(&self, pairs: &[Edge]) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.width());
        let mut row = vec![FieldElement::ZERO; self.width()];
        for &(u, v) in pairs {
            fill_rigidity_row(&self.coords, u, v, &mut row);
            basis.insert(&row).expect("rows share the oracle width");
        }
        basis
    }

    fn check_vertex(&self, v: usize, bound: usize) -> Result<()> {
        if v >= bound {
            return Err(Error::VertexOutOfRange { vertex: v, n: bound });
        }
        Ok(())
    }

    /// Uncached rank of an arbitrary set of pairs on `0..=n`.
    fn compute_rank(&self, pairs: &[Edge]) -> usize {
        let mut touched = vec![false; self.coords.vertices()];
        for &(u, v) in pairs {
            touched[u] = true;
            touched[v] = true;
        }
        let t = touched.iter().filter(|&&x| x).count();
        let ceiling = pairs.len().min(rigid_rank(t, self.dim));
        let mut basis = EchelonBasis::new(self.width());
        let mut row = vec![FieldElement::ZERO; self.width()];
        for &(u, v) in pairs {
            if basis.rank() == ceiling {
                break;
            }
            fill_rigidity_row(&self.coords, u, v, &mut row);
            basis.insert(&row).expect("rows share the oracle width");
        }
        basis.rank()
    }

    /// Rank of a set of vertex pairs on `0..=n`, where `n` is the spare apex.
    /// Pairs need not be edges of the graph. Duplicates are ignored.
    pub fn rank_of_pairs(&self, pairs: &[Edge]) -> Result<usize> {
        let bound = self.coords.vertices();
        let mut key = vec![0u64; (bound * bound.saturating_sub(1) / 2).div_ceil(64)];
        let mut unique = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            self.check_vertex(u, bound)?;
            self.check_vertex(v, bound)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let i = pair_index(u, v);
            if key[i / 64] >> (i % 64) & 1 == 0 {
                key[i / 64] |= 1 << (i % 64);
                unique.push((u.min(v), u.max(v)));
            }
        }
        if let Some(&r) = self.cache.borrow().get(&key) {
            return Ok(r);
        }
        let r = self.compute_rank(&unique);
        self.cache.borrow_mut().insert(key, r);
        Ok(r)
    }

    /// `r_d(G)`.
    pub fn rank(&self) -> usize {
        self.rank_of_pairs(&self.graph.edges()).expect("edges are valid pairs")
    }

    /// Rank of `F`, which must be a subset of `E(G)`.
    pub fn rank_of_edge_subset(&self, edges: &[Edge]) -> Result<usize> {
        for &(u, v) in edges {
            self.check_vertex(u, self.graph.n())?;
            self.check_vertex(v, self.graph.n())?;
            if !self.graph.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
        }
        self.rank_of_pairs(edges)
    }

    /// `r_d(G[X])`.
    pub fn rank_of_induced(&self, vertices: &[usize]) -> Result<usize> {
        let mut pairs = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            self.check_vertex(a, self.graph.n())?;
            for &b in &vertices[i + 1..] {
                if self.graph.has_edge(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        self.rank_of_pairs(&pairs)
    }

    /// `S(n, d)`, the rank of a rigid graph on the same vertex count.
    pub fn rigid_rank(&self) -> usize {
        rigid_rank(self.graph.n(), self.dim)
    }

    /// `S(n, d) - r_d(G)`. Defined for every `n`, so that rigidity is
    /// exactly `dof == 0`.
    pub fn dof(&self) -> usize {
        self.rigid_rank() - self.rank()
    }

    pub fn is_rigid(&self) -> bool {
        self.rank() == self.rigid_rank()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.graph.edge_count()
    }

    fn check_non_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u, self.graph.n())?;
        self.check_vertex(v, self.graph.n())?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.graph.has_edge(u, v) {
            return Err(Error::Adjacent { u, v });
        }
        Ok(())
    }

    /// Whether the non-adjacent pair `uv` is linked: `r(G + uv) = r(G)`.
    pub fn is_linked(&self, u: usize, v: usize) -> Result<bool> {
        self.check_non_edge(u, v)?;
        let basis = self.basis_of(&self.graph.edges());
        Ok(basis.spans(&self.row(u, v)).expect("same width"))
    }

    /// The closure: `G` plus every linked non-adjacent pair. All non-edges
    /// are tested against one basis of `E(G)`.
    pub fn closure(&self) -> Graph {
        let basis = self.basis_of(&self.graph.edges());
        let mut out = self.graph.clone();
        for (u, v) in self.graph.non_edges() {
            if basis.spans(&self.row(u, v)).expect("same width") {
                out.add_edge(u, v).expect("pair is in range");
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        let basis = self.basis_of(&self.graph.edges());
        self.graph
            .non_edges()
            .into_iter()
            .all(|(u, v)| !basis.spans(&self.row(u, v)).expect("same width"))
    }

    /// Whether the edge `uv` is a bridge: `r(G - uv) = r(G) - 1`.
    pub fn is_bridge(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u, self.graph.n())?;
        self.check_vertex(v, self.graph.n())?;
        if !self.graph.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let rest: Vec<Edge> = self
            .graph
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Ok(self.compute_rank(&rest) < self.rank())
    }

    /// Shrinks a dependent edge set to a circuit by deleting edges in
    /// descending lexicographic order whenever the rest stays dependent.
    fn shrink_to_circuit(&self, mut set: Vec<Edge>) -> Vec<Edge> {
        set.sort_unstable();
        let mut i = set.len();
        while i > 0 {
            i -= 1;
            let mut rest = set.clone();
            rest.remove(i);
            if self.compute_rank(&rest) < rest.len() {
                set = rest;
            }
        }
        set
    }

    /// A circuit of `G` in lexicographic order, or `None` if `G` is
    /// independent. The result is the set left after greedy deletion in
    /// descending lexicographic edge order.
    pub fn find_circuit(&self) -> Option<Vec<Edge>> {
        if self.is_independent() {
            return None;
        }
        Some(self.shrink_to_circuit(self.graph.edges()))
    }

    /// The unique circuit through the non-edge `uv` inside `B + uv`, where
    /// `B` is the lexicographically first basis of `E(G)`. When `G` is
    /// independent, `B = E(G)`. Requires `uv` to be linked.
    pub fn fundamental_circuit(&self, u: usize, v: usize) -> Result<Vec<Edge>> {
        if !self.is_linked(u, v)? {
            return Err(Error::Precondition(format!("{u}{v} is not linked")));
        }
        let mut basis = EchelonBasis::new(self.width());
        let mut b: Vec<Edge> = Vec::new();
        for (a, c) in self.graph.edges() {
            if basis.insert(&self.row(a, c)).expect("same width") {
                b.push((a, c));
            }
        }
        let e = (u.min(v), u.max(v));
        let mut set = b;
        let mut i = set.len();
        while i > 0 {
            i -= 1;
            let mut rest = set.clone();
            rest.remove(i);
            rest.push(e);
            if self.compute_rank(&rest) < rest.len() {
                set.remove(i);
            }
        }
        set.push(e);
        set.sort_unstable();
        Ok(set)
    }

    /// `r_d(G^{w,U})` with the apex at index `n`.
    pub fn cone_rank(&self, apex_neighbors: &[usize]) -> Result<usize> {
        let w = self.graph.n();
        let mut pairs = self.graph.edges();
        for &x in apex_neighbors {
            self.check_vertex(x, w)?;
            pairs.push((x, w));
        }
        self.rank_of_pairs(&pairs)
    }

    /// `rup_d(G) = r_d(G^w) - r_d(G)`.
    pub fn rup(&self) -> usize {
        let all: Vec<usize> = (0..self.graph.n()).collect();
        self.cone_rank(&all).expect("vertices are in range") - self.rank()
    }

    /// Edges of `G - v`, i.e. the edges not incident with `v`.
    pub fn edges_avoiding(&self, v: usize) -> Vec<Edge> {
        self.graph.edges().into_iter().filter(|&(a, b)| a != v && b != v).collect()
    }

    /// Edges incident with `v`, as `(v, w)` pairs ordered by `w`.
    pub fn star(&self, v: usize) -> Vec<Edge> {
        self.graph.neighbors(v).map(|w| (v, w)).collect()
    }

    /// `r_d^v(F) = r_d(E(G - v) + F) - r_d(G - v)` for `F` a set of edges at `v`.
    pub fn contracted_rank(&self, v: usize, edges: &[Edge]) -> Result<usize> {
        self.check_vertex(v, self.graph.n())?;
        for &(a, b) in edges {
            if (a != v && b != v) || !self.graph.has_edge(a, b) {
                return Err(Error::Precondition(format!("{a}{b} is not an edge at {v}")));
            }
        }
        let base = self.edges_avoiding(v);
        let r0 = self.rank_of_pairs(&base)?;
        let mut with = base;
        with.extend_from_slice(edges);
        Ok(self.rank_of_pairs(&with)? - r0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(g: Graph, d: usize) -> RigidityOracle {
        RigidityOracle::new(g, d, 0x5eed).unwrap()
    }

    fn wheel5() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn rank_dof_examples() {
        let o = oracle(wheel5(), 3);
        assert_eq!(o.rank(), 8);
        assert_eq!(o.dof(), 1);
        assert!(!o.is_rigid());

        let c4 = oracle(Graph::cycle(4), 2);
        assert!(!c4.is_rigid());
        assert_eq!(c4.dof(), 1);
        assert!(c4.is_independent());

        let k4e = Graph::complete(4).without_edge(0, 1).unwrap();
        assert!(!oracle(k4e, 3).is_rigid());

        let k4 = oracle(Graph::complete(4), 2);
        assert_eq!(k4.rank_of_edge_subset(&[]).unwrap(), 0);
        assert_eq!(k4.rank_of_edge_subset(&[(0, 1), (2, 3)]).unwrap(), 2);
        assert!(matches!(
            oracle(Graph::cycle(4), 2).rank_of_edge_subset(&[(0, 2)]),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn closure_and_linked_examples() {
        let c4 = oracle(Graph::cycle(4), 2);
        assert_eq!(c4.closure(), Graph::cycle(4));
        assert!(c4.is_closed());
        assert!(!c4.is_linked(0, 2).unwrap());
        assert!(matches!(c4.is_linked(0, 1), Err(Error::Adjacent { .. })));

        let k5e = oracle(Graph::complete(5).without_edge(1, 3).unwrap(), 3);
        assert!(k5e.is_linked(1, 3).unwrap());
        assert_eq!(k5e.closure(), Graph::complete(5));
        assert!(!k5e.is_closed());

        assert_eq!(oracle(Graph::complete(6), 3).closure(), Graph::complete(6));
    }

    #[test]
    fn bridges_and_circuits() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let t = oracle(path.clone(), 1);
        assert!(path.edges().iter().all(|&(u, v)| t.is_bridge(u, v).unwrap()));
        assert_eq!(t.find_circuit(), None);

        let c4 = oracle(Graph::cycle(4), 2);
        assert!(Graph::cycle(4).edges().iter().all(|&(u, v)| c4.is_bridge(u, v).unwrap()));

        let k5 = oracle(Graph::complete(5), 3);
        assert_eq!(k5.find_circuit().unwrap(), Graph::complete(5).edges());

        // Triangle plus pendant edge: the triangle is the only R_1 circuit.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let o = oracle(g, 1);
        assert_eq!(o.find_circuit().unwrap(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(!o.is_bridge(0, 1).unwrap());
        assert!(o.is_bridge(2, 3).unwrap());
    }

    #[test]
    fn fundamental_circuit_goes_through_the_pair() {
        let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let o = oracle(path, 1);
        assert_eq!(o.fundamental_circuit(1, 3).unwrap(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(matches!(
            oracle(Graph::cycle(4), 2).fundamental_circuit(0, 2),
            Err(Error::Precondition(_))
        ));
        let k5e = oracle(Graph::complete(5).without_edge(0, 4).unwrap(), 3);
        assert_eq!(k5e.fundamental_circuit(0, 4).unwrap(), Graph::complete(5).edges());
    }

    #[test]
    fn cone_and_rup() {
        for m in 0..=3 {
            assert_eq!(oracle(Graph::new(m), 3).rup(), m);
        }
        for n in 3..7 {
            assert_eq!(oracle(Graph::complete(n), 3).rup(), 3);
        }
        let c4 = oracle(Graph::cycle(4), 3);
        assert_eq!(c4.cone_rank(&[0, 1, 2, 3]).unwrap(), 8);
        assert_eq!(c4.cone_rank(&[]).unwrap(), c4.rank());
    }

    #[test]
    fn contracted_rank_examples() {
        let o = oracle(Graph::complete(4), 2);
        assert_eq!(o.contracted_rank(0, &[]).unwrap(), 0);
        assert_eq!(o.contracted_rank(0, &[(0, 2)]).unwrap(), 1);
        let all = o.star(0);
        let minus = oracle(Graph::complete(4).delete_vertex(0).unwrap(), 2).rank();
        assert_eq!(o.contracted_rank(0, &all).unwrap(), o.rank() - minus);
        assert!(o.contracted_rank(0, &[(1, 2)]).is_err());
    }

    #[test]
    fn cache_hits_agree_with_fresh_computation() {
        let o = oracle(wheel5(), 2);
        let a = o.rank();
        let b = o.rank();
        assert_eq!(a, b);
        assert_eq!(a, o.compute_rank(&wheel5().edges()));
    }
}
