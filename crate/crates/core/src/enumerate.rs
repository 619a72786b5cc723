//! Isomorph-free enumeration of small graphs.
//!
//! Graphs are grown one vertex at a time: every representative on `m - 1`
//! vertices is extended by a new vertex with every possible neighborhood,
//! extensions failing the predicate are dropped, and the survivors are
//! deduplicated by canonical form. This is complete whenever the predicate
//! is hereditary (closed under vertex deletion), since every graph is then
//! an extension of one of its own vertex-deleted subgraphs.
//!
//! Degree-sum and minimum-degree filters are dense on the graph side and
//! sparse on the complement side, so they are enumerated as complements:
//!
//! * `eta >= b` holds iff every edge `uv` of the complement has
//!   complement-degree sum at most `2n - 2 - b`;
//! * `delta >= k` holds iff the complement has maximum degree at most
//!   `n - 1 - k`.
//!
//! Both complement predicates are hereditary when the bound is held fixed
//! at every level, which is how they are used.

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::labeling_of_masks;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for unfiltered enumeration.
pub const MAX_N_ALL: usize = 9;
/// Largest order for complement-side enumeration.
pub const MAX_N_SPARSE: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "snake_case")]
pub enum Filter {
    All,
    MinDegree(usize),
    EtaAtLeast(i64),
    /// Every non-adjacent pair `uv` has complement-degree sum at most the
    /// bound; the same family as `EtaAtLeast(2n - 2 - bound)`.
    ComplementEdgeDegreeSumAtMost(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationFilter {
    pub n: usize,
    pub filter: Filter,
}

impl EnumerationFilter {
    pub fn new(n: usize, filter: Filter) -> Self {
        EnumerationFilter { n, filter }
    }

    /// Whether `g` belongs to the enumerated family.
    pub fn accepts(&self, g: &Graph) -> bool {
        g.n() == self.n
            && match self.filter {
                Filter::All => true,
                Filter::MinDegree(k) => g.delta() >= k || g.n() == 0,
                Filter::EtaAtLeast(b) => g.eta().at_least(b),
                Filter::ComplementEdgeDegreeSumAtMost(s) => {
                    g.eta().at_least(2 * self.n as i64 - 2 - s as i64)
                }
            }
    }

    fn side(&self) -> Side {
        let n = self.n as i64;
        match self.filter {
            Filter::All => Side::Direct,
            Filter::MinDegree(k) => Side::ComplementMaxDegree(n - 1 - k as i64),
            Filter::EtaAtLeast(b) => Side::ComplementEdgeSum(2 * n - 2 - b),
            Filter::ComplementEdgeDegreeSumAtMost(s) => Side::ComplementEdgeSum(s as i64),
        }
    }
}

#[derive(Clone, Copy)]
enum Side {
    Direct,
    ComplementMaxDegree(i64),
    ComplementEdgeSum(i64),
}

impl Side {
    /// Hereditary predicate on the generated side.
    fn admits(self, adj: &[u64]) -> bool {
        match self {
            Side::Direct => true,
            Side::ComplementMaxDegree(bound) => adj.iter().all(|m| m.count_ones() as i64 <= bound),
            Side::ComplementEdgeSum(bound) => adj.iter().all(|&m| {
                let du = m.count_ones() as i64;
                crate::graph::bits(m).all(|v| du + adj[v].count_ones() as i64 <= bound)
            }),
        }
    }

    /// Largest useful degree for a new vertex.
    fn degree_cap(self, m: usize) -> usize {
        let cap = match self {
            Side::Direct => m as i64,
            Side::ComplementMaxDegree(b) => b,
            Side::ComplementEdgeSum(b) => b - 1,
        };
        cap.clamp(0, m as i64) as usize
    }
}

/// Packs the upper triangle of a graph on at most 11 vertices into a word,
/// in graph6 bit order.
fn pack(adj: &[u64]) -> u64 {
    let mut key = 0u64;
    let mut k = 0;
    for v in 1..adj.len() {
        for u in 0..v {
            key |= (adj[u] >> v & 1) << k;
            k += 1;
        }
    }
    key
}

fn unpack(n: usize, key: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if key >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    adj
}

fn canonical_key(adj: &[u64]) -> u64 {
    let lab = labeling_of_masks(adj);
    let mut relabeled = vec![0u64; adj.len()];
    for (u, &m) in adj.iter().enumerate() {
        relabeled[lab[u]] = crate::graph::bits(m).fold(0, |acc, v| acc | 1 << lab[v]);
    }
    pack(&relabeled)
}

/// Canonical keys of all graphs on `n` vertices satisfying `side`.
fn grow(n: usize, side: Side) -> Vec<u64> {
    let start = n.min(1);
    let mut level: Vec<u64> = if side.admits(&vec![0; start]) { vec![0] } else { vec![] };
    for m in start..n {
        let cap = side.degree_cap(m);
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&key| {
                let base = unpack(m, key);
                let mut out = Vec::new();
                for s in 0u64..1 << m {
                    if s.count_ones() as usize > cap {
                        continue;
                    }
                    let mut adj = base.clone();
                    adj.push(s);
                    for v in crate::graph::bits(s) {
                        adj[v] |= 1 << m;
                    }
                    if side.admits(&adj) {
                        out.push(canonical_key(&adj));
                    }
                }
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

fn check_bounds(f: &EnumerationFilter) -> Result<()> {
    let bound = match f.filter {
        Filter::All => MAX_N_ALL,
        _ => MAX_N_SPARSE,
    };
    if f.n > bound {
        return Err(Error::TooLarge { what: "order for exhaustive enumeration", value: f.n, bound });
    }
    Ok(())
}

/// One representative of every isomorphism class accepted by the filter,
/// in a deterministic order.
pub fn enumerate(f: &EnumerationFilter) -> Result<Vec<Graph>> {
    check_bounds(f)?;
    let side = f.side();
    let complement = !matches!(side, Side::Direct);
    let keys = grow(f.n, side);
    Ok(keys
        .into_iter()
        .map(|key| {
            let g = Graph::from_masks(&unpack(f.n, key));
            if complement {
                g.complement()
            } else {
                g
            }
        })
        .collect())
}

/// Number of classes accepted by the filter.
pub fn count(f: &EnumerationFilter) -> Result<usize> {
    check_bounds(f)?;
    Ok(grow(f.n, f.side()).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn counts_of_all_graphs() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count(&EnumerationFilter::new(n, Filter::All)).unwrap(), c, "n = {n}");
        }
    }

    #[test]
    fn pack_round_trip() {
        let g = crate::catalog::c7_2().graph;
        let adj: Vec<u64> = (0..7).map(|v| g.mask(v)).collect();
        assert_eq!(unpack(7, pack(&adj)), adj);
    }

    #[test]
    fn filtered_families_match_filtering_all_graphs() {
        for n in 1..=7 {
            let all = enumerate(&EnumerationFilter::new(n, Filter::All)).unwrap();
            let filters = [
                Filter::MinDegree(n / 2),
                Filter::EtaAtLeast(n as i64),
                Filter::EtaAtLeast(n as i64 + 1),
                Filter::ComplementEdgeDegreeSumAtMost(2),
            ];
            for filter in filters {
                let f = EnumerationFilter::new(n, filter);
                let direct: Vec<&Graph> = all.iter().filter(|g| f.accepts(g)).collect();
                let listed = enumerate(&f).unwrap();
                assert_eq!(listed.len(), direct.len(), "n = {n}, {filter:?}");
                assert!(listed.iter().all(|g| f.accepts(g)));
            }
        }
    }

    #[test]
    fn wheel_is_among_eta_six_graphs_on_five_vertices() {
        let w5 = crate::catalog::wheel5().graph;
        let listed = enumerate(&EnumerationFilter::new(5, Filter::EtaAtLeast(6))).unwrap();
        assert!(listed.iter().any(|g| is_isomorphic(g, &w5).unwrap()));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(enumerate(&EnumerationFilter::new(10, Filter::All)).is_err());
        assert!(enumerate(&EnumerationFilter::new(12, Filter::EtaAtLeast(20))).is_err());
        // Only K_n has eta above 2n - 4.
        let top = enumerate(&EnumerationFilter::new(11, Filter::EtaAtLeast(100))).unwrap();
        assert_eq!(top, vec![Graph::complete(11)]);
    }
}
