//! Local operations that preserve generic rigidity.
//!
//! New vertices always take the next free indices (`n`, `n + 1`, ...). The
//! splitting operations reuse the split vertex's index for `u` and give `v`
//! index `n`, so `contract_pair(split, z, n)` returns the input exactly.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn distinct_in_range(g: &Graph, set: &[usize], what: &str) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for &x in set {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
        if !out.insert(x) {
            return Err(Error::Precondition(format!("{what} lists vertex {x} twice")));
        }
    }
    Ok(out)
}

/// Adds vertex `n` joined to the `d` vertices of `set`.
pub fn zero_extension(g: &Graph, d: usize, set: &[usize]) -> Result<Graph> {
    let s = distinct_in_range(g, set, "attachment set")?;
    if s.len() != d {
        return Err(Error::Precondition(format!(
            "a {d}-dimensional 0-extension needs {d} attachment vertices, got {}",
            s.len()
        )));
    }
    g.cone_over(set)
}

/// Deletes the edge `uw` and adds vertex `n` joined to the `d + 1` vertices
/// of `set`, which must contain `u` and `w`.
pub fn one_extension(g: &Graph, d: usize, (u, w): (usize, usize), set: &[usize]) -> Result<Graph> {
    let s = distinct_in_range(g, set, "attachment set")?;
    if s.len() != d + 1 {
        return Err(Error::Precondition(format!(
            "a {d}-dimensional 1-extension needs {} attachment vertices, got {}",
            d + 1,
            s.len()
        )));
    }
    if u >= g.n() || w >= g.n() || !g.has_edge(u, w) {
        return Err(Error::NotAnEdge { u, v: w });
    }
    if !s.contains(&u) || !s.contains(&w) {
        return Err(Error::Precondition(format!("attachment set must contain {u} and {w}")));
    }
    let mut out = g.cone_over(set)?;
    out.remove_edge(u, w)?;
    Ok(out)
}

fn split(g: &Graph, z: usize, nu: &[usize], nv: &[usize], min_common: usize, adjacent: bool) -> Result<Graph> {
    if z >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: z, n: g.n() });
    }
    let a = distinct_in_range(g, nu, "neighbor set of u")?;
    let b = distinct_in_range(g, nv, "neighbor set of v")?;
    let nz: BTreeSet<usize> = g.neighbors(z).collect();
    let union: BTreeSet<usize> = a.union(&b).copied().collect();
    if union != nz {
        return Err(Error::Precondition(format!(
            "neighbor sets must cover N({z}) = {nz:?} exactly, got {union:?}"
        )));
    }
    let common = a.intersection(&b).count();
    if common < min_common {
        return Err(Error::Precondition(format!(
            "split needs at least {min_common} common neighbors, got {common}"
        )));
    }
    let v = g.n();
    let mut out = g.with_vertices(1);
    for &x in &nz {
        if !a.contains(&x) {
            out.remove_edge(z, x)?;
        }
    }
    for &x in &b {
        out.add_edge(v, x)?;
    }
    if adjacent {
        out.add_edge(z, v)?;
    }
    Ok(out)
}

/// `d`-dimensional vertex split of `z`: `u` (index `z`) gets `nu`, a new
/// vertex `v` (index `n`) gets `nv`, and `uv` becomes an edge.
/// Requires `nu ∪ nv = N(z)` and `|nu ∩ nv| >= d - 1`.
pub fn vertex_split(g: &Graph, d: usize, z: usize, nu: &[usize], nv: &[usize]) -> Result<Graph> {
    split(g, z, nu, nv, d.saturating_sub(1), true)
}

/// `d`-dimensional spider split of `z`: as [`vertex_split`] but `u` and `v`
/// stay non-adjacent and must share at least `d` neighbors.
pub fn spider_split(g: &Graph, d: usize, z: usize, nu: &[usize], nv: &[usize]) -> Result<Graph> {
    split(g, z, nu, nv, d, false)
}

/// Attaches a `k`-cycle on new vertices `n..n + k`, joining the `i`-th new
/// vertex to both vertices of `pairs[i]`.
///
/// The result is rigid in three dimensions whenever the input is.
pub fn cycle_attach(h: &Graph, pairs: &[(usize, usize)]) -> Result<Graph> {
    let k = pairs.len();
    if k < 3 {
        return Err(Error::Precondition(format!("cycle length must be at least 3, got {k}")));
    }
    let mut support = BTreeSet::new();
    for &(a, b) in pairs {
        for x in [a, b] {
            if x >= h.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: h.n() });
            }
        }
        if a == b {
            return Err(Error::Precondition(format!("pair ({a}, {b}) is not two distinct vertices")));
        }
        support.insert(a);
        support.insert(b);
    }
    if support.len() < 3 {
        return Err(Error::Precondition(format!(
            "pairs must touch at least 3 vertices, got {}",
            support.len()
        )));
    }
    let n = h.n();
    let mut g = h.with_vertices(k);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        g.add_edge(n + i, n + (i + 1) % k)?;
        g.add_edge(n + i, a)?;
        g.add_edge(n + i, b)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::RigidityOracle;

    fn rigid(g: &Graph, d: usize) -> bool {
        RigidityOracle::new(g.clone(), d, 17).unwrap().is_rigid()
    }

    #[test]
    fn zero_extension_examples() {
        let g = zero_extension(&Graph::complete(3), 2, &[0, 1]).unwrap();
        assert_eq!(g, Graph::complete(4).without_edge(2, 3).unwrap());
        let c = zero_extension(&Graph::cycle(4), 2, &[0, 2]).unwrap();
        let o = RigidityOracle::new(c, 2, 1).unwrap();
        assert!(o.is_independent());
        assert_eq!(o.rank(), 6);
        assert!(zero_extension(&Graph::complete(3), 2, &[0]).is_err());
        assert!(zero_extension(&Graph::complete(3), 2, &[0, 0]).is_err());
    }

    #[test]
    fn one_extension_examples() {
        let g = one_extension(&Graph::complete(4), 2, (0, 1), &[0, 1, 2]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 8);
        assert!(!g.has_edge(0, 1));
        assert!(rigid(&g, 2));
        assert!(one_extension(&Graph::cycle(4), 2, (0, 2), &[0, 1, 2]).is_err());
        assert!(one_extension(&Graph::complete(4), 2, (0, 1), &[0, 2, 3]).is_err());
        assert!(one_extension(&Graph::complete(4), 2, (0, 1), &[0, 1]).is_err());
    }

    #[test]
    fn splits_invert_contraction() {
        let k4 = Graph::complete(4);
        let g = vertex_split(&k4, 2, 0, &[1, 2], &[2, 3]).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(0, 4));
        assert!(rigid(&g, 2));
        assert_eq!(g.contract_pair(0, 4).unwrap(), k4);

        let k5 = Graph::complete(5);
        let s = spider_split(&k5, 2, 1, &[0, 2, 3], &[2, 3, 4]).unwrap();
        assert!(!s.has_edge(1, 5));
        assert!(rigid(&s, 2));
        assert_eq!(s.contract_pair(1, 5).unwrap(), k5);
    }

    #[test]
    fn split_preconditions() {
        let k4 = Graph::complete(4);
        assert!(vertex_split(&k4, 2, 0, &[1], &[2, 3]).is_err());
        assert!(vertex_split(&k4, 3, 0, &[1, 2], &[2, 3]).is_err());
        assert!(spider_split(&k4, 2, 0, &[1, 2], &[2, 3]).is_err());
        assert!(vertex_split(&k4, 2, 0, &[1, 2, 0], &[2, 3]).is_err());
    }

    #[test]
    fn cycle_attach_examples() {
        let g = cycle_attach(&Graph::complete(4), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.n(), 7);
        assert!(rigid(&g, 3));
        let g = cycle_attach(&Graph::complete(5), &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(rigid(&g, 3));
        assert!(cycle_attach(&Graph::complete(4), &[(0, 1), (1, 2)]).is_err());
        assert!(cycle_attach(&Graph::complete(4), &[(0, 1), (1, 0), (0, 1)]).is_err());
        assert!(cycle_attach(&Graph::complete(4), &[(0, 0), (1, 2), (0, 2)]).is_err());
    }
}
