//! Named graphs with metadata that is stated up front and rechecked.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Eta, Graph};
use crate::matroid::RigidityOracle;

/// Metadata a catalog graph must have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub n: usize,
    pub edges: usize,
    pub delta: usize,
    #[serde(serialize_with = "eta_as_string")]
    pub eta: Eta,
    /// `Some((d, rigid))` when the entry comes with a rigidity claim.
    pub rigidity: Option<(usize, bool)>,
}

fn eta_as_string<S: serde::Serializer>(eta: &Eta, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&eta.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub expected: Expected,
}

/// Names of the fixed (non-parametric) entries.
pub const FIXED_NAMES: [&str; 5] = ["W5", "B6", "C7_1", "C7_2", "K4_minus_e"];

/// The exceptional graphs that have `eta = n + 1` but are not 3-rigid.
pub const EXCEPTIONS_3D: [&str; 4] = ["W5", "B6", "C7_1", "C7_2"];

/// A metadata field that disagrees with the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub field: &'static str,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.field, self.expected, self.found)
    }
}

impl CatalogEntry {
    /// Recomputes every metadata field from the graph. Rigidity is decided
    /// by a rank oracle with the given seed.
    pub fn verify(&self, seed: u64) -> Vec<Mismatch> {
        let g = &self.graph;
        let e = &self.expected;
        let mut out = Vec::new();
        let mut cmp = |field, expected: String, found: String| {
            if expected != found {
                out.push(Mismatch { field, expected, found });
            }
        };
        cmp("n", e.n.to_string(), g.n().to_string());
        cmp("edges", e.edges.to_string(), g.edge_count().to_string());
        cmp("delta", e.delta.to_string(), g.delta().to_string());
        cmp("eta", e.eta.to_string(), g.eta().to_string());
        if let Some((d, rigid)) = e.rigidity {
            let found = RigidityOracle::new(g.clone(), d, seed).map(|o| o.is_rigid());
            cmp("rigidity", rigid.to_string(), found.map_or_else(|e| e.to_string(), |r| r.to_string()));
        }
        out
    }
}

fn entry(name: impl Into<String>, graph: Graph, expected: Expected) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        graph,
        expected,
    }
}

fn complete_minus(n: usize, removed: &[(usize, usize)]) -> Graph {
    let mut g = Graph::complete(n);
    for &(u, v) in removed {
        g.remove_edge(u, v).expect("removed pairs are in range");
    }
    g
}

/// The wheel on five vertices: hub 0 over the 4-cycle `1 2 3 4`.
pub fn wheel5() -> CatalogEntry {
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)])
        .expect("valid edges");
    entry(
        "W5",
        g,
        Expected { n: 5, edges: 8, delta: 3, eta: Eta::Finite(6), rigidity: Some((3, false)) },
    )
}

/// `K_6` minus the paths `0 1 2` and `3 4 5`.
pub fn b6() -> CatalogEntry {
    let g = complete_minus(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]);
    entry(
        "B6",
        g,
        Expected { n: 6, edges: 11, delta: 3, eta: Eta::Finite(7), rigidity: Some((3, false)) },
    )
}

/// `K_7` minus the triangle `0 1 2` and the 4-cycle `3 4 5 6`.
pub fn c7_1() -> CatalogEntry {
    let g = complete_minus(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]);
    entry(
        "C7_1",
        g,
        Expected { n: 7, edges: 14, delta: 4, eta: Eta::Finite(8), rigidity: Some((3, false)) },
    )
}

/// `K_7` minus the 7-cycle `0 1 ... 6`.
pub fn c7_2() -> CatalogEntry {
    let g = Graph::cycle(7).complement();
    entry(
        "C7_2",
        g,
        Expected { n: 7, edges: 14, delta: 4, eta: Eta::Finite(8), rigidity: Some((3, false)) },
    )
}

/// `K_4` minus the edge `01`.
pub fn k4_minus_e() -> CatalogEntry {
    let g = complete_minus(4, &[(0, 1)]);
    entry(
        "K4_minus_e",
        g,
        Expected { n: 4, edges: 5, delta: 2, eta: Eta::Finite(4), rigidity: Some((3, false)) },
    )
}

/// `K_a` on `0..a` and `K_b` on `a - s..a + b - s`, sharing `s` vertices.
/// Requires `a, b >= s + 1`; the result is not `(s + 1)`-rigid.
pub fn glued_cliques(a: usize, b: usize, s: usize) -> Result<CatalogEntry> {
    if a < s + 1 || b < s + 1 {
        return Err(Error::Precondition(format!(
            "glued_cliques({a},{b},{s}) needs both cliques larger than the shared part"
        )));
    }
    let n = a + b - s;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { what: "vertex count", value: n, bound: crate::graph::MAX_VERTICES });
    }
    let mut g = Graph::new(n);
    for (lo, hi) in [(0, a), (a - s, n)] {
        for u in lo..hi {
            for v in u + 1..hi {
                g.add_edge(u, v)?;
            }
        }
    }
    let c2 = |x: usize| x * x.saturating_sub(1) / 2;
    let expected = Expected {
        n,
        edges: c2(a) + c2(b) - c2(s),
        delta: a.min(b) - 1,
        eta: Eta::Finite(n + s - 2),
        rigidity: Some((s + 1, false)),
    };
    Ok(entry(format!("glued_cliques({a},{b},{s})"), g, expected))
}

/// Two cliques glued along `d - 1` vertices with minimum degree
/// `ceil((n + d - 2) / 2) - 1`, not `d`-rigid. Requires `1 <= d < n`.
pub fn f_extremal(n: usize, d: usize) -> Result<CatalogEntry> {
    if d == 0 || d >= n {
        return Err(Error::Precondition(format!("f_extremal({n},{d}) needs 1 <= d < n")));
    }
    let a = (n + d - 2).div_ceil(2);
    let b = n - a + d - 1;
    let mut e = glued_cliques(a, b, d - 1)?;
    e.name = format!("f_extremal({n},{d})");
    debug_assert_eq!(e.expected.delta, a - 1);
    Ok(e)
}

/// Erdős–Rényi sample: each pair, in lexicographic order, is an edge with
/// probability `p`, driven by a ChaCha stream seeded with `seed`.
pub fn gnp_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::from_edges(n, [])?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<CatalogEntry> {
    let g = gnp_graph(n, p, seed)?;
    let expected = Expected {
        n,
        edges: g.edge_count(),
        delta: g.delta(),
        eta: g.eta(),
        rigidity: None,
    };
    Ok(entry(format!("gnp({n},{p},{seed})"), g, expected))
}

fn parse_args(name: &str, inner: &str, count: usize) -> Result<Vec<String>> {
    let args: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
    if args.len() != count {
        return Err(Error::UnknownCatalogName(format!("{name}: expected {count} arguments")));
    }
    Ok(args)
}

fn parse_num<T: std::str::FromStr>(name: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::UnknownCatalogName(format!("{name}: cannot parse argument `{s}`")))
}

/// Looks up a catalog entry: one of [`FIXED_NAMES`], or
/// `glued_cliques(a,b,s)`, `f_extremal(n,d)`, `gnp(n,p,seed)`.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    match name {
        "W5" => return Ok(wheel5()),
        "B6" => return Ok(b6()),
        "C7_1" => return Ok(c7_1()),
        "C7_2" => return Ok(c7_2()),
        "K4_minus_e" => return Ok(k4_minus_e()),
        _ => {}
    }
    let (head, inner) = name
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(|| Error::UnknownCatalogName(name.to_string()))?;
    match head.trim() {
        "glued_cliques" => {
            let a = parse_args(name, inner, 3)?;
            glued_cliques(parse_num(name, &a[0])?, parse_num(name, &a[1])?, parse_num(name, &a[2])?)
        }
        "f_extremal" => {
            let a = parse_args(name, inner, 2)?;
            f_extremal(parse_num(name, &a[0])?, parse_num(name, &a[1])?)
        }
        "gnp" => {
            let a = parse_args(name, inner, 3)?;
            gnp(parse_num(name, &a[0])?, parse_num(name, &a[1])?, parse_num(name, &a[2])?)
        }
        _ => Err(Error::UnknownCatalogName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_entries_recheck() {
        for name in FIXED_NAMES {
            let e = catalog(name).unwrap();
            assert_eq!(e.verify(3), vec![], "{name}");
        }
        let mut degrees = b6().graph.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![3, 3, 4, 4, 4, 4]);
        for e in [c7_1(), c7_2()] {
            assert!(e.graph.degrees().iter().all(|&x| x == 4));
            assert!(e.graph.edge_count() < 3 * 7 - 6);
        }
    }

    #[test]
    fn parametric_entries_recheck() {
        for (a, b, s) in [(4, 5, 1), (3, 3, 2), (5, 5, 2), (6, 4, 3)] {
            let e = glued_cliques(a, b, s).unwrap();
            assert_eq!(e.verify(5), vec![], "{}", e.name);
        }
        for n in 2..12 {
            for d in 1..n {
                let e = f_extremal(n, d).unwrap();
                assert_eq!(e.verify(5), vec![], "{}", e.name);
                assert_eq!(e.expected.delta, (n + d - 2).div_ceil(2) - 1);
            }
        }
        assert!(glued_cliques(2, 5, 2).is_err());
        assert!(f_extremal(3, 3).is_err());
    }

    #[test]
    fn names_parse() {
        assert_eq!(catalog("glued_cliques(4, 5, 1)").unwrap().graph.n(), 8);
        assert_eq!(catalog("f_extremal(8,3)").unwrap().name, "f_extremal(8,3)");
        assert_eq!(catalog("gnp(10,0.5,7)").unwrap().graph, gnp_graph(10, 0.5, 7).unwrap());
        assert!(matches!(catalog("W6"), Err(Error::UnknownCatalogName(_))));
        assert!(catalog("glued_cliques(4,5)").is_err());
        assert!(catalog("gnp(10,x,7)").is_err());
    }

    #[test]
    fn gnp_is_reproducible_and_extreme_probabilities_work() {
        assert_eq!(gnp_graph(20, 0.3, 1).unwrap(), gnp_graph(20, 0.3, 1).unwrap());
        assert_eq!(gnp_graph(9, 1.0, 4).unwrap(), Graph::complete(9));
        assert_eq!(gnp_graph(9, 0.0, 4).unwrap().edge_count(), 0);
        assert!(gnp_graph(9, 1.5, 4).is_err());
    }
}
