//! Exhaustive checks of the degree and degree-sum rigidity theorems.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::thresholds::{known_f, known_g};
use super::{exception_name, run_over, Outcome, VerificationReport};
use crate::catalog::EXCEPTIONS_3D;
use crate::enumerate::{enumerate, EnumerationFilter, Filter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::RigidityOracle;

fn rigid(g: &Graph, d: usize, seed: u64) -> Result<bool> {
    Ok(RigidityOracle::new(g.clone(), d, seed)?.is_rigid())
}

fn eta_family(n: usize, bound: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumerationFilter::new(n, Filter::EtaAtLeast(bound as i64)))
}

fn require_range(what: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::Precondition(format!("{what} needs {lo} <= n <= {hi}, got n = {n}")));
    }
    Ok(())
}

/// Every graph with `eta >= n + 1` is 3-rigid unless it is `W5`, `B6`,
/// `C7_1` or `C7_2`.
pub fn verify_theorem_r3(n: usize, seed: u64) -> Result<VerificationReport> {
    require_range("the 3-dimensional degree-sum check", n, 5, 11)?;
    let report = VerificationReport::new("R3", seed).param("n", n).param("d", 3usize).param("eta_at_least", n + 1);
    run_over(report, &eta_family(n, n + 1)?, |g| {
        if rigid(g, 3, seed)? {
            return Ok(Outcome::Pass);
        }
        Ok(match exception_name(g, &EXCEPTIONS_3D)? {
            Some(name) => Outcome::Exception(name),
            None => Outcome::Violation,
        })
    })
}

/// Every graph with `eta >= n` is 2-rigid unless it is `C4`.
pub fn verify_theorem_r2(n: usize, seed: u64) -> Result<VerificationReport> {
    require_range("the 2-dimensional degree-sum check", n, 1, 11)?;
    let report = VerificationReport::new("R2", seed).param("n", n).param("d", 2usize).param("eta_at_least", n);
    run_over(report, &eta_family(n, n)?, |g| {
        if rigid(g, 2, seed)? {
            return Ok(Outcome::Pass);
        }
        Ok(match exception_name(g, &["C4"])? {
            Some(name) => Outcome::Exception(name),
            None => Outcome::Violation,
        })
    })
}

/// Which degree condition [`verify_degree_sum`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `delta >= n/2 + d - 1` implies rigid.
    FHalf,
    /// `n >= 29d` and `delta >= ceil((n + d - 2)/2)` implies rigid.
    FLarge,
    /// `eta >= n + 3d - 3` implies rigid.
    GGeneral,
    /// `n >= d(d + 2)` and `eta >= n + d - 2` implies rigid.
    GLarge,
    /// `eta >= g(n, d)` implies rigid, and some non-rigid graph has
    /// `eta = g(n, d) - 1`, for the known closed form of `g`.
    GTight,
    /// As `GTight`, for `delta` and `f`.
    FTight,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] =
        [BoundKind::FHalf, BoundKind::FLarge, BoundKind::GGeneral, BoundKind::GLarge, BoundKind::GTight, BoundKind::FTight];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::FHalf => "f-half",
            BoundKind::FLarge => "f-large",
            BoundKind::GGeneral => "g-general",
            BoundKind::GLarge => "g-large",
            BoundKind::GTight => "g-tight",
            BoundKind::FTight => "f-tight",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown bound kind {s:?}")))
    }
}

/// Checks one of the degree or degree-sum sufficient conditions on every
/// graph of order `n`.
pub fn verify_degree_sum(n: usize, d: usize, kind: BoundKind, seed: u64) -> Result<VerificationReport> {
    if d == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    let report = VerificationReport::new("degree-sum", seed).param("n", n).param("d", d).param("kind", kind.name());
    // Tight kinds also scan one level below the threshold for witnesses.
    let (uses_delta, threshold, tight) = match kind {
        BoundKind::FHalf => (true, (n + 2 * d - 2).div_ceil(2), false),
        BoundKind::FLarge => {
            if n < 29 * d {
                return Err(Error::Precondition(format!("f-large needs n >= 29d = {}, got n = {n}", 29 * d)));
            }
            (true, (n + d - 2).div_ceil(2), false)
        }
        BoundKind::GGeneral => (false, n + 3 * d - 3, false),
        BoundKind::GLarge => {
            if n < d * (d + 2) {
                return Err(Error::Precondition(format!("g-large needs n >= d(d+2) = {}, got n = {n}", d * (d + 2))));
            }
            (false, n + d - 2, false)
        }
        BoundKind::GTight => {
            let g = known_g(n, d).ok_or_else(|| Error::Precondition(format!("no closed form for g({n},{d})")))?;
            (false, g, true)
        }
        BoundKind::FTight => {
            let f = known_f(n, d).ok_or_else(|| Error::Precondition(format!("no closed form for f({n},{d})")))?;
            (true, f, true)
        }
    };
    let report = report.param("threshold", threshold);
    let lower = if tight { threshold.saturating_sub(1) } else { threshold };
    let graphs = if uses_delta {
        enumerate(&EnumerationFilter::new(n, Filter::MinDegree(lower)))?
    } else {
        eta_family(n, lower)?
    };
    let meets = |g: &Graph| {
        if uses_delta {
            g.delta() >= threshold
        } else {
            g.eta().at_least(threshold as i64)
        }
    };
    let mut report = run_over(report, &graphs, |g| {
        let is_rigid = rigid(g, d, seed)?;
        Ok(if meets(g) {
            if is_rigid {
                Outcome::Pass
            } else {
                Outcome::Violation
            }
        } else if !is_rigid && !g.is_complete() {
            Outcome::Witness
        } else {
            Outcome::Pass
        })
    })?;
    if tight && report.witnesses.is_empty() && threshold > 0 {
        report.missing_witness = true;
        report.pass = false;
    }
    Ok(report)
}

/// `eta >= n + d - 2` implies `4|E| >= n(n + d - 2)`; arithmetic only.
pub fn verify_ecount(n: usize, d: usize) -> Result<VerificationReport> {
    if d == 0 || d > n {
        return Err(Error::Precondition(format!("edge count check needs 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let report = VerificationReport::new("ecount", 0).param("n", n).param("d", d);
    run_over(report, &eta_family(n, n + d - 2)?, |g| {
        Ok(if 4 * g.edge_count() >= n * (n + d - 2) { Outcome::Pass } else { Outcome::Violation })
    })
}

/// Rigid, and still rigid after deleting any one edge.
pub fn redundantly_rigid(o: &RigidityOracle) -> bool {
    if !o.is_rigid() {
        return false;
    }
    let target = o.rigid_rank();
    let edges = o.graph().edges();
    (0..edges.len()).all(|i| {
        let mut rest = edges.clone();
        rest.remove(i);
        o.rank_of_pairs(&rest).expect("edges are in range") == target
    })
}

/// Generic global rigidity in the plane: complete on at most three
/// vertices, or 3-connected and redundantly 2-rigid.
pub fn globally_rigid_2d(g: &Graph, seed: u64) -> Result<bool> {
    if g.n() <= 3 {
        return Ok(g.is_complete());
    }
    Ok(g.is_k_connected(3) && redundantly_rigid(&RigidityOracle::new(g.clone(), 2, seed)?))
}

/// Every graph with `eta >= n + 1` is globally rigid in the plane.
pub fn verify_global_2d(n: usize, seed: u64) -> Result<VerificationReport> {
    require_range("the global rigidity check", n, 5, 11)?;
    let report = VerificationReport::new("global-2d", seed).param("n", n).param("eta_at_least", n + 1);
    run_over(report, &eta_family(n, n + 1)?, |g| {
        Ok(if globally_rigid_2d(g, seed)? { Outcome::Pass } else { Outcome::Violation })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn r3_small_orders() {
        let r = verify_theorem_r3(5, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.exceptions, vec!["W5"]);
        let r = verify_theorem_r3(7, 1).unwrap();
        assert_eq!(r.exceptions, vec!["C7_1", "C7_2"]);
        assert!(verify_theorem_r3(4, 1).is_err());
    }

    #[test]
    fn r2_at_four_vertices() {
        let r = verify_theorem_r2(4, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.exceptions, vec!["C4"]);
        assert!(verify_theorem_r2(6, 1).unwrap().exceptions.is_empty());
    }

    #[test]
    fn degree_sum_kinds() {
        assert!(verify_degree_sum(8, 2, BoundKind::FHalf, 1).unwrap().pass);
        let t = verify_degree_sum(6, 3, BoundKind::GTight, 1).unwrap();
        assert!(t.pass && !t.witnesses.is_empty());
        assert!(verify_degree_sum(6, 2, BoundKind::FTight, 1).unwrap().pass);
        assert!(verify_degree_sum(8, 1, BoundKind::GLarge, 1).unwrap().pass);
        assert!(verify_degree_sum(8, 3, BoundKind::GLarge, 1).is_err());
        assert!(verify_degree_sum(8, 1, BoundKind::FLarge, 1).is_err());
    }

    #[test]
    fn global_rigidity_examples() {
        assert!(globally_rigid_2d(&catalog::wheel5().graph, 1).unwrap());
        assert!(!globally_rigid_2d(&Graph::cycle(4), 1).unwrap());
        assert!(globally_rigid_2d(&Graph::complete(4), 1).unwrap());
        assert!(globally_rigid_2d(&Graph::complete(3), 1).unwrap());
        assert!(!globally_rigid_2d(&Graph::complete(4).without_edge(0, 1).unwrap(), 1).unwrap());
        assert!(verify_global_2d(6, 1).unwrap().pass);
    }

    #[test]
    fn ecount_small() {
        assert!(verify_ecount(6, 2).unwrap().pass);
        assert!(verify_ecount(3, 4).is_err());
    }
}
