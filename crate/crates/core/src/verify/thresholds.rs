//! The thresholds `f(n, d)` and `g(n, d)`.
//!
//! `f` is one more than the largest minimum degree of a non-rigid graph on
//! `n` vertices; `g` is one more than the largest `eta` of a non-rigid,
//! non-complete one. Both are found by scanning the bound downwards and
//! stopping at the first level that contains a non-rigid graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{enumerate, EnumerationFilter, Filter};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::matroid::RigidityOracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThresholdStatus {
    /// The value is pinned by a known closed form in this range.
    Verified,
    /// No closed form is known here; the value is data only.
    Exploratory,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub quantity: &'static str,
    pub n: usize,
    pub d: usize,
    pub value: usize,
    pub status: ThresholdStatus,
    /// A non-rigid graph attaining `value - 1`.
    pub witness: Option<String>,
    pub seed: u64,
}

fn check_args(n: usize, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok(())
}

/// First non-rigid graph of the list accepted by `keep`, in list order.
fn first_non_rigid(graphs: &[Graph], d: usize, seed: u64, keep: impl Fn(&Graph) -> bool + Sync) -> Result<Option<Graph>> {
    let found = graphs
        .par_iter()
        .map(|g| -> Result<bool> { Ok(keep(g) && !RigidityOracle::new(g.clone(), d, seed)?.is_rigid()) })
        .collect::<Result<Vec<bool>>>()?;
    Ok(found.iter().position(|&b| b).map(|i| graphs[i].clone()))
}

fn scan(quantity: &'static str, n: usize, d: usize, seed: u64, top: usize, filter: impl Fn(usize) -> Filter) -> Result<(usize, Option<String>)> {
    for k in (0..=top).rev() {
        let graphs = enumerate(&EnumerationFilter::new(n, filter(k)))?;
        let hit = first_non_rigid(&graphs, d, seed, |g| quantity == "f" || !g.is_complete())?;
        if let Some(g) = hit {
            return Ok((k + 1, Some(encode_graph6(&g))));
        }
    }
    Ok((0, None))
}

/// `f(n, d)` by exhaustive search; `n` is limited by the enumerator.
pub fn compute_f(n: usize, d: usize, seed: u64) -> Result<Threshold> {
    check_args(n, d)?;
    let (value, witness) = if n < 2 { (0, None) } else { scan("f", n, d, seed, n - 2, Filter::MinDegree)? };
    let exploratory = d >= 4 && d + 1 < n && n < 29 * d;
    Ok(Threshold {
        quantity: "f",
        n,
        d,
        value,
        status: if exploratory { ThresholdStatus::Exploratory } else { ThresholdStatus::Verified },
        witness,
        seed,
    })
}

/// `g(n, d)` by exhaustive search; `n` is limited by the enumerator.
pub fn compute_g(n: usize, d: usize, seed: u64) -> Result<Threshold> {
    check_args(n, d)?;
    let (value, witness) = if n < 2 {
        (0, None)
    } else {
        scan("g", n, d, seed, 2 * n - 4, |k| Filter::EtaAtLeast(k as i64))?
    };
    let exploratory = d >= 4 && d + 1 < n && n < d * (d + 2);
    Ok(Threshold {
        quantity: "g",
        n,
        d,
        value,
        status: if exploratory { ThresholdStatus::Exploratory } else { ThresholdStatus::Verified },
        witness,
        seed,
    })
}

/// Closed form for `f(n, d)` where one is known.
pub fn known_f(n: usize, d: usize) -> Option<usize> {
    match d {
        2 if n >= 3 => Some(n.div_ceil(2).max(4 - 6 / n)),
        3 if n >= 4 => Some((n + 1).div_ceil(2).max(6 - 12 / n)),
        _ if d >= 1 && n >= 29 * d => Some((n + d - 2).div_ceil(2)),
        _ => None,
    }
}

/// Closed form for `g(n, d)` where one is known.
pub fn known_g(n: usize, d: usize) -> Option<usize> {
    match d {
        2 if n >= 3 => Some(if n == 4 { n + 1 } else { n }),
        3 if n >= 4 => Some(if (5..=7).contains(&n) { n + 2 } else { n + 1 }),
        _ if d >= 1 && n >= d * (d + 2) => Some(n + d - 2),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(compute_f(7, 3, 1).unwrap().value, 5);
        assert_eq!(compute_g(5, 3, 1).unwrap().value, 7);
        assert_eq!(compute_g(4, 2, 1).unwrap().value, 5);
        assert_eq!(compute_f(1, 2, 1).unwrap().value, 0);
        assert_eq!(compute_g(1, 2, 1).unwrap().value, 0);
        // Below d + 2 vertices only complete graphs are rigid.
        assert_eq!(compute_f(4, 3, 1).unwrap().value, 3);
        assert_eq!(compute_g(4, 3, 1).unwrap().value, 5);
    }

    #[test]
    fn witnesses_sit_just_below_the_threshold() {
        let t = compute_g(6, 3, 2).unwrap();
        let w = crate::graph::decode_graph6(t.witness.as_deref().unwrap()).unwrap();
        assert_eq!(w.eta().finite(), Some(t.value - 1));
        assert!(!RigidityOracle::new(w, 3, 5).unwrap().is_rigid());
    }

    #[test]
    fn exploratory_labels() {
        assert_eq!(compute_f(7, 4, 1).unwrap().status, ThresholdStatus::Exploratory);
        assert_eq!(compute_f(5, 4, 1).unwrap().status, ThresholdStatus::Verified);
        assert_eq!(compute_f(8, 3, 1).unwrap().status, ThresholdStatus::Verified);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(known_f(7, 3), Some(5));
        assert_eq!(known_f(4, 2), Some(3));
        assert_eq!(known_g(9, 3), Some(10));
        assert_eq!(known_g(8, 2), Some(8));
        assert_eq!(known_g(3, 1), Some(2));
        assert_eq!(known_f(10, 4), None);
    }
}
