//! Rigidity of dense random graphs.
//!
//! [`random_rigidity_experiment`] measures how often `G(n, p)` is rigid.
//! [`verify_contraction_chain`] runs the pair-contraction argument on one
//! sample: contract the pairs of a perfect matching of vertex pairs one at a
//! time, record the common neighborhood `X_i` of each pair just before it is
//! contracted, and test the half-size graph at the end. If every `X_i >= d`,
//! each step is reversed by a spider split plus added edges, so rigidity of
//! the half-size graph propagates back to the sample.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::gnp_graph;
use crate::error::{Error, Result};
use crate::field::trial_seed;
use crate::graph::{bits, Graph};
use crate::matroid::RigidityOracle;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomExperiment {
    pub n: usize,
    pub p: f64,
    pub d: usize,
    pub samples: usize,
    pub seed: u64,
    pub rigid: usize,
    pub fraction: f64,
    /// Binomial standard error of `fraction`.
    pub std_error: f64,
    /// Indices of the samples that were not rigid.
    pub non_rigid_samples: Vec<usize>,
}

/// Sample `i` of an experiment seeded with `seed`.
pub fn experiment_sample(n: usize, p: f64, seed: u64, i: usize) -> Result<Graph> {
    gnp_graph(n, p, trial_seed(seed, i as u64))
}

/// Fraction of `samples` draws of `G(n, p)` that are `d`-rigid. Sample `i`
/// is drawn with seed `trial_seed(seed, i)`.
pub fn random_rigidity_experiment(n: usize, p: f64, d: usize, samples: usize, seed: u64) -> Result<RandomExperiment> {
    if samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let rigid: Vec<bool> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let g = experiment_sample(n, p, seed, i)?;
            Ok(RigidityOracle::new(g, d, trial_seed(seed, i as u64).rotate_left(17))?.is_rigid())
        })
        .collect::<Result<_>>()?;
    let count = rigid.iter().filter(|&&r| r).count();
    let fraction = count as f64 / samples as f64;
    Ok(RandomExperiment {
        n,
        p,
        d,
        samples,
        seed,
        rigid: count,
        fraction,
        std_error: (fraction * (1.0 - fraction) / samples as f64).sqrt(),
        non_rigid_samples: (0..samples).filter(|&i| !rigid[i]).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainStep {
    pub i: usize,
    pub u: usize,
    pub v: usize,
    /// `X_i`, the common neighborhood of `u` and `v` in `G_i`.
    pub common: usize,
    /// `9i/16 + (n - 2i - 2)/4`, the mean of `X_i` in `G(n, 1/2)` under
    /// a pairing chosen independently of the graph.
    pub expected_mean: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub n: usize,
    pub d: usize,
    pub steps: Vec<ChainStep>,
    pub min_common: usize,
    /// Every `X_i >= d`.
    pub steps_ok: bool,
    pub half_min_degree: usize,
    /// `delta(G_{n/2}) >= n/4 + d - 1`, enough for `d`-rigidity of a graph
    /// on `n/2` vertices.
    pub half_degree_ok: bool,
    /// `delta(G_{n/2}) > n/4 + d`.
    pub half_degree_strict: bool,
    /// `G_{n/2}` is `d`-rigid according to the rank oracle.
    pub half_rigid: bool,
    /// `steps_ok` and `half_degree_ok`: the chain proves `G` rigid.
    pub certificate: bool,
    /// `G` is `d`-rigid according to the rank oracle.
    pub graph_rigid: bool,
    pub seed: u64,
}

/// Pairs `(i, n/2 + i)`, independent of the graph.
pub fn default_pairing(n: usize) -> Vec<(usize, usize)> {
    (0..n / 2).map(|i| (i, n / 2 + i)).collect()
}

/// Adjacency masks of the working graph, with contracted vertices removed
/// from `alive`.
struct Contraction {
    adj: Vec<u64>,
    alive: u64,
}

impl Contraction {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        Contraction { adj: (0..n).map(|v| g.mask(v)).collect(), alive: if n == 64 { u64::MAX } else { (1 << n) - 1 } }
    }

    fn common(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v] & self.alive).count_ones() as usize
    }

    /// Merges `v` into `u`.
    fn contract(&mut self, u: usize, v: usize) {
        let merged = (self.adj[u] | self.adj[v]) & !(1 << u) & !(1 << v);
        for w in bits(self.adj[v]) {
            self.adj[w] &= !(1 << v);
        }
        for w in bits(merged) {
            self.adj[w] |= 1 << u;
        }
        self.adj[u] = merged;
        self.adj[v] = 0;
        self.alive &= !(1 << v);
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if !g.n().is_multiple_of(2) || g.n() > 64 || g.n() == 0 {
        return Err(Error::Precondition(format!("chain check needs an even n in 2..=64, got n = {}", g.n())));
    }
    Ok(())
}

/// A pairing chosen from the graph: repeatedly take the unpaired vertex
/// whose best partner has the fewest common neighbors in the current
/// contracted graph, and pair it with that partner.
pub fn greedy_pairing(g: &Graph) -> Result<Vec<(usize, usize)>> {
    check_order(g)?;
    let mut c = Contraction::new(g);
    let mut free: Vec<usize> = (0..g.n()).collect();
    let mut pairing = Vec::with_capacity(g.n() / 2);
    while !free.is_empty() {
        let mut choice: Option<(usize, usize, usize)> = None;
        for &u in &free {
            let best = free
                .iter()
                .filter(|&&v| v != u)
                .map(|&v| (c.common(u, v), std::cmp::Reverse(v)))
                .max()
                .map(|(k, std::cmp::Reverse(v))| (k, v))
                .expect("free vertices come in pairs");
            if choice.is_none_or(|(k, _, _)| best.0 < k) {
                choice = Some((best.0, u, best.1));
            }
        }
        let (_, u, v) = choice.expect("free is non-empty");
        let (u, v) = (u.min(v), u.max(v));
        c.contract(u, v);
        free.retain(|&x| x != u && x != v);
        pairing.push((u, v));
    }
    Ok(pairing)
}

/// Runs the contraction chain for `pairing`, in order, on `g`.
pub fn verify_contraction_chain(g: &Graph, pairing: &[(usize, usize)], d: usize, seed: u64) -> Result<ChainReport> {
    check_order(g)?;
    let n = g.n();
    if d == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    if pairing.len() != n / 2 {
        return Err(Error::Precondition(format!("pairing needs {} pairs, got {}", n / 2, pairing.len())));
    }
    let mut seen = vec![false; n];
    for &(u, v) in pairing {
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if seen[x] {
                return Err(Error::Precondition(format!("vertex {x} appears twice in the pairing")));
            }
            seen[x] = true;
        }
    }

    let (steps, half) = run_chain(g, pairing)?;
    let min_common = steps.iter().map(|s| s.common).min().unwrap_or(0);
    let delta = half.delta();
    let steps_ok = min_common >= d;
    let half_degree_ok = half_degree_suffices(n, d, delta);
    Ok(ChainReport {
        n,
        d,
        steps,
        min_common,
        steps_ok,
        half_min_degree: delta,
        half_degree_ok,
        half_degree_strict: 4 * delta > n + 4 * d,
        half_rigid: RigidityOracle::new(half, d, seed)?.is_rigid(),
        certificate: steps_ok && half_degree_ok,
        graph_rigid: RigidityOracle::new(g.clone(), d, seed)?.is_rigid(),
        seed,
    })
}

/// `delta >= n/4 + d - 1` on `n/2` vertices.
fn half_degree_suffices(n: usize, d: usize, delta: usize) -> bool {
    4 * delta + 4 >= n + 4 * d
}

/// The steps of the chain and the half-size graph, whose vertex `i` is
/// pair `i`.
fn run_chain(g: &Graph, pairing: &[(usize, usize)]) -> Result<(Vec<ChainStep>, Graph)> {
    let n = g.n();
    let mut c = Contraction::new(g);
    let mut steps = Vec::with_capacity(n / 2);
    for (i, &(u, v)) in pairing.iter().enumerate() {
        steps.push(ChainStep {
            i,
            u,
            v,
            common: c.common(u, v),
            expected_mean: 9.0 * i as f64 / 16.0 + (n as f64 - 2.0 * i as f64 - 2.0) / 4.0,
        });
        c.contract(u, v);
    }
    // Pair i was merged into its first vertex.
    let half_edges = (0..n / 2)
        .flat_map(|i| (i + 1..n / 2).map(move |j| (i, j)))
        .filter(|&(i, j)| c.adj[pairing[i].0] >> pairing[j].0 & 1 == 1);
    Ok((steps, Graph::from_edges(n / 2, half_edges)?))
}

/// Looks for a pairing whose chain is a certificate. Tries
/// [`default_pairing`], then [`greedy_pairing`], then pairings from seeded
/// random permutations, `attempts` pairings in all.
pub fn search_pairing(g: &Graph, d: usize, attempts: usize, seed: u64) -> Result<Option<Vec<(usize, usize)>>> {
    check_order(g)?;
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let pairing = match attempt {
            0 => default_pairing(n),
            1 => greedy_pairing(g)?,
            _ => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                order.chunks(2).map(|p| (p[0], p[1])).collect()
            }
        };
        let (steps, half) = run_chain(g, &pairing)?;
        if steps.iter().all(|s| s.common >= d) && half_degree_suffices(n, d, half.delta()) {
            return Ok(Some(pairing));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn far_below_threshold_everything_is_rigid() {
        let r = random_rigidity_experiment(20, 0.5, 3, 50, 7).unwrap();
        assert_eq!(r.rigid, 50);
        assert_eq!(r.std_error, 0.0);
    }

    #[test]
    fn contraction_of_complete_graph() {
        let g = Graph::complete(8);
        let r = verify_contraction_chain(&g, &default_pairing(8), 2, 1).unwrap();
        // X_i = n - i - 2 in K_n.
        assert_eq!(r.steps.iter().map(|s| s.common).collect::<Vec<_>>(), vec![6, 5, 4, 3]);
        assert_eq!(r.half_min_degree, 3);
        assert!(r.certificate && r.graph_rigid && r.half_rigid);
    }

    #[test]
    fn pairing_validation() {
        let g = Graph::complete(6);
        assert!(verify_contraction_chain(&g, &[(0, 1), (1, 2), (3, 4)], 1, 1).is_err());
        assert!(verify_contraction_chain(&g, &[(0, 1), (2, 3)], 1, 1).is_err());
        assert!(verify_contraction_chain(&Graph::complete(5), &[(0, 1), (2, 3)], 1, 1).is_err());
        let p = greedy_pairing(&g).unwrap();
        assert!(verify_contraction_chain(&g, &p, 1, 1).is_ok());
    }

    #[test]
    fn contraction_matches_graph_contraction() {
        let g = gnp_graph(10, 0.4, 3).unwrap();
        let mut c = Contraction::new(&g);
        c.contract(2, 7);
        let h = g.contract_pair(2, 7).unwrap();
        // contract_pair keeps 2 and shifts vertices above 7 down by one.
        let relabel = |x: usize| if x > 7 { x - 1 } else { x };
        for u in (0..10).filter(|&x| x != 7) {
            let expected: Vec<usize> = bits(c.adj[u]).map(relabel).collect();
            assert_eq!(h.neighbors(relabel(u)).collect::<Vec<_>>(), expected);
        }
    }
}
