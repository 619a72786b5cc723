//! Exhaustive checks of the supporting lemmas, rank contribution identities,
//! the coning correspondence and the rigidity-preserving constructions.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{exception_name, run_indexed, run_over, Outcome, VerificationReport};
use crate::catalog::gnp_graph;
use crate::constructions::{cycle_attach, one_extension, spider_split, vertex_split, zero_extension};
use crate::enumerate::{enumerate, EnumerationFilter, Filter};
use crate::error::{Error, Result};
use crate::field::trial_seed;
use crate::graph::Graph;
use crate::matroid::RigidityOracle;
use crate::rc::{check_rc_geq_d, check_rc_kfree, check_rc_tbound, rc_exact, rc_star_exact, ExactRational, Status};

fn oracle(g: &Graph, d: usize, seed: u64) -> Result<RigidityOracle> {
    RigidityOracle::new(g.clone(), d, seed)
}

fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumerationFilter::new(n, Filter::All))
}

fn eta_family(n: usize, bound: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumerationFilter::new(n, Filter::EtaAtLeast(bound as i64)))
}

fn positive(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    Ok(())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Violation
    }
}

/// `eta >= n + d - 2` plus a vertex whose neighbors are pairwise linked
/// implies rigid.
pub fn verify_simplicial_vertex(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    let report = VerificationReport::new("simplicial-vertex", seed).param("n", n).param("d", d);
    run_over(report, &eta_family(n, n + d - 2)?, |g| {
        let o = oracle(g, d, seed)?;
        let closure = o.closure();
        let simplicial = (0..n).any(|w| {
            let nbrs: Vec<usize> = g.neighbors(w).collect();
            nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| closure.has_edge(a, b)))
        });
        Ok(if simplicial { verdict(o.is_rigid()) } else { Outcome::Skip })
    })
}

/// `n >= 2d + 1`, `delta = d` and `eta >= n + d - 2` imply rigid.
pub fn verify_minlarge(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    if n < 2 * d + 1 {
        return Err(Error::Precondition(format!("needs n >= 2d + 1 = {}, got n = {n}", 2 * d + 1)));
    }
    let report = VerificationReport::new("minlarge", seed).param("n", n).param("d", d);
    run_over(report, &eta_family(n, n + d - 2)?, |g| {
        if g.delta() != d {
            return Ok(Outcome::Skip);
        }
        Ok(verdict(oracle(g, d, seed)?.is_rigid()))
    })
}

/// `n >= 5`, `delta = 3` and `eta >= n + 1` imply 3-rigid, except `W5`
/// and `B6`.
pub fn verify_minlarge3(n: usize, seed: u64) -> Result<VerificationReport> {
    if n < 5 {
        return Err(Error::Precondition(format!("needs n >= 5, got n = {n}")));
    }
    let report = VerificationReport::new("minlarge3", seed).param("n", n);
    run_over(report, &eta_family(n, n + 1)?, |g| {
        if g.delta() != 3 {
            return Ok(Outcome::Skip);
        }
        if oracle(g, 3, seed)?.is_rigid() {
            return Ok(Outcome::Pass);
        }
        Ok(match exception_name(g, &["W5", "B6"])? {
            Some(name) => Outcome::Exception(name),
            None => Outcome::Violation,
        })
    })
}

/// `6 <= n <= 7` and `delta >= 4` imply 3-rigid, except `C7_1` and `C7_2`.
pub fn verify_claim2(n: usize, seed: u64) -> Result<VerificationReport> {
    if !(6..=7).contains(&n) {
        return Err(Error::Precondition(format!("needs 6 <= n <= 7, got n = {n}")));
    }
    let report = VerificationReport::new("claim2", seed).param("n", n);
    run_over(report, &enumerate(&EnumerationFilter::new(n, Filter::MinDegree(4)))?, |g| {
        if oracle(g, 3, seed)?.is_rigid() {
            return Ok(Outcome::Pass);
        }
        Ok(match exception_name(g, &["C7_1", "C7_2"])? {
            Some(name) => Outcome::Exception(name),
            None => Outcome::Violation,
        })
    })
}

/// Every graph on `n` vertices without isolated vertices whose edge set is
/// a 3-dimensional circuit is 3-rigid.
pub fn verify_small_circuits(n: usize, seed: u64) -> Result<VerificationReport> {
    let report = VerificationReport::new("small-circuits", seed).param("n", n).param("d", 3usize);
    run_over(report, &all_graphs(n)?, |g| {
        if g.n() == 0 || g.delta() == 0 {
            return Ok(Outcome::Skip);
        }
        let o = oracle(g, 3, seed)?;
        if o.rank() + 1 != g.edge_count() {
            return Ok(Outcome::Skip);
        }
        for (u, v) in g.edges() {
            if o.is_bridge(u, v)? {
                return Ok(Outcome::Skip);
            }
        }
        Ok(verdict(o.is_rigid()))
    })
}

/// `rup_d(G) (delta - d + 2) <= d (n - d + 1)` for every graph with `n >= d`
/// and `delta >= d - 1`.
pub fn verify_easybound(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    if n < d {
        return Err(Error::Precondition(format!("needs n >= d, got n = {n}, d = {d}")));
    }
    let report = VerificationReport::new("easybound", seed).param("n", n).param("d", d);
    let (n, d) = (n as i64, d as i64);
    run_over(report, &all_graphs(n as usize)?, |g| {
        if (g.delta() as i64) < d - 1 {
            return Ok(Outcome::Skip);
        }
        let rup = oracle(g, d as usize, seed)?.rup() as i64;
        Ok(verdict(rup * (g.delta() as i64 - d + 2) <= d * (n - d + 1)))
    })
}

/// For closed `G` in dimension `d`, `d <= d' <= d + 2` and any `u, v`:
/// `rup_{d'}(G - v) >= s1 + s2 + s3`.
pub fn verify_s1s2s3(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    if n == 0 {
        return Err(Error::Precondition("needs n >= 1".into()));
    }
    let report = VerificationReport::new("s1s2s3", seed).param("n", n).param("d", d);
    run_over(report, &all_graphs(n)?, |g| {
        if !oracle(g, d, seed)?.is_closed() {
            return Ok(Outcome::Skip);
        }
        for v in 0..n {
            let rest = g.delete_vertex(v)?;
            let nv = g.mask(v);
            let outside = n - 1 - g.degree(v);
            for dp in d..=d + 2 {
                let rup = oracle(&rest, dp, seed)?.rup();
                let s1 = outside.min(dp - d + 1);
                for u in 0..n {
                    let nu = g.mask(u);
                    let s2 = ((nv & !nu & !(1 << u)).count_ones() as usize).min(dp - d);
                    let s3 = ((nu & nv).count_ones() as usize).min(dp);
                    if rup < s1 + s2 + s3 {
                        return Ok(Outcome::Violation);
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    })
}

/// Rank contributions sum to the rank, exactly.
pub fn verify_rc_sum(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    let report = VerificationReport::new("rc-sum", seed).param("n", n).param("d", d);
    run_over(report, &all_graphs(n)?, |g| {
        let o = oracle(g, d, seed)?;
        let mut total = ExactRational::zero();
        for v in 0..n {
            total = total + rc_exact(&o, v)?;
        }
        Ok(verdict(total == ExactRational::integer(o.rank() as i64)))
    })
}

/// `rc* <= rc` at every vertex, and the three lower bounds on `rc*` hold
/// wherever their hypotheses do.
pub fn verify_rc_bounds(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    let report = VerificationReport::new("rc-bounds", seed).param("n", n).param("d", d);
    run_over(report, &all_graphs(n)?, |g| {
        let o = oracle(g, d, seed)?;
        for v in 0..n {
            if rc_star_exact(&o, v)? > rc_exact(&o, v)? {
                return Ok(Outcome::Violation);
            }
            for check in [check_rc_tbound(&o, v)?, check_rc_kfree(&o, v)?, check_rc_geq_d(&o, v)?] {
                if check.status == Status::Fail {
                    return Ok(Outcome::Violation);
                }
            }
        }
        Ok(Outcome::Pass)
    })
}

/// Coning moves rigidity, independence, degrees of freedom (for `n > d`),
/// linkage and `rup` (for `n >= d`) from dimension `d` to `d + 1`.
pub fn verify_coning(n: usize, d: usize, seed: u64) -> Result<VerificationReport> {
    positive(d)?;
    let report = VerificationReport::new("coning", seed).param("n", n).param("d", d);
    run_over(report, &all_graphs(n)?, |g| {
        let base = oracle(g, d, seed)?;
        let coned = oracle(&g.cone(), d + 1, seed)?;
        let mut ok = base.is_rigid() == coned.is_rigid() && base.is_independent() == coned.is_independent();
        if n > d {
            ok &= base.dof() == coned.dof();
        }
        if n >= d {
            ok &= coned.rup() == base.rup() + 1;
        }
        for (u, v) in g.non_edges() {
            ok &= base.is_linked(u, v)? == coned.is_linked(u, v)?;
        }
        Ok(verdict(ok))
    })
}

/// A random rigid graph on `n` vertices in dimension `d`.
fn random_rigid(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    for _ in 0..200 {
        let g = gnp_graph(n, 0.7, rng.random())?;
        if oracle(&g, d, rng.random())?.is_rigid() {
            return Ok(g);
        }
    }
    Ok(Graph::complete(n))
}

fn sample(rng: &mut ChaCha8Rng, from: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = from.choose_multiple(rng, k).copied().collect();
    out.sort_unstable();
    out
}

/// Splits `N(z)` into two covering sets sharing exactly `common` vertices.
fn random_split(rng: &mut ChaCha8Rng, nbrs: &[usize], common: usize) -> (Vec<usize>, Vec<usize>) {
    let mut shuffled = nbrs.to_vec();
    shuffled.shuffle(rng);
    let (shared, rest) = shuffled.split_at(common);
    let (mut a, mut b) = (shared.to_vec(), shared.to_vec());
    for &x in rest {
        if rng.random_bool(0.5) {
            a.push(x);
        } else {
            b.push(x);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    (a, b)
}

/// Applies 0-extensions, 1-extensions, vertex splits and spider splits (in
/// rotation) to random rigid graphs and checks that the results are rigid.
pub fn verify_preservation(instances: usize, seed: u64) -> Result<VerificationReport> {
    let report = VerificationReport::new("preservation", seed).param("instances", instances);
    let mut outputs = Vec::with_capacity(instances);
    for i in 0..instances {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, i as u64));
        let d = rng.random_range(1..=3);
        let n = rng.random_range(d + 2..=9);
        let g = random_rigid(n, d, &mut rng)?;
        let vertices: Vec<usize> = (0..n).collect();
        let out = match i % 4 {
            0 => zero_extension(&g, d, &sample(&mut rng, &vertices, d))?,
            1 => {
                let (u, w) = *g.edges().choose(&mut rng).expect("rigid graphs on d + 2 vertices have edges");
                let others: Vec<usize> = vertices.iter().copied().filter(|&x| x != u && x != w).collect();
                let mut set = sample(&mut rng, &others, d - 1);
                set.extend([u, w]);
                one_extension(&g, d, (u, w), &set)?
            }
            op => {
                // Rigid graphs on more than d vertices have minimum degree at least d.
                let z = rng.random_range(0..n);
                let nbrs: Vec<usize> = g.neighbors(z).collect();
                if op == 2 {
                    let (a, b) = random_split(&mut rng, &nbrs, d - 1);
                    vertex_split(&g, d, z, &a, &b)?
                } else {
                    let (a, b) = random_split(&mut rng, &nbrs, d);
                    spider_split(&g, d, z, &a, &b)?
                }
            }
        };
        outputs.push((out, d));
    }
    let (graphs, dims): (Vec<Graph>, Vec<usize>) = outputs.into_iter().unzip();
    run_indexed(report, &graphs, |i, g| Ok(verdict(oracle(g, dims[i], seed)?.is_rigid())))
}

/// Attaches random cycles to random 3-rigid graphs and checks that the
/// results are 3-rigid.
pub fn verify_cycle_construction(instances: usize, seed: u64) -> Result<VerificationReport> {
    let report = VerificationReport::new("cycle-construction", seed).param("instances", instances);
    let mut graphs = Vec::with_capacity(instances);
    for i in 0..instances {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, i as u64));
        let n = rng.random_range(4..=8);
        let h = random_rigid(n, 3, &mut rng)?;
        let k = rng.random_range(3..=6);
        let pairs = loop {
            let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k);
            while pairs.len() < k {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                if a != b && !pairs.contains(&(a.min(b), a.max(b))) {
                    pairs.push((a.min(b), a.max(b)));
                }
            }
            let mut support: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            support.sort_unstable();
            support.dedup();
            if support.len() >= 3 {
                break pairs;
            }
        };
        graphs.push(cycle_attach(&h, &pairs)?);
    }
    run_over(report, &graphs, |g| Ok(verdict(oracle(g, 3, seed)?.is_rigid())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_checks_at_small_orders() {
        assert!(verify_simplicial_vertex(6, 2, 1).unwrap().pass);
        assert!(verify_minlarge(7, 3, 1).unwrap().pass);
        let r = verify_minlarge3(5, 1).unwrap();
        assert_eq!(r.exceptions, vec!["W5"]);
        let r = verify_minlarge3(6, 1).unwrap();
        assert_eq!(r.exceptions, vec!["B6"]);
        let r = verify_claim2(7, 1).unwrap();
        assert_eq!(r.exceptions, vec!["C7_1", "C7_2"]);
        assert!(verify_claim2(6, 1).unwrap().exceptions.is_empty());
        let r = verify_small_circuits(5, 1).unwrap();
        assert!(r.pass && r.counts.examined >= 1);
    }

    #[test]
    fn rank_identities_at_five_vertices() {
        for d in 1..=3 {
            assert!(verify_rc_sum(5, d, 3).unwrap().pass);
            assert!(verify_rc_bounds(5, d, 3).unwrap().pass);
            assert!(verify_coning(5, d, 3).unwrap().pass);
            assert!(verify_easybound(5, d, 3).unwrap().pass);
            assert!(verify_s1s2s3(5, d, 3).unwrap().pass);
        }
    }

    #[test]
    fn constructions_preserve_rigidity() {
        let r = verify_preservation(24, 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.counts.examined, 24);
        assert!(verify_cycle_construction(8, 5).unwrap().pass);
    }
}
