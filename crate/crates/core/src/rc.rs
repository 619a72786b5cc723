//! Rank contributions.
//!
//! For a uniformly random vertex ordering `π`, let `T` be the set of
//! vertices before `v`. The rank contribution of `v` is the expected value
//! of `r(G[T + v]) - r(G[T])`; summed over all vertices it telescopes to
//! `r(G)`. The contracted variant only counts the edges from `v` into `T`,
//! measured in the matroid obtained by contracting `E(G - v)`.
//!
//! `|T|` is uniform on `0..n` and, given its size, `T` is a uniform subset,
//! so both expectations are exact finite averages over subsets.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{EchelonBasis, FieldElement};
use crate::graph::Graph;
use crate::matroid::RigidityOracle;

/// Default largest vertex count for [`rc_exact`].
pub const RC_EXACT_MAX_N: usize = 12;
/// Default largest degree for [`rc_star_exact`].
pub const RC_STAR_MAX_DEGREE: usize = 20;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(v: i64) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);
forward_op!(Div, div);

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_i sums[i] / C(m, i)`, all divided by `m + 1`.
fn size_weighted_average(sums: &[u64], m: usize) -> ExactRational {
    let mut total = BigRational::zero();
    for (i, &s) in sums.iter().enumerate() {
        total += BigRational::new(BigInt::from(s), binomial(m, i));
    }
    ExactRational(total / BigRational::from_integer(BigInt::from(m + 1)))
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Exact `rc_d(G, v)` by enumerating the `2^(n-1)` possible predecessor sets.
pub fn rc_exact(o: &RigidityOracle, v: usize) -> Result<ExactRational> {
    rc_exact_bounded(o, v, RC_EXACT_MAX_N)
}

/// [`rc_exact`] with a caller-chosen vertex bound (at most 31).
pub fn rc_exact_bounded(o: &RigidityOracle, v: usize, max_n: usize) -> Result<ExactRational> {
    let n = o.graph().n();
    check_vertex(o.graph(), v)?;
    if n > max_n.min(31) {
        return Err(Error::TooLarge {
            what: "vertex count for exact rank contribution (use the Monte Carlo estimator)",
            value: n,
            bound: max_n.min(31),
        });
    }
    let others = ((1u32 << n) - 1) & !(1 << v);
    let mut sums = vec![0u64; n];
    let mut s = others;
    loop {
        let with = o.rank_of_induced(&mask_vertices(s | 1 << v))?;
        let without = o.rank_of_induced(&mask_vertices(s))?;
        sums[s.count_ones() as usize] += (with - without) as u64;
        if s == 0 {
            break;
        }
        s = (s - 1) & others;
    }
    Ok(size_weighted_average(&sums, n - 1))
}

/// Coordinates of the star rows of `v` in the contracted matroid: each row
/// reduced modulo the span of `E(G - v)` and restricted to a set of columns
/// on which the reduced rows keep their rank. At most `d` coordinates.
fn contracted_star(o: &RigidityOracle, v: usize) -> (Vec<Vec<FieldElement>>, usize) {
    let base = o.basis_of(&o.edges_avoiding(v));
    let residuals: Vec<Vec<FieldElement>> = o
        .star(v)
        .iter()
        .map(|&(a, b)| base.residual(&o.row(a, b)).expect("same width"))
        .collect();
    let mut span = EchelonBasis::new(o.width());
    for r in &residuals {
        span.insert(r).expect("same width");
    }
    let cols = span.pivot_columns();
    let short = residuals
        .iter()
        .map(|r| cols.iter().map(|&c| r[c]).collect())
        .collect();
    (short, span.rank())
}

/// Adds `r(F)` to `sums[|F|]` for every `F` that extends `chosen` by a
/// subset of `rows[from..]`.
fn subset_rank_sums(
    rows: &[Vec<FieldElement>],
    from: usize,
    basis: &EchelonBasis,
    chosen: usize,
    full: usize,
    sums: &mut [u64],
) {
    let rest = rows.len() - from;
    if basis.rank() == full {
        // Every extension has the maximum rank.
        let mut c = 1u64;
        for j in 0..=rest {
            sums[chosen + j] += full as u64 * c;
            c = c * (rest - j) as u64 / (j + 1) as u64;
        }
        return;
    }
    if from == rows.len() {
        sums[chosen] += basis.rank() as u64;
        return;
    }
    subset_rank_sums(rows, from + 1, basis, chosen, full, sums);
    let mut grown = basis.clone();
    grown.insert(&rows[from]).expect("same width");
    subset_rank_sums(rows, from + 1, &grown, chosen + 1, full, sums);
}

/// Exact `rc*_d(G, v)`: the average over sizes `i = 0..=k` of the mean
/// contracted rank of an `i`-subset of the edges at `v`.
pub fn rc_star_exact(o: &RigidityOracle, v: usize) -> Result<ExactRational> {
    rc_star_exact_bounded(o, v, RC_STAR_MAX_DEGREE)
}

pub fn rc_star_exact_bounded(o: &RigidityOracle, v: usize, max_degree: usize) -> Result<ExactRational> {
    check_vertex(o.graph(), v)?;
    let k = o.graph().degree(v);
    if k > max_degree.min(40) {
        return Err(Error::TooLarge {
            what: "degree for exact contracted rank contribution",
            value: k,
            bound: max_degree.min(40),
        });
    }
    let (rows, full) = contracted_star(o, v);
    let mut sums = vec![0u64; k + 1];
    let width = rows.first().map_or(0, Vec::len);
    subset_rank_sums(&rows, 0, &EchelonBasis::new(width), 0, full, &mut sums);
    Ok(size_weighted_average(&sums, k))
}

/// Sample mean of a Monte Carlo estimator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: ExactRational,
    /// Standard error of the mean; `None` with fewer than two samples.
    pub std_error: Option<f64>,
    pub samples: usize,
    pub seed: u64,
}

fn summarize(draws: &[usize], seed: u64) -> Estimate {
    let m = draws.len();
    let total: usize = draws.iter().sum();
    let mean = ExactRational::new(total as i64, m as i64);
    let std_error = (m >= 2).then(|| {
        let mu = total as f64 / m as f64;
        let var = draws.iter().map(|&x| (x as f64 - mu).powi(2)).sum::<f64>() / (m - 1) as f64;
        (var / m as f64).sqrt()
    });
    Estimate { mean, std_error, samples: m, seed }
}

fn predecessors(n: usize, v: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let pos = order.iter().position(|&x| x == v).expect("v is a vertex");
    order.truncate(pos);
    order.sort_unstable();
    order
}

/// Monte Carlo estimate of `rc_d(G, v)` from `samples` random orderings.
pub fn rc_monte_carlo(o: &RigidityOracle, v: usize, samples: usize, seed: u64) -> Result<Estimate> {
    check_vertex(o.graph(), v)?;
    if samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut t = predecessors(o.graph().n(), v, &mut rng);
        let without = o.rank_of_induced(&t)?;
        t.push(v);
        draws.push(o.rank_of_induced(&t)? - without);
    }
    Ok(summarize(&draws, seed))
}

/// Monte Carlo estimate of `rc*_d(G, v)` from `samples` random orderings.
pub fn rc_star_monte_carlo(o: &RigidityOracle, v: usize, samples: usize, seed: u64) -> Result<Estimate> {
    check_vertex(o.graph(), v)?;
    if samples == 0 {
        return Err(Error::Precondition("at least one sample is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(samples);
    for _ in 0..samples {
        let t = predecessors(o.graph().n(), v, &mut rng);
        let f: Vec<(usize, usize)> = t.into_iter().filter(|&u| o.graph().has_edge(u, v)).map(|u| (v, u)).collect();
        draws.push(o.contracted_rank(v, &f)?);
    }
    Ok(summarize(&draws, seed))
}

/// Outcome of checking a lower bound on `rc*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub lemma: &'static str,
    pub vertex: usize,
    pub degree: usize,
    pub status: Status,
    /// Why the hypothesis fails, when it does.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<ExactRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rc_star: Option<ExactRational>,
}

impl BoundCheck {
    fn not_applicable(lemma: &'static str, o: &RigidityOracle, v: usize, reason: String) -> Self {
        BoundCheck {
            lemma,
            vertex: v,
            degree: o.graph().degree(v),
            status: Status::NotApplicable,
            reason: Some(reason),
            bound: None,
            rc_star: None,
        }
    }

    fn compare(lemma: &'static str, o: &RigidityOracle, v: usize, bound: ExactRational) -> Result<Self> {
        let value = rc_star_exact(o, v)?;
        Ok(BoundCheck {
            lemma,
            vertex: v,
            degree: o.graph().degree(v),
            status: if value >= bound { Status::Pass } else { Status::Fail },
            reason: None,
            bound: Some(bound),
            rc_star: Some(value),
        })
    }
}

fn int(v: usize) -> ExactRational {
    ExactRational::integer(v as i64)
}

/// `r(G) >= r(G - v) + d + t` with `t >= 0` implies
/// `rc* >= d + (t(k - d + 1) - d(d + 1)) / (2(k + 1))`.
pub fn check_rc_tbound(o: &RigidityOracle, v: usize) -> Result<BoundCheck> {
    const NAME: &str = "rc-tbound";
    check_vertex(o.graph(), v)?;
    let d = o.dim();
    let k = o.graph().degree(v);
    let jump = o.rank() - o.rank_of_pairs(&o.edges_avoiding(v))?;
    if jump < d {
        return Ok(BoundCheck::not_applicable(NAME, o, v, format!("r(G) - r(G-v) = {jump} < d")));
    }
    let t = jump - d;
    let numer = ExactRational::integer(t as i64 * (k as i64 - d as i64 + 1) - (d * (d + 1)) as i64);
    let bound = int(d) + numer / int(2 * (k + 1));
    BoundCheck::compare(NAME, o, v, bound)
}

/// Closed, `K_{d+2}`-free, `deg(v) = k >= d + 1` implies
/// `rc* >= d + 1 - C(d + 2, 2) / (k + 1)`.
pub fn check_rc_kfree(o: &RigidityOracle, v: usize) -> Result<BoundCheck> {
    const NAME: &str = "rc-kfree";
    check_vertex(o.graph(), v)?;
    let d = o.dim();
    let k = o.graph().degree(v);
    if k < d + 1 {
        return Ok(BoundCheck::not_applicable(NAME, o, v, format!("deg(v) = {k} < d + 1")));
    }
    if o.graph().has_clique(d + 2) {
        return Ok(BoundCheck::not_applicable(NAME, o, v, format!("contains K_{}", d + 2)));
    }
    if !o.is_closed() {
        return Ok(BoundCheck::not_applicable(NAME, o, v, "not closed".into()));
    }
    let bound = int(d + 1) - int((d + 2) * (d + 1) / 2) / int(k + 1);
    BoundCheck::compare(NAME, o, v, bound)
}

/// `deg(v) = k >= d`, `G + K(N(v))` rigid and `G` not rigid implies
/// `rc* >= d + 1/2 - C(d + 1, 2) / k`.
pub fn check_rc_geq_d(o: &RigidityOracle, v: usize) -> Result<BoundCheck> {
    const NAME: &str = "rc-geq-d";
    check_vertex(o.graph(), v)?;
    let d = o.dim();
    let k = o.graph().degree(v);
    if k < d {
        return Ok(BoundCheck::not_applicable(NAME, o, v, format!("deg(v) = {k} < d")));
    }
    if o.is_rigid() {
        return Ok(BoundCheck::not_applicable(NAME, o, v, "G is rigid".into()));
    }
    let nbrs: Vec<usize> = o.graph().neighbors(v).collect();
    let filled = o.graph().complete_on(&nbrs)?;
    if !RigidityOracle::new(filled, d, o.seed())?.is_rigid() {
        return Ok(BoundCheck::not_applicable(NAME, o, v, "G + K(N(v)) is not rigid".into()));
    }
    let bound = int(d) + ExactRational::new(1, 2) - int(d * (d + 1) / 2) / int(k);
    BoundCheck::compare(NAME, o, v, bound)
}
