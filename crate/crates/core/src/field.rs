//! Rigidity-matrix rank over the prime field `GF(2^61 - 1)`.
//!
//! Generic coordinates are replaced by uniformly random field elements. Every
//! maximal minor of the rigidity matrix is a polynomial of degree at most
//! `d * n` in the coordinates, so a single random evaluation attains the
//! generic rank except with probability at most `d * n / p` (Schwartz–Zippel).
//! An evaluation can only lose rank, never gain it.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// An element of `GF(2^61 - 1)`, always fully reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: Self = FieldElement(0);
    pub const ONE: Self = FieldElement(1);

    pub fn new(v: u64) -> Self {
        FieldElement(v % MODULUS)
    }

    pub fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(MODULUS as i64) as u64;
        FieldElement(r)
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(MODULUS - 2))
    }

    #[inline]
    fn reduce(x: u128) -> u64 {
        let lo = (x as u64) & MODULUS;
        let hi = (x >> 61) as u64;
        let s = lo + hi;
        if s >= MODULUS {
            s - MODULUS
        } else {
            s
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for FieldElement {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        FieldElement(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Sub for FieldElement {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        FieldElement(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + MODULUS - rhs.0
        })
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement::ZERO - self
    }
}

impl Mul for FieldElement {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        FieldElement(Self::reduce(self.0 as u128 * rhs.0 as u128))
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

/// `n x d` table of field coordinates, one row per vertex.
///
/// Entries are drawn row by row from a ChaCha stream, so the table for
/// `n + 1` vertices extends the table for `n` vertices with the same seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateTable {
    dim: usize,
    entries: Vec<FieldElement>,
}

impl CoordinateTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> usize {
        self.entries.len().checked_div(self.dim).unwrap_or(0)
    }

    #[inline]
    pub fn point(&self, v: usize) -> &[FieldElement] {
        &self.entries[v * self.dim..(v + 1) * self.dim]
    }
}

/// Uniform random coordinates for `n` vertices in dimension `d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn sample_coordinates(n: usize, d: usize, seed: u64) -> CoordinateTable {
    assert!(d >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n * d)
        .map(|_| FieldElement(rng.random_range(0..MODULUS)))
        .collect();
    CoordinateTable { dim: d, entries }
}

/// Rigidity-matrix row of the pair `uv` in a matrix of `width` columns.
///
/// Block `u` holds `p(u) - p(v)`, block `v` holds `p(v) - p(u)`, with the
/// orientation fixed by the smaller endpoint.
pub fn rigidity_row(coords: &CoordinateTable, u: usize, v: usize, width: usize) -> Vec<FieldElement> {
    let mut row = vec![FieldElement::ZERO; width];
    write_rigidity_row(coords, u, v, &mut row);
    row
}

/// Overwrites `row` with the rigidity-matrix row of `uv`.
pub fn fill_rigidity_row(coords: &CoordinateTable, u: usize, v: usize, row: &mut [FieldElement]) {
    row.fill(FieldElement::ZERO);
    write_rigidity_row(coords, u, v, row);
}

fn write_rigidity_row(coords: &CoordinateTable, u: usize, v: usize, row: &mut [FieldElement]) {
    let (a, b) = (u.min(v), u.max(v));
    let d = coords.dim;
    let (pa, pb) = (coords.point(a), coords.point(b));
    for k in 0..d {
        let diff = pa[k] - pb[k];
        row[a * d + k] = diff;
        row[b * d + k] = -diff;
    }
}

/// The rigidity matrix of a graph at a fixed coordinate table; rows follow
/// [`Graph::edges`] order.
#[derive(Clone, Debug)]
pub struct RigidityMatrix {
    pub edges: Vec<(usize, usize)>,
    pub width: usize,
    pub rows: Vec<Vec<FieldElement>>,
}

impl RigidityMatrix {
    pub fn new(g: &Graph, coords: &CoordinateTable) -> Self {
        assert!(coords.vertices() >= g.n(), "coordinate table too small");
        let width = g.n() * coords.dim;
        let edges = g.edges();
        let rows = edges.iter().map(|&(u, v)| rigidity_row(coords, u, v, width)).collect();
        RigidityMatrix { edges, width, rows }
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.width);
        for row in &self.rows {
            basis.insert(row).expect("rows share the matrix width");
        }
        basis.rank()
    }
}

/// Row-echelon basis grown one row at a time.
///
/// Each stored row is scaled so its leading entry is one and has zeros in the
/// leading columns of all rows stored before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    width: usize,
    pivot_row: Vec<u32>,
    rows: Vec<Vec<FieldElement>>,
    scratch: Vec<FieldElement>,
}

const NO_PIVOT: u32 = u32::MAX;

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            pivot_row: vec![NO_PIVOT; width],
            rows: Vec::new(),
            scratch: Vec::with_capacity(width),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the stored rows, in insertion order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols = vec![0; self.rows.len()];
        for (c, &p) in self.pivot_row.iter().enumerate() {
            if p != NO_PIVOT {
                cols[p as usize] = c;
            }
        }
        cols
    }

    /// Reduces `row` in place against the stored rows; returns the column of
    /// its leading nonzero entry, or `None` if it reduced to zero.
    fn reduce(&self, row: &mut [FieldElement]) -> Option<usize> {
        let mut lead = None;
        for c in 0..self.width {
            let f = row[c];
            if f.is_zero() {
                continue;
            }
            let p = self.pivot_row[c];
            if p == NO_PIVOT {
                if lead.is_none() {
                    lead = Some(c);
                }
                continue;
            }
            let prow = &self.rows[p as usize];
            for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                *x -= f * y;
            }
        }
        lead
    }

    fn check_width(&self, row: &[FieldElement]) -> Result<()> {
        if row.len() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: row.len(),
            });
        }
        Ok(())
    }

    /// Inserts `row` if it is independent of the stored rows.
    ///
    /// Returns `Ok(true)` and grows the rank by one exactly when the row is
    /// independent; the basis is left untouched otherwise.
    pub fn insert(&mut self, row: &[FieldElement]) -> Result<bool> {
        self.check_width(row)?;
        let mut work = std::mem::take(&mut self.scratch);
        work.clear();
        work.extend_from_slice(row);
        match self.reduce(&mut work) {
            None => {
                self.scratch = work;
                Ok(false)
            }
            Some(c) => {
                let inv = work[c].inverse().expect("leading entry is nonzero");
                for x in &mut work[c..] {
                    *x = *x * inv;
                }
                self.pivot_row[c] = self.rows.len() as u32;
                self.rows.push(work);
                self.scratch = Vec::with_capacity(self.width);
                Ok(true)
            }
        }
    }

    /// Whether `row` lies in the span of the stored rows.
    pub fn spans(&self, row: &[FieldElement]) -> Result<bool> {
        self.check_width(row)?;
        let mut work = row.to_vec();
        Ok(self.reduce(&mut work).is_none())
    }

    /// `row` reduced against the stored rows. The result is zero in every
    /// leading column of the basis and represents the same coset modulo the
    /// span.
    pub fn residual(&self, row: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.check_width(row)?;
        let mut work = row.to_vec();
        self.reduce(&mut work);
        Ok(work)
    }
}

/// `d*n - C(d+1, 2)` for `n >= d + 1`, else `C(n, 2)`: the rank of a
/// `d`-rigid graph on `n` vertices.
pub fn rigid_rank(n: usize, d: usize) -> usize {
    if n <= d + 1 {
        n * n.saturating_sub(1) / 2
    } else {
        d * n - d * (d + 1) / 2
    }
}

/// Seed of trial `t`; trial 0 uses `seed` itself.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    seed.wrapping_add(t.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Generic rank of the `d`-dimensional rigidity matrix of `g`: the maximum
/// of `trials` independent random evaluations.
pub fn generic_rank(g: &Graph, d: usize, trials: usize, seed: u64) -> usize {
    assert!(d >= 1, "dimension must be positive");
    let ceiling = g.edge_count().min(rigid_rank(g.n(), d));
    let mut best = 0;
    for t in 0..trials.max(1) as u64 {
        let coords = sample_coordinates(g.n(), d, trial_seed(seed, t));
        best = best.max(RigidityMatrix::new(g, &coords).rank());
        if best == ceiling {
            break;
        }
    }
    best
}
