//! Nests of non-intersecting lattice paths and watermelons.
//!
//! A C-nest of shape `λ` is a semistandard tableau with entries `<= N`: path
//! `i` encodes row `i`, and a north step on vertical line `x_j` records one
//! occurrence of the letter `N - j + 1`. A B-nest (the conjugated nest) of
//! shape `λ` is encoded the same way by a tableau of the complementary shape
//! `(M - λ_N, ..., M - λ_1)`, whose row `N + 1 - i` gives path `i`.
//! A watermelon is a C-nest and a B-nest glued along their common interface
//! `μ_i = λ_i + N - i`.
//!
//! Deviation `k` forbids steps on the last `k` vertical lines of the C-nest,
//! which confines `λ` to at most `L = N - k` nonzero parts.
//!
//! # Geometry
//!
//! For drawing and for the horizontal reading, the watermelon is laid out
//! with all paths running east/north. The C-nest is mirrored so that line
//! `x_j` sits at abscissa `X = N + 1 - j`, and the B-nest line `x_j` sits at
//! `X = N + j`. Path `i` (counted from the top) starts at
//! `D_i = (i + k, N - i)`, ends at `B_i = (N + i, N + M - i)` and makes
//! exactly `L` east steps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_ring::{LaurentPoly, Matrix, PolyMatrix};
use crate::partitions::{enumerate_in_box, Partition, PartitionError};
use crate::qcombinat::{binomial, h_complete, qbinomial};
use crate::schur::{bialternant, enumerate_ssyt, principal_product, GeometricPoint, SchurError, Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathsError {
    #[error("deviation k = {k} exceeds the number of paths N = {n}")]
    DeviationTooLarge { k: usize, n: usize },
    #[error("invalid nest: {0}")]
    InvalidNest(String),
    #[error("stored volume {stored} does not match computed volume {computed}")]
    VolumeMismatch { stored: i64, computed: i64 },
    #[error("horizontal-reading offset is not constant: saw {first} and {other}")]
    NonConstantOffset { first: i64, other: i64 },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Schur(#[from] SchurError),
}

fn invalid(msg: impl Into<String>) -> PathsError {
    PathsError::InvalidNest(msg.into())
}

/// Per-path, per-line north-step counts: `steps[i][j]` is the number of
/// north steps of path `i` (0-based from the top) on line `x_{j+1}`.
type StepMatrix = Vec<Vec<usize>>;

fn steps_from_rows(rows: &[Vec<usize>], n: usize, paths: impl Fn(usize) -> usize) -> StepMatrix {
    let mut steps = vec![vec![0; n]; n];
    for (r, row) in rows.iter().enumerate() {
        for &letter in row {
            steps[paths(r)][n - letter] += 1;
        }
    }
    steps
}

fn row_from_steps(steps: &[usize], n: usize) -> Vec<usize> {
    let mut row = Vec::new();
    for j in (0..n).rev() {
        row.extend(std::iter::repeat_n(n - j, steps[j]));
    }
    row
}

fn column_sums(steps: &StepMatrix, n: usize) -> Vec<usize> {
    (0..n).map(|j| steps.iter().map(|row| row[j]).sum()).collect()
}

/// A nest of `N` paths from `C_i = (N-i+1, N-i)` to `(1, λ_i + N - i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CNest {
    n: usize,
    steps: StepMatrix,
}

impl CNest {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &StepMatrix {
        &self.steps
    }

    /// `l_j`, the north steps on line `x_j` summed over all paths.
    pub fn line_counts(&self) -> Vec<usize> {
        column_sums(&self.steps, self.n)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.steps.iter().map(|r| r.iter().sum()).collect()).expect("nest rows decrease")
    }

    /// `|ζ|_C = Σ (j-1) l_j`.
    pub fn volume(&self) -> i64 {
        self.line_counts().iter().enumerate().map(|(j, &l)| (j * l) as i64).sum()
    }

    /// `|ξ|_C = |λ| + |ζ|_C = Σ j l_j`.
    pub fn weighted_volume(&self) -> i64 {
        self.line_counts().iter().enumerate().map(|(j, &l)| ((j + 1) * l) as i64).sum()
    }
}

/// C-nest of a semistandard tableau with entries `<= n`.
pub fn nest_from_tableau(t: &Tableau, n: usize) -> Result<CNest, PathsError> {
    if t.rows().len() > n || t.max_entry() > n {
        return Err(invalid(format!("tableau {t:?} does not fit {n} paths")));
    }
    Ok(CNest { n, steps: steps_from_rows(t.rows(), n, |r| r) })
}

pub fn tableau_from_nest(nest: &CNest) -> Result<Tableau, PathsError> {
    let rows = nest.steps.iter().map(|s| row_from_steps(s, nest.n)).collect();
    Ok(Tableau::new(rows)?)
}

/// The conjugated nest: `N` paths from `(1, λ_i + N - i)` to
/// `B_i = (i, N + M - i)`, path `i` making `M - λ_i` north steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BNest {
    n: usize,
    m: usize,
    steps: StepMatrix,
}

impl BNest {
    pub fn steps(&self) -> &StepMatrix {
        &self.steps
    }

    pub fn line_counts(&self) -> Vec<usize> {
        column_sums(&self.steps, self.n)
    }

    /// `|ζ|_B = Σ (j-1)(M - l_j)`.
    pub fn volume(&self) -> i64 {
        self.line_counts().iter().enumerate().map(|(j, &l)| j as i64 * (self.m as i64 - l as i64)).sum()
    }
}

/// B-nest of a tableau of the complementary shape, entries `<= n`.
pub fn bnest_from_tableau(t: &Tableau, n: usize, m: usize) -> Result<BNest, PathsError> {
    if t.rows().len() > n || t.max_entry() > n || t.shape().part(0) > m {
        return Err(invalid(format!("tableau {t:?} does not fit a {n}x{m} conjugated nest")));
    }
    Ok(BNest { n, m, steps: steps_from_rows(t.rows(), n, |r| n - 1 - r) })
}

pub fn tableau_from_bnest(nest: &BNest) -> Result<Tableau, PathsError> {
    let n = nest.n;
    let rows = (0..n).map(|r| row_from_steps(&nest.steps[n - 1 - r], n)).collect();
    Ok(Tableau::new(rows)?)
}

/// A watermelon with deviation `k`: `N` non-intersecting paths from `D_i`
/// to `B_i`, stored as its interface partition and the two nests.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Watermelon {
    n: usize,
    m: usize,
    k: usize,
    lambda: Partition,
    c: CNest,
    b: BNest,
}

impl Watermelon {
    /// Glues a C-tableau (shape `λ`, entries in `k+1..=N`) to a B-tableau
    /// (shape complementary to `λ` in the `N x M` box, entries `<= N`).
    pub fn from_tableaux(n: usize, m: usize, k: usize, c: &Tableau, b: &Tableau) -> Result<Self, PathsError> {
        if k > n {
            return Err(PathsError::DeviationTooLarge { k, n });
        }
        let lambda = c.shape().padded(n)?;
        if !lambda.fits_in_box(n - k, m) {
            return Err(invalid(format!("interface {lambda} does not fit {}x{m}", n - k)));
        }
        if c.min_entry() != 0 && c.min_entry() <= k {
            return Err(invalid(format!("C-nest uses a line blocked by deviation {k}")));
        }
        if b.shape().trimmed() != lambda.complement(n, m)?.trimmed() {
            return Err(invalid(format!("B-nest shape {} is not the complement of {lambda}", b.shape())));
        }
        Ok(Watermelon { n, m, k, c: nest_from_tableau(c, n)?, b: bnest_from_tableau(b, n, m)?, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `L = N - k`.
    pub fn l(&self) -> usize {
        self.n - self.k
    }

    /// Interface partition, padded to length `N`.
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn c_nest(&self) -> &CNest {
        &self.c
    }

    pub fn b_nest(&self) -> &BNest {
        &self.b
    }

    pub fn c_tableau(&self) -> Tableau {
        tableau_from_nest(&self.c).expect("stored nests are valid")
    }

    pub fn b_tableau(&self) -> Tableau {
        tableau_from_bnest(&self.b).expect("stored nests are valid")
    }

    /// `|w| = |ξ|_C + |ζ|_B`; the minimal watermelon has volume 0.
    pub fn volume(&self) -> i64 {
        self.c.weighted_volume() + self.b.volume()
    }

    /// Start points `D_i` (C-nest starts shifted east by `k`).
    pub fn start_points(&self) -> Vec<(i64, i64)> {
        let (n, k) = (self.n as i64, self.k as i64);
        (1..=n).map(|i| (i + k, n - i)).collect()
    }

    pub fn end_points(&self) -> Vec<(i64, i64)> {
        let (n, m) = (self.n as i64, self.m as i64);
        (1..=n).map(|i| (n + i, n + m - i)).collect()
    }

    /// Lattice points visited by each path (top path first), in the
    /// east/north layout described in the module docs.
    pub fn lattice_paths(&self) -> Vec<Vec<(i64, i64)>> {
        let n = self.n as i64;
        let starts = self.start_points();
        (0..self.n)
            .map(|i| {
                let i1 = i as i64 + 1;
                let (mut x, mut y) = starts[i];
                let mut pts = vec![(x, y)];
                let end_x = n + i1;
                while x <= end_x {
                    let north =
                        if x <= n { self.c.steps[i][(n - x) as usize] } else { self.b.steps[i][(x - n - 1) as usize] };
                    for _ in 0..north {
                        y += 1;
                        pts.push((x, y));
                    }
                    if x == end_x {
                        break;
                    }
                    x += 1;
                    pts.push((x, y));
                }
                pts
            })
            .collect()
    }

    /// Heights of the east steps of each path (top path first). Each path
    /// makes exactly `L` east steps.
    pub fn horizontal_reading(&self) -> Vec<Vec<i64>> {
        self.lattice_paths()
            .iter()
            .map(|pts| pts.windows(2).filter(|w| w[1].0 == w[0].0 + 1).map(|w| w[0].1).collect())
            .collect()
    }

    /// The horizontal reading as a tableau of rectangular shape `L^N` with
    /// entries in `1..=N+M`; row `p` holds the east-step heights (plus one)
    /// of the `p`-th path counted from the bottom.
    pub fn horizontal_tableau(&self) -> Tableau {
        let reading = self.horizontal_reading();
        let rows = reading.iter().rev().map(|r| r.iter().map(|&h| (h + 1) as usize).collect()).collect();
        Tableau::with_shape(Partition::rectangle(self.n, self.l()), rows)
            .expect("non-intersecting paths read as a semistandard tableau")
    }

    /// `Σ_j (j-1) m_j` where `m_j` counts east steps on horizontal line `z_j`.
    pub fn horizontal_weight(&self) -> i64 {
        self.horizontal_reading().iter().flatten().sum()
    }

    /// Inverse of [`Watermelon::horizontal_tableau`].
    pub fn from_horizontal_tableau(n: usize, m: usize, k: usize, t: &Tableau) -> Result<Self, PathsError> {
        if k > n {
            return Err(PathsError::DeviationTooLarge { k, n });
        }
        let l = n - k;
        if t.shape().trimmed() != Partition::rectangle(n, l).trimmed() || t.max_entry() > n + m {
            return Err(invalid(format!("{t:?} is not a {n}x{l} tableau with entries <= {}", n + m)));
        }
        let (ni, ki, mi) = (n as i64, k as i64, m as i64);
        let mut c_steps = vec![vec![0usize; n]; n];
        let mut b_steps = vec![vec![0usize; n]; n];
        for i in 0..n {
            let i1 = i as i64 + 1;
            let heights: Vec<i64> =
                if l == 0 { Vec::new() } else { t.rows()[n - 1 - i].iter().map(|&v| v as i64 - 1).collect() };
            let mut prev = ni - i1;
            for c in 0..=l {
                let next = heights.get(c).copied().unwrap_or(ni + mi - i1);
                if next < prev {
                    return Err(invalid(format!("path {i1} would step south")));
                }
                let x = i1 + ki + c as i64;
                let north = (next - prev) as usize;
                if x <= ni {
                    c_steps[i][(ni - x) as usize] = north;
                } else {
                    b_steps[i][(x - ni - 1) as usize] = north;
                }
                prev = next;
            }
        }
        let c_rows = c_steps.iter().map(|s| row_from_steps(s, n)).collect();
        let b_rows = (0..n).map(|r| row_from_steps(&b_steps[n - 1 - r], n)).collect();
        let c = Tableau::new(c_rows)?;
        let b = Tableau::new(b_rows)?;
        Self::from_tableaux(n, m, k, &c, &b)
    }
}

#[derive(Serialize, Deserialize)]
struct WatermelonRecord {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    k: usize,
    lambda: Partition,
    c_steps: StepMatrix,
    b_steps: StepMatrix,
    volume: i64,
}

/// JSON: `{N, M, k, lambda, c_steps, b_steps, volume}` where `c_steps[i][j]`
/// and `b_steps[i][j]` are the north steps of path `i+1` on line `x_{j+1}`.
impl Serialize for Watermelon {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WatermelonRecord {
            n: self.n,
            m: self.m,
            k: self.k,
            lambda: self.lambda.clone(),
            c_steps: self.c.steps.clone(),
            b_steps: self.b.steps.clone(),
            volume: self.volume(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Watermelon {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = WatermelonRecord::deserialize(deserializer)?;
        Watermelon::try_from(rec).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<WatermelonRecord> for Watermelon {
    type Error = PathsError;

    fn try_from(rec: WatermelonRecord) -> Result<Self, PathsError> {
        let n = rec.n;
        let square = |s: &StepMatrix| s.len() == n && s.iter().all(|r| r.len() == n);
        if !square(&rec.c_steps) || !square(&rec.b_steps) {
            return Err(invalid(format!("step matrices must be {n}x{n}")));
        }
        let c = Tableau::new(rec.c_steps.iter().map(|s| row_from_steps(s, n)).collect())?;
        let b = Tableau::new((0..n).map(|r| row_from_steps(&rec.b_steps[n - 1 - r], n)).collect())?;
        let w = Watermelon::from_tableaux(n, rec.m, rec.k, &c, &b)?;
        if w.lambda.trimmed() != rec.lambda.trimmed() {
            return Err(invalid(format!("lambda {} does not match the C-nest shape {}", rec.lambda, w.lambda)));
        }
        if w.volume() != rec.volume {
            return Err(PathsError::VolumeMismatch { stored: rec.volume, computed: w.volume() });
        }
        Ok(w)
    }
}

fn check_deviation(n: usize, k: usize) -> Result<usize, PathsError> {
    n.checked_sub(k).ok_or(PathsError::DeviationTooLarge { k, n })
}

fn watermelons_over(n: usize, m: usize, k: usize, lambda: Partition) -> impl Iterator<Item = Watermelon> {
    let c_shape = lambda.clone();
    let b_shape = lambda.complement(n, m).expect("lambda comes from the box");
    enumerate_ssyt(&c_shape, k + 1, n).flat_map(move |c| {
        let b_shape = b_shape.clone();
        enumerate_ssyt(&b_shape, 1, n)
            .map(move |b| Watermelon::from_tableaux(n, m, k, &c, &b).expect("enumerated nests glue into a watermelon"))
    })
}

/// Every watermelon of `N` paths, height parameter `M` and deviation `k`,
/// exactly once: interface partitions in [`enumerate_in_box`] order, then
/// C-tableaux, then B-tableaux, each in row-major lexicographic order.
pub fn enumerate_watermelons(n: usize, m: usize, k: usize) -> Result<impl Iterator<Item = Watermelon>, PathsError> {
    let l = check_deviation(n, k)?;
    Ok(enumerate_in_box(l, m).flat_map(move |lam| {
        let lam = lam.padded(n).expect("l <= n");
        watermelons_over(n, m, k, lam)
    }))
}

fn poly_from_counts(counts: BTreeMap<i64, u64>) -> LaurentPoly {
    LaurentPoly::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

/// `W = Σ_w q^{|w|}` by direct enumeration, split across interface
/// partitions in parallel.
pub fn watermelon_genfunc(n: usize, m: usize, k: usize) -> Result<LaurentPoly, PathsError> {
    let l = check_deviation(n, k)?;
    let lambdas: Vec<Partition> = enumerate_in_box(l, m).map(|p| p.padded(n).expect("l <= n")).collect();
    let counts = lambdas
        .into_par_iter()
        .map(|lam| {
            let mut counts = BTreeMap::new();
            for w in watermelons_over(n, m, k, lam) {
                *counts.entry(w.volume()).or_insert(0u64) += 1;
            }
            counts
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_insert(0) += c;
            }
            a
        });
    Ok(poly_from_counts(counts))
}

/// `Σ_{λ ⊆ M^L} S_λ(q, ..., q^L) S_λ(1, ..., q^{N-1})` via bialternants.
pub fn schur_sum_genfunc(n: usize, m: usize, k: usize) -> Result<LaurentPoly, PathsError> {
    let l = check_deviation(n, k)?;
    let x = GeometricPoint::shifted(l);
    let y = GeometricPoint::principal(n);
    let mut acc = LaurentPoly::zero();
    for lam in enumerate_in_box(l, m) {
        acc = acc + bialternant(&lam, &x)? * bialternant(&lam, &y)?;
    }
    Ok(acc)
}

/// `Π_{i=1}^{N} Π_{j=N+1}^{N+M} (1 - q^{L-i+j}) / (1 - q^{j-i})`.
pub fn closed_genfunc(n: usize, l: usize, m: usize) -> LaurentPoly {
    let (n, l, m) = (n as i64, l as i64, m as i64);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=n {
        for j in n + 1..=n + m {
            num = &num * &LaurentPoly::one_minus_q_pow(l - i + j);
            den = &den * &LaurentPoly::one_minus_q_pow(j - i);
        }
    }
    num.exact_div(&den).expect("box generating function is a polynomial")
}

/// Number of watermelons with deviation: `Π_{i<=N} Π_{j<=M} (L+i+j-1)/(i+j-1)`.
pub fn count_deviation(n: usize, l: usize, m: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in 1..=m {
            num *= BigInt::from(l + i + j - 1);
            den *= BigInt::from(i + j - 1);
        }
    }
    assert!((&num % &den).is_zero(), "box count product is not integral");
    num / den
}

/// Which of the two determinant expressions for the box count / generating
/// function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetForm {
    /// `det([L+M+N-i choose M+N-j])` (q-weighted in the generating function).
    Binomial,
    /// `det(h_{L+j-i})`.
    Complete,
}

impl TryFrom<u8> for DetForm {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            1 => Ok(DetForm::Binomial),
            2 => Ok(DetForm::Complete),
            other => Err(format!("determinant form must be 1 or 2, got {other}")),
        }
    }
}

/// Box count as an integer binomial determinant.
pub fn count_deviation_det(n: usize, l: usize, m: usize, form: DetForm) -> BigInt {
    let (l, m, ni) = (l as i64, m as i64, n as i64);
    let mat = Matrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        match form {
            DetForm::Binomial => binomial(l + m + ni - i, m + ni - j),
            DetForm::Complete => binomial(l + m + ni + j - i - 1, l + j - i),
        }
    });
    mat.det()
}

/// `|w| = Σ (j-1) m_j - L N (N-1) / 2`: the constant separating the
/// horizontal reading from the volume. It equals `n(L^N)`.
pub fn volume_offset(n: usize, l: usize) -> i64 {
    (l * n * n.saturating_sub(1) / 2) as i64
}

/// The generating function as `q^{-offset}` times one of the two
/// determinants for `S_{L^N}(1, q, ..., q^{N+M-1})`.
pub fn genfunc_det_forms(n: usize, l: usize, m: usize, form: DetForm) -> LaurentPoly {
    let (li, mi, ni) = (l as i64, m as i64, n as i64);
    let mat = PolyMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        match form {
            DetForm::Binomial => qbinomial(li + mi + ni - i, mi + ni - j).shift((j - 1) * (li + j - i)),
            DetForm::Complete => h_complete(li + j - i, (n + m) as u32),
        }
    });
    mat.det().shift(-volume_offset(n, l))
}

/// `q^{-offset} S_{L^N}(1, q, ..., q^{N+M-1})`.
pub fn schur_specialization_genfunc(n: usize, l: usize, m: usize, offset: i64) -> Result<LaurentPoly, PathsError> {
    Ok(principal_product(&Partition::rectangle(n, l), n + m)?.shift(-offset))
}

/// Brute-forces `Σ_j (j-1) m_j - |w|` over every watermelon and returns it,
/// failing if it is not the same for all of them.
pub fn horizontal_offset(n: usize, m: usize, k: usize) -> Result<i64, PathsError> {
    let mut seen: Option<i64> = None;
    for w in enumerate_watermelons(n, m, k)? {
        let off = w.horizontal_weight() - w.volume();
        match seen {
            None => seen = Some(off),
            Some(first) if first != off => return Err(PathsError::NonConstantOffset { first, other: off }),
            _ => {}
        }
    }
    Ok(seen.expect("there is always at least one watermelon"))
}

/// `det(binom(λ_i + N - i, N - j))`.
pub fn gv_count(lambda: &Partition, n: usize) -> Result<BigInt, PathsError> {
    let lam = lambda.padded(n)?;
    let ni = n as i64;
    let mat = Matrix::from_fn(n, n, |i, j| binomial(lam.part(i) as i64 + ni - (i as i64 + 1), ni - (j as i64 + 1)));
    Ok(mat.det())
}

/// Number of C-nests of shape `λ` with `n` paths.
pub fn count_c_nests(lambda: &Partition, n: usize) -> Result<u64, PathsError> {
    lambda.padded(n)?;
    let mut count = 0;
    for t in enumerate_ssyt(lambda, 1, n) {
        nest_from_tableau(&t, n)?;
        count += 1;
    }
    Ok(count)
}

/// Number of B-nests of shape `λ` with `n` paths in height `m >= λ_1`.
pub fn count_b_nests(lambda: &Partition, n: usize, m: usize) -> Result<u64, PathsError> {
    let shape = lambda.complement(n, m)?;
    let mut count = 0;
    for t in enumerate_ssyt(&shape, 1, n) {
        bnest_from_tableau(&t, n, m)?;
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::tableau_sum;
    use std::collections::HashSet;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn nest_from_single_cell() {
        let t = Tableau::new(vec![vec![1]]).unwrap();
        let nest = nest_from_tableau(&t, 2).unwrap();
        assert_eq!(nest.line_counts(), vec![0, 1]);
        assert_eq!(nest.volume(), 1);
        let empty = nest_from_tableau(&Tableau::empty(), 3).unwrap();
        assert_eq!(empty.line_counts(), vec![0, 0, 0]);
        assert_eq!(empty.volume(), 0);
    }

    #[test]
    fn nest_of_a_six_row_tableau_round_trips() {
        let t = Tableau::new(vec![vec![1, 1, 2, 4, 5], vec![2, 3, 3, 5, 6], vec![3, 4, 5], vec![5, 5], vec![6, 6]])
            .unwrap();
        let nest = nest_from_tableau(&t, 6).unwrap();
        assert_eq!(nest.shape(), part(&[5, 5, 3, 2, 2, 0]));
        // letter v sits on line x_{7-v}
        assert_eq!(nest.line_counts(), vec![3, 5, 2, 3, 2, 2]);
        assert_eq!(tableau_from_nest(&nest).unwrap(), t);
    }

    #[test]
    fn c_nests_biject_with_tableaux() {
        for lam in enumerate_in_box(3, 3) {
            let mut seen = HashSet::new();
            for t in enumerate_ssyt(&lam, 1, 3) {
                let nest = nest_from_tableau(&t, 3).unwrap();
                assert_eq!(tableau_from_nest(&nest).unwrap(), t);
                assert!(seen.insert(nest));
            }
            let expected = tableau_sum(&lam, &GeometricPoint::principal(3)).unwrap().eval_at_one();
            assert_eq!(BigInt::from(seen.len()), expected);
        }
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_watermelons(1, 1, 0).unwrap().count(), 2);
        assert_eq!(enumerate_watermelons(2, 2, 0).unwrap().count(), 20);
        for n in 1..=3 {
            assert_eq!(enumerate_watermelons(n, 0, 0).unwrap().count(), 1);
        }
        assert!(matches!(enumerate_watermelons(2, 1, 3), Err(PathsError::DeviationTooLarge { .. })));
    }

    #[test]
    fn genfunc_examples() {
        assert_eq!(watermelon_genfunc(1, 1, 0).unwrap(), LaurentPoly::from_coeffs(0, &[1, 1]));
        for m in 0..=5 {
            assert_eq!(watermelon_genfunc(1, m, 0).unwrap(), LaurentPoly::from_coeffs(0, &vec![1; m + 1]));
        }
        assert_eq!(watermelon_genfunc(3, 0, 1).unwrap(), LaurentPoly::one());
        assert_eq!(watermelon_genfunc(2, 1, 1).unwrap(), LaurentPoly::from_coeffs(0, &[1, 1, 1]));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_genfunc(1, 1, 1), LaurentPoly::from_coeffs(0, &[1, 1]));
        let w = closed_genfunc(2, 2, 2);
        assert_eq!(w.eval_at_one(), BigInt::from(20));
        assert_eq!(w.degree(), Some(8));
        assert_eq!(closed_genfunc(3, 0, 2), LaurentPoly::one());
        assert_eq!(closed_genfunc(0, 2, 2), LaurentPoly::one());
    }

    #[test]
    fn counts() {
        for l in 0..=4 {
            for m in 0..=4 {
                assert_eq!(count_deviation(1, l, m), binomial((l + m) as i64, m as i64));
                for form in [DetForm::Binomial, DetForm::Complete] {
                    assert_eq!(count_deviation_det(1, l, m, form), count_deviation(1, l, m));
                }
            }
        }
        assert_eq!(count_deviation(2, 2, 2), BigInt::from(20));
        assert_eq!(count_deviation(1, 1, 1), BigInt::from(2));
        assert_eq!(count_deviation_det(2, 2, 2, DetForm::Binomial), BigInt::from(20));
        assert_eq!(count_deviation_det(2, 2, 2, DetForm::Complete), BigInt::from(20));
        assert_eq!(count_deviation(3, 3, 3), BigInt::from(980));
    }

    #[test]
    fn det_forms() {
        assert_eq!(genfunc_det_forms(1, 1, 1, DetForm::Complete), LaurentPoly::from_coeffs(0, &[1, 1]));
        for form in [DetForm::Binomial, DetForm::Complete] {
            assert_eq!(genfunc_det_forms(2, 2, 2, form), closed_genfunc(2, 2, 2));
            assert_eq!(genfunc_det_forms(3, 0, 2, form), LaurentPoly::one());
        }
        assert_eq!(DetForm::try_from(2), Ok(DetForm::Complete));
        assert!(DetForm::try_from(3).is_err());
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_count(&part(&[1]), 2).unwrap(), BigInt::from(2));
        assert_eq!(gv_count(&part(&[2, 1]), 3).unwrap(), BigInt::from(8));
        assert_eq!(gv_count(&Partition::empty(), 3).unwrap(), BigInt::from(1));
        assert_eq!(gv_count(&part(&[2, 2]), 2).unwrap(), BigInt::from(1));
        assert_eq!(count_b_nests(&part(&[2, 1]), 3, 2).unwrap(), 8);
        assert_eq!(count_b_nests(&part(&[2, 1]), 3, 4).unwrap(), 8);
    }

    #[test]
    fn horizontal_reading_round_trips() {
        for (n, m, k) in [(1, 2, 0), (2, 2, 0), (2, 2, 1), (3, 2, 1), (3, 2, 2), (3, 1, 3)] {
            let offset = horizontal_offset(n, m, k).unwrap();
            assert_eq!(offset, volume_offset(n, n - k), "N={n} M={m} k={k}");
            for w in enumerate_watermelons(n, m, k).unwrap() {
                let t = w.horizontal_tableau();
                assert_eq!(Watermelon::from_horizontal_tableau(n, m, k, &t).unwrap(), w);
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let w = enumerate_watermelons(3, 2, 1).unwrap().nth(17).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        let back: Watermelon = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v["volume"] = serde_json::json!(w.volume() + 1);
        assert!(serde_json::from_value::<Watermelon>(v).is_err());
        let minimal = enumerate_watermelons(2, 1, 0).unwrap().next().unwrap();
        assert_eq!(
            serde_json::to_string(&minimal).unwrap(),
            r#"{"N":2,"M":1,"k":0,"lambda":[0,0],"c_steps":[[0,0],[0,0]],"b_steps":[[1,0],[0,1]],"volume":0}"#
        );
    }
}
