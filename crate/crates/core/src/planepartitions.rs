//! Plane partitions in a box and their correspondence with watermelons.
//!
//! A plane partition in `B(N, L, M)` is an `L x N` array (`L` rows, `N`
//! columns) of integers in `0..=M`, weakly decreasing along rows and columns.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_ring::LaurentPoly;
use crate::paths::{PathsError, Watermelon};
use crate::schur::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanePartitionError {
    #[error("parts must form a rectangular array")]
    Ragged,
    #[error("parts must weakly decrease along rows and columns")]
    NotDecreasing,
    #[error("plane partition does not fit the box B({n}, {l}, {m})")]
    BoxMismatch { n: usize, l: usize, m: usize },
    #[error("stored volume {stored} does not match computed volume {computed}")]
    VolumeMismatch { stored: u64, computed: u64 },
    #[error(transparent)]
    Paths(#[from] PathsError),
}

/// A plane partition together with the box it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    n: usize,
    l: usize,
    m: usize,
    parts: Vec<Vec<u32>>,
}

impl PlanePartition {
    /// `parts` must have `l` rows of `n` entries each, all `<= m`.
    pub fn new(n: usize, l: usize, m: usize, parts: Vec<Vec<u32>>) -> Result<Self, PlanePartitionError> {
        if parts.len() != l || parts.iter().any(|r| r.len() != n) {
            return Err(PlanePartitionError::Ragged);
        }
        for i in 0..l {
            for j in 0..n {
                let v = parts[i][j];
                if (j + 1 < n && parts[i][j + 1] > v) || (i + 1 < l && parts[i + 1][j] > v) {
                    return Err(PlanePartitionError::NotDecreasing);
                }
                if v as usize > m {
                    return Err(PlanePartitionError::BoxMismatch { n, l, m });
                }
            }
        }
        Ok(PlanePartition { n, l, m, parts })
    }

    pub fn empty(n: usize, l: usize, m: usize) -> Self {
        PlanePartition { n, l, m, parts: vec![vec![0; n]; l] }
    }

    pub fn full(n: usize, l: usize, m: usize) -> Self {
        PlanePartition { n, l, m, parts: vec![vec![m as u32; n]; l] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// `π_{ij}` with 1-based indices, `i <= L`, `j <= N`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.parts[i - 1][j - 1]
    }

    pub fn volume(&self) -> u64 {
        self.parts.iter().flatten().map(|&v| v as u64).sum()
    }

    pub fn transpose(&self) -> Self {
        let parts = (0..self.n).map(|j| (0..self.l).map(|i| self.parts[i][j]).collect()).collect();
        PlanePartition { n: self.l, l: self.n, m: self.m, parts }
    }

    /// The complementary plane partition `M - π_{L+1-i, N+1-j}`.
    pub fn complement(&self) -> Self {
        let parts = (0..self.l)
            .map(|i| (0..self.n).map(|j| self.m as u32 - self.parts[self.l - 1 - i][self.n - 1 - j]).collect())
            .collect();
        PlanePartition { n: self.n, l: self.l, m: self.m, parts }
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.parts {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PlanePartitionRecord {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "L")]
    l: usize,
    #[serde(rename = "M")]
    m: usize,
    parts: Vec<Vec<u32>>,
    volume: u64,
}

impl Serialize for PlanePartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PlanePartitionRecord { n: self.n, l: self.l, m: self.m, parts: self.parts.clone(), volume: self.volume() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlanePartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = PlanePartitionRecord::deserialize(deserializer)?;
        let pp = PlanePartition::new(rec.n, rec.l, rec.m, rec.parts).map_err(serde::de::Error::custom)?;
        if pp.volume() != rec.volume {
            return Err(serde::de::Error::custom(PlanePartitionError::VolumeMismatch {
                stored: rec.volume,
                computed: pp.volume(),
            }));
        }
        Ok(pp)
    }
}

/// Iterator over `B(N, L, M)` in row-major lexicographic order of the parts.
pub struct BoxIter {
    n: usize,
    l: usize,
    m: usize,
    cells: Vec<u32>,
    started: bool,
    done: bool,
}

impl BoxIter {
    fn bound(&self, idx: usize) -> u32 {
        let (i, j) = (idx / self.n, idx % self.n);
        let mut b = self.m as u32;
        if i > 0 {
            b = b.min(self.cells[idx - self.n]);
        }
        if j > 0 {
            b = b.min(self.cells[idx - 1]);
        }
        b
    }

    fn advance(&mut self) -> bool {
        for idx in (0..self.cells.len()).rev() {
            if self.cells[idx] < self.bound(idx) {
                self.cells[idx] += 1;
                for rest in idx + 1..self.cells.len() {
                    self.cells[rest] = 0;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> PlanePartition {
        let parts = if self.n == 0 {
            vec![Vec::new(); self.l]
        } else {
            self.cells.chunks(self.n).map(|c| c.to_vec()).collect()
        };
        PlanePartition { n: self.n, l: self.l, m: self.m, parts }
    }
}

impl Iterator for BoxIter {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current())
    }
}

/// Every plane partition in `B(N, L, M)` exactly once, starting from the
/// empty one.
pub fn enumerate_box(n: usize, l: usize, m: usize) -> BoxIter {
    BoxIter { n, l, m, cells: vec![0; n * l], started: false, done: false }
}

/// `Z_q(N, L, M) = Σ q^{|π|}` over the box, by enumeration.
pub fn zq(n: usize, l: usize, m: usize) -> LaurentPoly {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for pp in enumerate_box(n, l, m) {
        *counts.entry(pp.volume() as i64).or_insert(0) += 1;
    }
    LaurentPoly::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

/// `Π_{i<=N} Π_{j<=M} (1 - q^{L+i+j-1}) / (1 - q^{i+j-1})`.
pub fn macmahon_product(n: usize, l: usize, m: usize) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=n as i64 {
        for j in 1..=m as i64 {
            num = &num * &LaurentPoly::one_minus_q_pow(l as i64 + i + j - 1);
            den = &den * &LaurentPoly::one_minus_q_pow(i + j - 1);
        }
    }
    num.exact_div(&den).expect("MacMahon product is a polynomial")
}

/// Maps `π ∈ B(N, L, M)` (with `L <= N`) to the watermelon of `N` paths,
/// height `M` and deviation `N - L` whose volume is `|π|`.
///
/// The gradient lines of `π` become the rows of the horizontal reading:
/// `T_{r,c} = π_{L+1-c, N+1-r} + r`.
pub fn gradient_bijection(
    pp: &PlanePartition,
    n: usize,
    l: usize,
    m: usize,
) -> Result<Watermelon, PlanePartitionError> {
    if pp.n != n || pp.l != l || l > n || pp.parts.iter().flatten().any(|&v| v as usize > m) {
        return Err(PlanePartitionError::BoxMismatch { n, l, m });
    }
    let rows = (1..=n).map(|r| (1..=l).map(|c| pp.get(l + 1 - c, n + 1 - r) as usize + r).collect()).collect();
    let t = Tableau::new(rows).map_err(PathsError::from)?;
    Ok(Watermelon::from_horizontal_tableau(n, m, n - l, &t)?)
}

pub fn gradient_bijection_inverse(w: &Watermelon) -> PlanePartition {
    let (n, l, m) = (w.n(), w.l(), w.m());
    let t = w.horizontal_tableau();
    let parts = (1..=l).map(|i| (1..=n).map(|j| (t.rows()[n - j][l - i] - (n + 1 - j)) as u32).collect()).collect();
    PlanePartition::new(n, l, m, parts).expect("horizontal reading of a watermelon is a boxed plane partition")
}
