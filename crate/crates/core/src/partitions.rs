//! Partitions, strict partitions and occupation numbers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("parts are not strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<usize>),
    #[error("partition has {parts} nonzero parts but only {len} are allowed")]
    TooManyParts { parts: usize, len: usize },
    #[error("cannot parse partition {0:?}: expected e.g. [5,5,3,2,2,0]")]
    Parse(String),
}

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are kept as given; callers that work in a length-`N`
/// context pad or trim explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `N` parts all equal to `m`.
    pub fn rectangle(n: usize, m: usize) -> Self {
        Partition { parts: vec![m; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based); zero past the stored parts.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of stored parts, including trailing zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `|λ| = Σ λ_i`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn trimmed(&self) -> Partition {
        Partition { parts: self.parts[..self.length()].to_vec() }
    }

    /// The parts padded with zeros (or trimmed of zeros) to exactly `n`.
    pub fn padded(&self, n: usize) -> Result<Partition, PartitionError> {
        let len = self.length();
        if len > n {
            return Err(PartitionError::TooManyParts { parts: len, len: n });
        }
        let mut parts = self.parts[..len].to_vec();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Whether the Young diagram fits in `n` rows of length at most `m`.
    pub fn fits_in_box(&self, n: usize, m: usize) -> bool {
        self.length() <= n && self.part(0) <= m
    }

    /// `(m - λ_n, ..., m - λ_1)` for `λ` inside the `n x m` box.
    pub fn complement(&self, n: usize, m: usize) -> Result<Partition, PartitionError> {
        let padded = self.padded(n)?;
        if padded.part(0) > m {
            return Err(PartitionError::TooManyParts { parts: padded.part(0), len: m });
        }
        Ok(Partition { parts: padded.parts.iter().rev().map(|&p| m - p).collect() })
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `[5,5,3,2,2,0]`
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts =
            inner.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A strictly decreasing sequence `μ_1 > ... > μ_N >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrictlyDecreasing(parts));
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Inverse of [`to_strict`]: `λ_j = μ_j - (N - j)`.
    pub fn to_partition(&self) -> Partition {
        let n = self.parts.len();
        Partition { parts: self.parts.iter().enumerate().map(|(j, &m)| m - (n - 1 - j)).collect() }
    }
}

/// `μ_j = λ_j + N - j`, with `λ` padded to length `n`.
pub fn to_strict(lambda: &Partition, n: usize) -> Result<StrictPartition, PartitionError> {
    let padded = lambda.padded(n)?;
    Ok(StrictPartition { parts: padded.parts.iter().enumerate().map(|(j, &l)| l + n - 1 - j).collect() })
}

/// Bosonic occupation numbers: `counts[s]` particles sit on site `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccupationConfig {
    pub counts: Vec<usize>,
}

impl OccupationConfig {
    /// Multiplicities of the values `0..=m` in `λ`, read in a length-`n` context.
    pub fn of_partition(lambda: &Partition, n: usize, m: usize) -> Result<Self, PartitionError> {
        let padded = lambda.padded(n)?;
        if padded.part(0) > m {
            return Err(PartitionError::TooManyParts { parts: padded.part(0), len: m });
        }
        let mut counts = vec![0; m + 1];
        for &p in padded.parts() {
            counts[p] += 1;
        }
        Ok(OccupationConfig { counts })
    }

    pub fn particles(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// `λ = (M^{n_M}, ..., 1^{n_1}, 0^{n_0})`.
pub fn from_occupation(config: &OccupationConfig) -> Partition {
    let parts = config.counts.iter().enumerate().rev().flat_map(|(s, &n)| std::iter::repeat_n(s, n)).collect();
    Partition { parts }
}

/// All partitions with at most `n` parts, each at most `m`, as length-`n`
/// part vectors in increasing lexicographic order starting from the zero
/// partition. There are `binomial(n+m, n)` of them.
pub fn enumerate_in_box(n: usize, m: usize) -> PartitionsInBox {
    PartitionsInBox { m, current: Some(vec![0; n]) }
}

#[derive(Debug, Clone)]
pub struct PartitionsInBox {
    m: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        let mut next = cur;
        // rightmost position that can grow without breaking monotonicity
        let pos = (0..next.len()).rev().find(|&i| {
            let cap = if i == 0 { self.m } else { next[i - 1] };
            next[i] < cap
        });
        if let Some(i) = pos {
            next[i] += 1;
            for v in next.iter_mut().skip(i + 1) {
                *v = 0;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcombinat::binomial;
    use std::collections::HashSet;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_stats() {
        assert!(Partition::new(vec![1, 2]).is_err());
        let l = part(&[5, 5, 3, 2, 2, 0]);
        assert_eq!(l.weight(), 17);
        assert_eq!(l.n_statistic(), 5 + 6 + 6 + 8);
        assert_eq!(l.length(), 5);
        assert_eq!(l.trimmed(), part(&[5, 5, 3, 2, 2]));
        assert_eq!(l.padded(4), Err(PartitionError::TooManyParts { parts: 5, len: 4 }));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[5,5,3,2,2,0]".parse::<Partition>().unwrap(), part(&[5, 5, 3, 2, 2, 0]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2 , 1 ] ".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert!(matches!("[1,2]".parse::<Partition>(), Err(PartitionError::NotWeaklyDecreasing(_))));
        assert!(matches!("2,1".parse::<Partition>(), Err(PartitionError::Parse(_))));
        assert!(matches!("[a]".parse::<Partition>(), Err(PartitionError::Parse(_))));
        assert_eq!(part(&[5, 5, 3]).to_string(), "[5,5,3]");
    }

    #[test]
    fn to_strict_examples() {
        assert_eq!(to_strict(&part(&[5, 5, 3, 2, 2, 0]), 6).unwrap().parts(), &[10, 9, 6, 4, 3, 0]);
        assert_eq!(to_strict(&part(&[0, 0, 0]), 3).unwrap().parts(), &[2, 1, 0]);
        assert_eq!(to_strict(&part(&[7]), 1).unwrap().parts(), &[7]);
        assert!(StrictPartition::new(vec![3, 3]).is_err());
    }

    #[test]
    fn from_occupation_examples() {
        // n_5 = 2, n_3 = 1, n_2 = 2, n_0 = 1
        let c = OccupationConfig { counts: vec![1, 0, 2, 1, 0, 2] };
        assert_eq!(from_occupation(&c), part(&[5, 5, 3, 2, 2, 0]));
        assert_eq!(from_occupation(&OccupationConfig { counts: vec![3, 0] }), part(&[0, 0, 0]));
        assert_eq!(from_occupation(&OccupationConfig { counts: vec![0, 0, 2] }), part(&[2, 2]));
    }

    #[test]
    fn bijections_round_trip_in_4x4() {
        for l in enumerate_in_box(4, 4) {
            let mu = to_strict(&l, 4).unwrap();
            assert!(StrictPartition::new(mu.parts().to_vec()).is_ok());
            assert_eq!(mu.to_partition(), l);
            let occ = OccupationConfig::of_partition(&l, 4, 4).unwrap();
            assert_eq!(occ.particles(), 4);
            assert_eq!(from_occupation(&occ), l);
        }
    }

    #[test]
    fn enumerate_examples() {
        let v: Vec<_> = enumerate_in_box(1, 1).collect();
        assert_eq!(v, vec![part(&[0]), part(&[1])]);
        let v: Vec<_> = enumerate_in_box(2, 1).collect();
        assert_eq!(v, vec![part(&[0, 0]), part(&[1, 0]), part(&[1, 1])]);
        assert_eq!(enumerate_in_box(0, 3).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(enumerate_in_box(3, 0).collect::<Vec<_>>(), vec![part(&[0, 0, 0])]);
        let v: Vec<_> = enumerate_in_box(2, 2).map(|p| p.to_string()).collect();
        assert_eq!(v, ["[0,0]", "[1,0]", "[1,1]", "[2,0]", "[2,1]", "[2,2]"]);
    }

    #[test]
    fn enumerate_counts_and_uniqueness() {
        for n in 0..=6 {
            for m in 0..=6 {
                let all: Vec<_> = enumerate_in_box(n, m).collect();
                assert_eq!(binomial((n + m) as i64, n as i64), all.len().into());
                let set: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|p| p.len() == n && p.fits_in_box(n, m)));
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[3]).conjugate(), part(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for l in enumerate_in_box(4, 4) {
            let c = l.conjugate();
            assert_eq!(c.weight(), l.weight());
            assert_eq!(c.conjugate(), l.trimmed());
        }
    }

    #[test]
    fn complement_in_box() {
        assert_eq!(part(&[2, 1]).complement(3, 2).unwrap(), part(&[2, 1, 0]));
        assert_eq!(Partition::empty().complement(2, 3).unwrap(), part(&[3, 3]));
        assert!(part(&[4]).complement(2, 3).is_err());
    }
}
