//! Schur polynomials evaluated at geometric points `x_j = q^{a_j}`.
//!
//! Five independent routes are provided: the bialternant ratio, the
//! tableau sum, the principal-specialization product, the Jacobi-Trudi
//! determinant in complete homogeneous functions, and the q-binomial
//! determinant. They agree wherever their domains overlap, which the tests
//! exploit heavily.

mod tableau;

pub use tableau::{enumerate_ssyt, SsytIter, Tableau, TableauError};

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact_ring::{alternant_denominator, LaurentPoly, PolyMatrix};
use crate::partitions::{Partition, PartitionError};
use crate::qcombinat::{h_complete, qbinomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("point exponents {0:?} are not pairwise distinct")]
    DegeneratePoint(Vec<i64>),
    #[error("partition {partition} has more nonzero parts than the {vars} variables")]
    TooManyParts { partition: Partition, vars: usize },
    #[error("cannot drop {k} parts of {partition}: a dropped part is nonzero")]
    NonzeroTail { partition: Partition, k: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Exponents `(a_1, ..., a_m)` of the point `x_j = q^{a_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometricPoint(Vec<i64>);

impl GeometricPoint {
    pub fn new(exponents: Vec<i64>) -> Self {
        GeometricPoint(exponents)
    }

    /// `(1, q, ..., q^{m-1})`.
    pub fn principal(m: usize) -> Self {
        GeometricPoint((0..m as i64).collect())
    }

    /// `(q, q^2, ..., q^m)`.
    pub fn shifted(m: usize) -> Self {
        GeometricPoint((1..=m as i64).collect())
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_distinct(&self) -> bool {
        let set: HashSet<_> = self.0.iter().collect();
        set.len() == self.0.len()
    }
}

impl From<Vec<i64>> for GeometricPoint {
    fn from(v: Vec<i64>) -> Self {
        GeometricPoint(v)
    }
}

fn too_many_parts(lambda: &Partition, vars: usize) -> SchurError {
    SchurError::TooManyParts { partition: lambda.clone(), vars }
}

/// `det(x_j^{λ_k+N-k}) / det(x_j^{N-k})` with `N` the number of variables.
pub fn bialternant(lambda: &Partition, pt: &GeometricPoint) -> Result<LaurentPoly, SchurError> {
    let n = pt.len();
    let lam = lambda.padded(n).map_err(|_| too_many_parts(lambda, n))?;
    if !pt.is_distinct() {
        return Err(SchurError::DegeneratePoint(pt.exponents().to_vec()));
    }
    let a = pt.exponents();
    let alternant = PolyMatrix::from_fn(n, n, |j, k| LaurentPoly::q_pow(a[j] * (lam.part(k) + n - 1 - k) as i64)).det();
    Ok(alternant.exact_div(&alternant_denominator(a)).expect("alternant is divisible by the Vandermonde determinant"))
}

/// `Σ_T q^{Σ a_{T_ij}}` over semistandard tableaux of shape `λ` with
/// entries in `1..=m`.
pub fn tableau_sum(lambda: &Partition, pt: &GeometricPoint) -> Result<LaurentPoly, SchurError> {
    let m = pt.len();
    if lambda.length() > m {
        return Err(too_many_parts(lambda, m));
    }
    let a = pt.exponents();
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for t in enumerate_ssyt(lambda, 1, m) {
        let e: i64 = t.entries().map(|v| a[v - 1]).sum();
        *counts.entry(e).or_default() += 1;
    }
    Ok(LaurentPoly::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Principal specialization `S_λ(1, q, ..., q^{m-1})` by the hook-content
/// style product `q^{n(λ)} Π_{i<j} (1 - q^{λ_i-λ_j-i+j}) / (1 - q^{j-i})`.
pub fn principal_product(lambda: &Partition, m: usize) -> Result<LaurentPoly, SchurError> {
    let lam = lambda.padded(m).map_err(|_| too_many_parts(lambda, m))?;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 0..m {
        for j in i + 1..m {
            let gap = lam.part(i) as i64 - lam.part(j) as i64 + (j - i) as i64;
            num = &num * &LaurentPoly::one_minus_q_pow(gap);
            den = &den * &LaurentPoly::one_minus_q_pow((j - i) as i64);
        }
    }
    let ratio = num.exact_div(&den).expect("principal specialization is a polynomial");
    Ok(ratio.shift(lam.n_statistic() as i64))
}

/// `det(h_{λ_i-i+j}(1, q, ..., q^{m-1}))`.
pub fn h_determinant(lambda: &Partition, m: usize) -> Result<LaurentPoly, SchurError> {
    let lam = lambda.trimmed();
    let n = lam.len();
    if n > m {
        return Err(too_many_parts(lambda, m));
    }
    let mat = PolyMatrix::from_fn(n, n, |i, j| h_complete(lam.part(i) as i64 - i as i64 + j as i64, m as u32));
    Ok(mat.det())
}

/// `det(q^{(j-1)(λ_i+j-i)} [λ_i+m-i choose m-j])`, valid for `m >= ℓ(λ)`.
pub fn gv_determinant(lambda: &Partition, m: usize) -> Result<LaurentPoly, SchurError> {
    let lam = lambda.trimmed();
    let n = lam.len();
    if n > m {
        return Err(too_many_parts(lambda, m));
    }
    let (m, n_i) = (m as i64, n);
    let mat = PolyMatrix::from_fn(n_i, n_i, |i, j| {
        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
        let li = lam.part(i) as i64;
        qbinomial(li + m - i1, m - j1).shift((j1 - 1) * (li + j1 - i1))
    });
    Ok(mat.det())
}

/// Checks `S_λ(q, ..., q^N) = q^{|λ|} S_λ(1, ..., q^{N-1})` exactly.
pub fn weight_shift_check(lambda: &Partition, n: usize) -> Result<bool, SchurError> {
    let lhs = bialternant(lambda, &GeometricPoint::shifted(n))?;
    let rhs = bialternant(lambda, &GeometricPoint::principal(n))?.shift(lambda.weight() as i64);
    Ok(lhs == rhs)
}

/// Drops the last `k` parts of `λ` (padded to `n`), which must all be zero:
/// setting those `k` variables to zero turns `S_λ` in `n` variables into
/// `S_λ̃` in `n - k` variables.
pub fn limit_vanishing_vars(lambda: &Partition, n: usize, k: usize) -> Result<Partition, SchurError> {
    let lam = lambda.padded(n).map_err(|_| too_many_parts(lambda, n))?;
    let keep = n.checked_sub(k).ok_or(SchurError::NonzeroTail { partition: lambda.clone(), k })?;
    if lam.parts()[keep..].iter().any(|&p| p != 0) {
        return Err(SchurError::NonzeroTail { partition: lambda.clone(), k });
    }
    Ok(Partition::new(lam.parts()[..keep].to_vec())?)
}
