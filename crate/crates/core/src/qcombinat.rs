//! q-integers, q-factorials, Gaussian binomials and complete homogeneous
//! symmetric functions at geometric points.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_ring::LaurentPoly;

/// `[n] = 1 + q + ... + q^(n-1)`; `[0] = 0`.
pub fn qint(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, BigInt::one())))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n).map(qint).product()
}

/// Gaussian binomial coefficient `[upper choose lower]`.
///
/// Zero when `lower < 0` or `lower > upper`. Computed as the running product
/// `prod_i [upper-lower+i] / [i]`, dividing exactly at every step so each
/// partial product is itself a Gaussian binomial.
pub fn qbinomial(upper: i64, lower: i64) -> LaurentPoly {
    if lower < 0 || lower > upper {
        return LaurentPoly::zero();
    }
    let r = lower.min(upper - lower);
    let mut acc = LaurentPoly::one();
    for i in 1..=r {
        acc = (&acc * &LaurentPoly::one_minus_q_pow(upper - r + i))
            .exact_div(&LaurentPoly::one_minus_q_pow(i))
            .expect("partial q-binomial products are polynomials");
    }
    acc
}

/// Checks `[R r] = [R-1 r-1] + q^r [R-1 r]` as an exact polynomial identity.
pub fn pascal_check(upper: i64, lower: i64) -> bool {
    let lhs = qbinomial(upper, lower);
    let rhs = qbinomial(upper - 1, lower - 1) + qbinomial(upper - 1, lower).shift(lower);
    lhs == rhs
}

/// `h_r(1, q, ..., q^(m-1)) = [m+r-1 choose r]`; 0 for `r < 0`, 1 for `r = 0`.
pub fn h_complete(r: i64, m: u32) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero();
    }
    if r == 0 {
        return LaurentPoly::one();
    }
    qbinomial(m as i64 + r - 1, r)
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}
