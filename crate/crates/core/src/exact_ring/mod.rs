//! Exact arithmetic: big integers, Laurent polynomials in `q`, and
//! matrices over them with fraction-free determinants.

mod matrix;
mod poly;

pub use matrix::Matrix;
pub use num_bigint::BigInt;
pub use poly::LaurentPoly;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Matrix of Laurent polynomials.
pub type PolyMatrix = Matrix<LaurentPoly>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactRingError {
    #[error("exact division failed: {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// An integral domain with exact (checked) division.
///
/// Fraction-free elimination only ever divides by values that are known to
/// divide the dividend, so `exact_div` failing inside it is a bug.
pub trait ExactRing: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, divisor: &Self) -> Result<Self, ExactRingError>;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Result<Self, ExactRingError> {
        if Zero::is_zero(divisor) {
            return Err(ExactRingError::DivisionByZero);
        }
        let (quot, rem) = self.div_rem(divisor);
        if Zero::is_zero(&rem) {
            Ok(quot)
        } else {
            Err(ExactRingError::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() })
        }
    }
}

impl ExactRing for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Result<Self, ExactRingError> {
        LaurentPoly::exact_div(self, divisor)
    }
}

/// `prod_{m<l} (q^{a_l} - q^{a_m})`.
///
/// Note that `det(x_j^{N-k})` equals this product times `(-1)^{N(N-1)/2}`;
/// see [`alternant_denominator`].
pub fn vandermonde(exponents: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for l in 0..exponents.len() {
        for m in 0..l {
            let factor = LaurentPoly::monomial(1, exponents[l]) - LaurentPoly::monomial(1, exponents[m]);
            if factor.is_zero() {
                return LaurentPoly::zero();
            }
            acc = &acc * &factor;
        }
    }
    acc
}

/// The alternant `det(x_j^{N-k})` at `x_j = q^{a_j}`, i.e. the denominator
/// of the bialternant formula.
pub fn alternant_denominator(exponents: &[i64]) -> LaurentPoly {
    let n = exponents.len();
    let v = vandermonde(exponents);
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Sum of all coefficients (the `q -> 1` specialization).
pub fn eval_at_one(p: &LaurentPoly) -> BigInt {
    p.eval_at_one()
}

/// Determinant by single-step fraction-free elimination.
pub fn det_fraction_free<T: ExactRing>(m: &Matrix<T>) -> T {
    m.det()
}
