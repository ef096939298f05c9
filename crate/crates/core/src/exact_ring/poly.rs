use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::ExactRingError;

/// A Laurent polynomial in one variable `q` with big-integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no explicit zeros, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

// Products whose operands both exceed this many terms go through a dense buffer.
const DENSE_MUL_THRESHOLD: usize = 8;

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - q^exp`.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        Self::one() - Self::q_pow(exp)
    }

    /// Builds `sum_i coeffs[i] q^(start + i)`.
    pub fn from_coeffs(start: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (start + i as i64, BigInt::from(c))))
    }

    /// Builds a polynomial from (exponent, coefficient) pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in iter {
            *terms.entry(e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    fn from_dense(start: i64, coeffs: Vec<BigInt>) -> Self {
        let terms =
            coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (start + i as i64, c)).collect();
        LaurentPoly { terms }
    }

    fn to_dense(&self) -> Option<(i64, Vec<BigInt>)> {
        let lo = self.min_exponent()?;
        let hi = self.degree()?;
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        Some((lo, out))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exponent(), self.degree()) {
            (Some(lo), Some(hi)) => self.terms.iter().all(|(&e, c)| self.coeff(lo + hi - e) == *c),
            _ => true,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder in `Z[q, q^-1]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ExactRingError> {
        let Some((d_lo, d)) = divisor.to_dense() else {
            return Err(ExactRingError::DivisionByZero);
        };
        let Some((n_lo, mut n)) = self.to_dense() else {
            return Ok(Self::zero());
        };
        let not_divisible =
            || ExactRingError::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() };
        // Both dense buffers start with a nonzero coefficient, so q is coprime
        // to them and divisibility reduces to ordinary polynomial division.
        if n.len() < d.len() {
            return Err(not_divisible());
        }
        let qlen = n.len() - d.len() + 1;
        let lead = d.last().expect("nonempty divisor");
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &n[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lead);
            if !rem.is_zero() {
                return Err(not_divisible());
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    n[i + j] -= &c * dj;
                }
            }
            quot[i] = c;
        }
        if n.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(Self::from_dense(n_lo - d_lo, quot))
    }

    fn mul_sparse(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *terms.entry(ea + eb).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    fn mul_dense(&self, other: &Self) -> Self {
        let (Some((alo, a)), Some((blo, b))) = (self.to_dense(), other.to_dense()) else {
            return Self::zero();
        };
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[i + j] += ca * cb;
                }
            }
        }
        Self::from_dense(alo + blo, out)
    }

    fn span(&self) -> usize {
        match (self.min_exponent(), self.degree()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let dense_enough = |p: &LaurentPoly| p.span() <= 4 * p.len();
        if self.len() > DENSE_MUL_THRESHOLD
            && rhs.len() > DENSE_MUL_THRESHOLD
            && dense_enough(self)
            && dense_enough(rhs)
        {
            self.mul_dense(rhs)
        } else {
            self.mul_sparse(rhs)
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Human-readable form, increasing exponents: `1 + 2*q - q^3 + q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Wire format: `[[exponent, "coefficient"], ...]` with strictly increasing
/// exponents and no zero coefficients.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of [exponent, \"coefficient\"] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<LaurentPoly, A::Error> {
                let mut terms = BTreeMap::new();
                let mut last: Option<i64> = None;
                while let Some((e, c)) = seq.next_element::<(i64, String)>()? {
                    if last.is_some_and(|l| l >= e) {
                        return Err(de::Error::custom("exponents must be strictly increasing"));
                    }
                    let c: BigInt = c.parse().map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
                    if c.is_zero() {
                        return Err(de::Error::custom("zero coefficient in canonical form"));
                    }
                    terms.insert(e, c);
                    last = Some(e);
                }
                Ok(LaurentPoly { terms })
            }
        }

        deserializer.deserialize_seq(PolyVisitor)
    }
}
