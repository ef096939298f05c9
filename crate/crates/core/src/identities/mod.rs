//! Executable checks of the identities between Schur sums, determinants,
//! lattice-path enumerations and plane-partition generating functions.
//!
//! Every check returns [`IdentityReport`]s carrying both sides as exact
//! polynomials, so a failure can be diffed.

mod suite;

pub use suite::{fuzz_cases, run_case, run_cases, worker_count, Case, GridSpec, Suite, WORKERS_ENV};

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exact_ring::{alternant_denominator, LaurentPoly, PolyMatrix};
use crate::partitions::{enumerate_in_box, Partition};
use crate::paths::{
    closed_genfunc, count_b_nests, count_c_nests, count_deviation, count_deviation_det, enumerate_watermelons,
    genfunc_det_forms, gv_count, horizontal_offset, schur_specialization_genfunc, schur_sum_genfunc, volume_offset,
    watermelon_genfunc, DetForm, PathsError,
};
use crate::planepartitions::{
    enumerate_box, gradient_bijection, gradient_bijection_inverse, macmahon_product, zq, PlanePartitionError,
};
use crate::qcombinat::qbinomial;
use crate::schur::{bialternant, GeometricPoint, SchurError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Paths(#[from] PathsError),
    #[error(transparent)]
    PlanePartition(#[from] PlanePartitionError),
}

/// Outcome of one identity check. Serialized as one JSON object per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
    pub elapsed_ms: f64,
}

impl IdentityReport {
    fn new(name: &str, params: Value, lhs: LaurentPoly, rhs: LaurentPoly, start: Instant) -> Self {
        let equal = lhs == rhs;
        Self::with_verdict(name, params, lhs, rhs, equal, start)
    }

    fn with_verdict(
        name: &str,
        params: Value,
        lhs: LaurentPoly,
        rhs: LaurentPoly,
        equal: bool,
        start: Instant,
    ) -> Self {
        let params = match params {
            Value::Object(map) => map.into_iter().collect(),
            other => BTreeMap::from([("value".to_string(), other)]),
        };
        IdentityReport {
            name: name.to_string(),
            params,
            lhs,
            rhs,
            equal,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

fn constant(n: BigInt) -> LaurentPoly {
    LaurentPoly::constant(n)
}

fn check_point(name: &str, pt: &GeometricPoint, len: usize) -> Result<(), IdentityError> {
    if pt.len() != len {
        return Err(IdentityError::DegeneratePoint(format!("{name} has {} exponents, expected {len}", pt.len())));
    }
    if !pt.is_distinct() {
        return Err(IdentityError::DegeneratePoint(format!("{name} = {:?} repeats an exponent", pt.exponents())));
    }
    Ok(())
}

/// `(1 - t^{p}) / (1 - t) = 1 + t + ... + t^{p-1}` at `t = q^s`.
fn geometric_sum(s: i64, p: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..p).map(|r| (r * s, BigInt::from(1))))
}

/// `Σ_{λ ⊆ M^n} S_λ(x) S_λ(y)`.
fn schur_pair_sum(rows: usize, m: usize, x: &GeometricPoint, y: &GeometricPoint) -> Result<LaurentPoly, IdentityError> {
    let mut acc = LaurentPoly::zero();
    for lam in enumerate_in_box(rows, m) {
        acc = acc + bialternant(&lam, x)? * bialternant(&lam, y)?;
    }
    Ok(acc)
}

/// Sum of products of Schur polynomials over `λ ⊆ M^N` against the
/// determinant of `M_{kj} = (1 - (x_k y_j)^{M+N}) / (1 - x_k y_j)` divided by
/// both alternants, at `x_k = q^{a_k}`, `y_j = q^{b_j}`.
pub fn verify_binet_cauchy(
    n: usize,
    m: usize,
    a: &GeometricPoint,
    b: &GeometricPoint,
) -> Result<IdentityReport, IdentityError> {
    check_point("a", a, n)?;
    check_point("b", b, n)?;
    for &ak in a.exponents() {
        for &bj in b.exponents() {
            if ak + bj == 0 {
                return Err(IdentityError::DegeneratePoint(format!("a_k + b_j = 0 for a_k = {ak}, b_j = {bj}")));
            }
        }
    }
    binet_cauchy_report("binet_cauchy", n, m, a, b)
}

fn binet_cauchy_report(
    name: &str,
    n: usize,
    m: usize,
    a: &GeometricPoint,
    b: &GeometricPoint,
) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let lhs = schur_pair_sum(n, m, a, b)?;
    let (ae, be) = (a.exponents(), b.exponents());
    let p = (m + n) as i64;
    let mat = PolyMatrix::from_fn(n, n, |k, j| {
        let s = ae[k] + be[j];
        let num = LaurentPoly::one_minus_q_pow(p * s);
        num.exact_div(&LaurentPoly::one_minus_q_pow(s)).expect("1 - t divides 1 - t^p")
    });
    let den = alternant_denominator(ae) * alternant_denominator(be);
    let rhs = mat.det().exact_div(&den).map_err(|e| IdentityError::DegeneratePoint(e.to_string()))?;
    let params = json!({"N": n, "M": m, "a": ae, "b": be});
    Ok(IdentityReport::new(name, params, lhs, rhs, start))
}

/// [`verify_binet_cauchy`] at `y = (q, ..., q^N)`, `x = (1, ..., q^{N-1})`.
pub fn verify_q_binet_cauchy(n: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    if n == 0 {
        return Err(IdentityError::InvalidParameters("N must be at least 1".into()));
    }
    binet_cauchy_report("q_binet_cauchy", n, m, &GeometricPoint::principal(n), &GeometricPoint::shifted(n))
}

/// The Kuperberg determinant against MacMahon's product for the `N x N x M`
/// box.
pub fn verify_kuperberg(n: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    if n == 0 {
        return Err(IdentityError::InvalidParameters("N must be at least 1".into()));
    }
    let start = Instant::now();
    let p = (m + n) as i64;
    let mat = PolyMatrix::from_fn(n, n, |j, k| geometric_sum(j as i64 + k as i64 + 1, p));
    let den = alternant_denominator(GeometricPoint::shifted(n).exponents())
        * alternant_denominator(GeometricPoint::principal(n).exponents());
    let lhs = mat.det().exact_div(&den).map_err(|e| IdentityError::DegeneratePoint(e.to_string()))?;
    let (ni, mi) = (n as i64, m as i64);
    let mut num = LaurentPoly::one();
    let mut dnm = LaurentPoly::one();
    for j in 1..=ni {
        for k in 1..=ni {
            num = &num * &LaurentPoly::one_minus_q_pow(mi + j + k - 1);
            dnm = &dnm * &LaurentPoly::one_minus_q_pow(j + k - 1);
        }
    }
    let rhs = num.exact_div(&dnm).expect("MacMahon product is a polynomial");
    let params = json!({"N": n, "M": m, "rhs_equals_macmahon": rhs == macmahon_product(n, n, m)});
    Ok(IdentityReport::new("kuperberg", params, lhs, rhs, start))
}

/// The printed prefactor exponent `NM(1-M)/2` of the q-binomial determinant.
pub fn qbinomial_det_printed_exponent(n: usize, m: usize) -> i64 {
    let (n, m) = (n as i64, m as i64);
    n * m * (1 - m) / 2
}

/// `Σ_{λ ⊆ M^N} S_λ(q, ..., q^N) S_λ(1, ..., q^{N-1})` against
/// `q^e det([2N+i-1 choose N+j-1])_{1<=i,j<=M}`. The exponent `e` is taken
/// from `{NM(1-M)/2, NM(M-1)/2}`; the one used is recorded.
pub fn verify_qbinomial_det(n: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    if n == 0 || m == 0 {
        return Err(IdentityError::InvalidParameters("N and M must be at least 1".into()));
    }
    let start = Instant::now();
    let lhs = schur_pair_sum(n, m, &GeometricPoint::shifted(n), &GeometricPoint::principal(n))?;
    let ni = n as i64;
    let mat = PolyMatrix::from_fn(m, m, |i, j| qbinomial(2 * ni + i as i64, ni + j as i64));
    let det = mat.det();
    let printed = qbinomial_det_printed_exponent(n, m);
    let exponent = [printed, -printed].into_iter().find(|&e| det.shift(e) == lhs).unwrap_or(printed);
    let rhs = det.shift(exponent);
    let params = json!({
        "N": n,
        "M": m,
        "prefactor_exponent": exponent,
        "printed_exponent": printed,
        "printed_sign_holds": exponent == printed,
    });
    Ok(IdentityReport::new("qbinomial_det", params, lhs, rhs, start))
}

/// Schur sum with `k` of the `x` variables removed:
/// `Σ_{λ ⊆ M^{N-k}} S_λ(x_1..x_{N-k}) S_λ(y_1..y_N)` against
/// `Π x_l^{-k} det(M̃) / (V_{N-k}(x) V_N(y))`, where the first `N-k` rows of
/// `M̃` are `Σ_{s<M+N} (x_l y_j)^s` and row `l > N-k` is `y_j^{N-l}`.
pub fn verify_deviation_binet_cauchy(
    n: usize,
    m: usize,
    k: usize,
    a: &GeometricPoint,
    b: &GeometricPoint,
) -> Result<IdentityReport, IdentityError> {
    let rows =
        n.checked_sub(k).ok_or_else(|| IdentityError::InvalidParameters(format!("deviation {k} exceeds N = {n}")))?;
    check_point("a", a, rows)?;
    check_point("b", b, n)?;
    let start = Instant::now();
    let lhs = schur_pair_sum(rows, m, a, b)?;
    let (ae, be) = (a.exponents(), b.exponents());
    let p = (m + n) as i64;
    let mat = PolyMatrix::from_fn(n, n, |l, j| {
        if l < rows {
            geometric_sum(ae[l] + be[j], p)
        } else {
            LaurentPoly::q_pow(be[j] * (n - 1 - l) as i64)
        }
    });
    let den = alternant_denominator(ae) * alternant_denominator(be);
    let shift = -(k as i64) * ae.iter().sum::<i64>();
    let rhs = mat.det().shift(shift).exact_div(&den).map_err(|e| IdentityError::DegeneratePoint(e.to_string()))?;
    let params = json!({"N": n, "M": m, "k": k, "a": ae, "b": be});
    Ok(IdentityReport::new("deviation_binet_cauchy", params, lhs, rhs, start))
}

/// All the generating-function forms for watermelons with deviation `k`.
pub fn verify_watermelon_suite(n: usize, m: usize, k: usize) -> Result<Vec<IdentityReport>, IdentityError> {
    let l =
        n.checked_sub(k).ok_or_else(|| IdentityError::InvalidParameters(format!("deviation {k} exceeds N = {n}")))?;
    let params = || json!({"N": n, "M": m, "k": k, "L": l});
    let mut out = Vec::new();

    let start = Instant::now();
    let enumerated = watermelon_genfunc(n, m, k)?;
    out.push(IdentityReport::new(
        "watermelon_enumeration_vs_schur_sum",
        params(),
        enumerated.clone(),
        schur_sum_genfunc(n, m, k)?,
        start,
    ));

    let start = Instant::now();
    let product = closed_genfunc(n, l, m);
    out.push(IdentityReport::new(
        "watermelon_enumeration_vs_product",
        params(),
        enumerated.clone(),
        product.clone(),
        start,
    ));

    for (name, form) in [
        ("watermelon_product_vs_binomial_det", DetForm::Binomial),
        ("watermelon_product_vs_complete_det", DetForm::Complete),
    ] {
        let start = Instant::now();
        out.push(IdentityReport::new(name, params(), product.clone(), genfunc_det_forms(n, l, m, form), start));
    }

    let start = Instant::now();
    let mut p = params();
    p["offset_formula"] = json!(volume_offset(n, l));
    match horizontal_offset(n, m, k) {
        Ok(offset) => {
            p["offset"] = json!(offset);
            p["offset_constant"] = json!(true);
            let rhs = schur_specialization_genfunc(n, l, m, offset)?;
            out.push(IdentityReport::new("watermelon_schur_specialization", p, enumerated, rhs, start));
        }
        Err(PathsError::NonConstantOffset { first, other }) => {
            p["offset"] = json!([first, other]);
            p["offset_constant"] = json!(false);
            out.push(IdentityReport::with_verdict(
                "watermelon_schur_specialization",
                p,
                enumerated,
                LaurentPoly::zero(),
                false,
                start,
            ));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

/// The number of watermelons: product formula against both binomial
/// determinants and the generating function at `q = 1`.
pub fn verify_counts(n: usize, l: usize, m: usize) -> Result<Vec<IdentityReport>, IdentityError> {
    let k = n.checked_sub(l).ok_or_else(|| IdentityError::InvalidParameters(format!("L = {l} exceeds N = {n}")))?;
    let start = Instant::now();
    let product = constant(count_deviation(n, l, m));
    let params = || json!({"N": n, "L": l, "M": m});
    let mut out = vec![IdentityReport::new(
        "count_product_vs_binomial_det",
        params(),
        product.clone(),
        constant(count_deviation_det(n, l, m, DetForm::Binomial)),
        start,
    )];
    let start = Instant::now();
    out.push(IdentityReport::new(
        "count_product_vs_complete_det",
        params(),
        product.clone(),
        constant(count_deviation_det(n, l, m, DetForm::Complete)),
        start,
    ));
    let start = Instant::now();
    out.push(IdentityReport::new(
        "count_product_vs_genfunc_at_one",
        params(),
        product,
        constant(watermelon_genfunc(n, m, k)?.eval_at_one()),
        start,
    ));
    Ok(out)
}

/// Binomial determinant against the number of C-nests of shape `λ`; the
/// Schur polynomial at `(1, ..., 1)` is recorded in the parameters and must
/// agree as well for the report to pass.
pub fn verify_gessel_viennot(lambda: &Partition, n: usize) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let det = gv_count(lambda, n)?;
    let nests = BigInt::from(count_c_nests(lambda, n)?);
    // S_λ(1, ..., 1) is the principal specialization at q = 1
    let at_one = bialternant(lambda, &GeometricPoint::principal(n))?.eval_at_one();
    let b_nests = count_b_nests(lambda, n, lambda.part(0))?;
    let params = json!({
        "lambda": lambda.trimmed(),
        "N": n,
        "schur_at_one": at_one.to_string(),
        "b_nests": b_nests,
    });
    let equal = det == nests && nests == at_one;
    Ok(IdentityReport::with_verdict("gessel_viennot", params, constant(det), constant(nests), equal, start))
}

/// Plane-partition enumeration against watermelon enumeration with
/// deviation `N - L`.
pub fn verify_zq_equals_w(n: usize, l: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    let k = n.checked_sub(l).ok_or_else(|| IdentityError::InvalidParameters(format!("L = {l} exceeds N = {n}")))?;
    let start = Instant::now();
    let lhs = zq(n, l, m);
    let rhs = watermelon_genfunc(n, m, k)?;
    let params = json!({"N": n, "L": l, "M": m, "macmahon_equal": lhs == macmahon_product(n, l, m)});
    Ok(IdentityReport::new("zq_equals_w", params, lhs, rhs, start))
}

/// Runs the gradient bijection over the whole box: the report compares the
/// volume generating functions of the box and of the images, and passes
/// only if the map is also injective, round-trips, and hits every
/// watermelon.
pub fn verify_gradient_bijection(n: usize, l: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    let k = n.checked_sub(l).ok_or_else(|| IdentityError::InvalidParameters(format!("L = {l} exceeds N = {n}")))?;
    let start = Instant::now();
    let mut images = std::collections::HashSet::new();
    let mut round_trip = true;
    let mut lhs = LaurentPoly::zero();
    let mut rhs = LaurentPoly::zero();
    for pp in enumerate_box(n, l, m) {
        let w = gradient_bijection(&pp, n, l, m)?;
        round_trip &= gradient_bijection_inverse(&w) == pp;
        lhs = lhs + LaurentPoly::q_pow(pp.volume() as i64);
        rhs = rhs + LaurentPoly::q_pow(w.volume());
        images.insert(w);
    }
    let image_size = images.len();
    let watermelons = enumerate_watermelons(n, m, k)?.count();
    let box_size = enumerate_box(n, l, m).count();
    let injective = image_size == box_size;
    let surjective = image_size == watermelons;
    let params = json!({
        "N": n, "L": l, "M": m,
        "box_size": box_size,
        "image_size": image_size,
        "injective": injective,
        "surjective": surjective,
        "round_trip": round_trip,
    });
    let equal = lhs == rhs && injective && surjective && round_trip;
    Ok(IdentityReport::with_verdict("gradient_bijection", params, lhs, rhs, equal, start))
}

/// Fixed generic exponent tuples for Binet–Cauchy checks with `N` variables:
/// distinct, not in arithmetic progression, some negative, and with
/// `a_k + b_j != 0` throughout.
pub fn golden_points(n: usize) -> Vec<(GeometricPoint, GeometricPoint)> {
    let table: &[(&[i64], &[i64])] = match n {
        1 => &[(&[1], &[1]), (&[0], &[3]), (&[-2], &[5])],
        2 => &[(&[0, 1], &[1, 2]), (&[0, 3], &[1, 5]), (&[-1, 2], &[4, 3])],
        3 => &[(&[0, 2, 5], &[1, 3, 4]), (&[-2, 1, 4], &[3, 5, 7]), (&[0, 1, 3], &[2, 6, 1])],
        4 => &[(&[0, 1, 3, 7], &[1, 2, 4, 5]), (&[-1, 2, 3, 6], &[2, 4, 5, 9])],
        _ => &[],
    };
    table.iter().map(|(a, b)| (GeometricPoint::new(a.to_vec()), GeometricPoint::new(b.to_vec()))).collect()
}

#[cfg(test)]
mod tests;
