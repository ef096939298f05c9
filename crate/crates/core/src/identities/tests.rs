use super::*;

fn pt(v: &[i64]) -> GeometricPoint {
    GeometricPoint::new(v.to_vec())
}

#[test]
fn binet_cauchy_single_variable() {
    let r = verify_binet_cauchy(1, 1, &pt(&[1]), &pt(&[1])).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs, LaurentPoly::from_coeffs(0, &[1, 0, 1]));
}

#[test]
fn binet_cauchy_generic() {
    for (n, m, a, b) in [(2, 2, [0, 1], [1, 2]), (2, 1, [0, 3], [1, 5]), (2, 3, [-1, 2], [4, 3])] {
        let r = verify_binet_cauchy(n, m, &pt(&a), &pt(&b)).unwrap();
        assert!(r.equal, "{r:?}");
    }
}

#[test]
fn binet_cauchy_rejects_degenerate_points() {
    assert!(matches!(verify_binet_cauchy(2, 1, &pt(&[0, 0]), &pt(&[1, 2])), Err(IdentityError::DegeneratePoint(_))));
    assert!(matches!(verify_binet_cauchy(2, 1, &pt(&[0, 1]), &pt(&[-1, 2])), Err(IdentityError::DegeneratePoint(_))));
    assert!(matches!(verify_binet_cauchy(2, 1, &pt(&[0]), &pt(&[1, 2])), Err(IdentityError::DegeneratePoint(_))));
}

#[test]
fn q_binet_cauchy_and_kuperberg() {
    let r = verify_q_binet_cauchy(1, 1).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs, LaurentPoly::from_coeffs(0, &[1, 1]));
    for (n, m) in [(2, 2), (3, 1)] {
        assert!(verify_q_binet_cauchy(n, m).unwrap().equal);
    }
    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        let r = verify_kuperberg(n, m).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!(r.params["rhs_equals_macmahon"], json!(true));
    }
    assert_eq!(verify_kuperberg(2, 2).unwrap().rhs, macmahon_product(2, 2, 2));
}

#[test]
fn qbinomial_det_small() {
    let r = verify_qbinomial_det(1, 1).unwrap();
    assert!(r.equal);
    assert_eq!(r.rhs, LaurentPoly::from_coeffs(0, &[1, 1]));
    for (n, m) in [(2, 2), (1, 3)] {
        let r = verify_qbinomial_det(n, m).unwrap();
        assert!(r.equal, "{r:?}");
    }
}

#[test]
fn deviation_cases() {
    let r = verify_deviation_binet_cauchy(2, 2, 0, &pt(&[0, 1]), &pt(&[1, 2])).unwrap();
    assert_eq!(r.lhs, verify_binet_cauchy(2, 2, &pt(&[0, 1]), &pt(&[1, 2])).unwrap().lhs);
    assert!(r.equal);
    assert!(verify_deviation_binet_cauchy(2, 2, 1, &pt(&[0]), &pt(&[1, 2])).unwrap().equal);
    assert!(verify_deviation_binet_cauchy(3, 1, 2, &pt(&[0]), &pt(&[1, 2, 3])).unwrap().equal);
    assert!(verify_deviation_binet_cauchy(3, 2, 1, &pt(&[-2, 3]), &pt(&[1, 0, 4])).unwrap().equal);
}

#[test]
fn watermelon_suite_small() {
    for (n, m, k) in [(1, 1, 0), (2, 2, 0), (3, 2, 1)] {
        let reports = verify_watermelon_suite(n, m, k).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert!(r.equal, "{r:?}");
        }
    }
    let r = verify_watermelon_suite(1, 1, 0).unwrap();
    assert_eq!(r[0].lhs, LaurentPoly::from_coeffs(0, &[1, 1]));
    assert_eq!(verify_watermelon_suite(2, 2, 0).unwrap()[0].lhs.eval_at_one(), BigInt::from(20));
}

#[test]
fn counts_and_gv() {
    for r in verify_counts(2, 2, 2).unwrap() {
        assert!(r.equal);
        assert_eq!(r.lhs, LaurentPoly::constant(BigInt::from(20)));
    }
    for (lam, n, count) in [(vec![1], 2, 2), (vec![2, 1], 3, 8), (vec![2, 2], 2, 1)] {
        let r = verify_gessel_viennot(&Partition::new(lam).unwrap(), n).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, LaurentPoly::constant(BigInt::from(count)));
    }
}

#[test]
fn zq_and_bijection() {
    let r = verify_zq_equals_w(1, 1, 1).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs, LaurentPoly::from_coeffs(0, &[1, 1]));
    let r = verify_zq_equals_w(2, 2, 2).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs.degree(), Some(8));
    assert!(verify_zq_equals_w(3, 2, 2).unwrap().equal);
    assert!(verify_zq_equals_w(2, 3, 2).is_err());
    let r = verify_gradient_bijection(2, 2, 2).unwrap();
    assert!(r.equal);
    assert_eq!(r.params["box_size"], json!(20));
}

#[test]
fn report_json_lines() {
    let r = verify_q_binet_cauchy(1, 1).unwrap();
    let line = r.to_json_line();
    assert!(!line.contains('\n'));
    let back: IdentityReport = serde_json::from_str(&line).unwrap();
    assert_eq!(back.lhs, r.lhs);
    assert_eq!(back.name, "q_binet_cauchy");
    let again = verify_q_binet_cauchy(1, 1).unwrap();
    assert_eq!(serde_json::to_string(&again.lhs).unwrap(), serde_json::to_string(&r.lhs).unwrap());
}

#[test]
fn grid_and_runner() {
    let empty = GridSpec { max_n: 0, ..GridSpec::default() };
    assert!(empty.cases().is_empty());
    let grid = GridSpec { max_n: 2, max_m: 2, ..GridSpec::default() };
    let cases = grid.cases();
    let serial: Vec<_> = cases.iter().map(run_case).collect();
    let parallel = run_cases(&cases, 3);
    assert_eq!(serial.len(), parallel.len());
    for (s, p) in serial.iter().zip(&parallel) {
        let (s, p) = (s.as_ref().unwrap(), p.as_ref().unwrap());
        assert_eq!(s.len(), p.len());
        for (x, y) in s.iter().zip(p) {
            assert_eq!((&x.name, &x.params, &x.lhs, &x.rhs), (&y.name, &y.params, &y.lhs, &y.rhs));
            assert!(x.equal, "{x:?}");
        }
    }
    let gv = GridSpec { suites: vec![Suite::GesselViennot], shapes_in_box: Some((2, 2)), ..GridSpec::default() };
    assert_eq!(gv.cases().len(), 6);
    assert_eq!(Suite::parse_list("all").unwrap().len(), Suite::ALL.len());
    assert_eq!(Suite::parse_list("zq,gv").unwrap(), vec![Suite::GesselViennot, Suite::Zq]);
    assert!(Suite::parse_list("nope").is_err());
}

#[test]
fn fuzz_mode_is_reproducible_and_passes() {
    let a = fuzz_cases(7, 12, 3, 2);
    assert_eq!(a, fuzz_cases(7, 12, 3, 2));
    assert_eq!(a.len(), 12);
    for r in run_cases(&a, 2) {
        for rep in r.unwrap() {
            assert!(rep.equal, "{rep:?}");
        }
    }
}
