use std::ffi::{CStr, CString};
use std::ptr;

use gauwu_core::fixtures;
use gauwu_ffi::*;

fn handle(a: &gauwu_core::ComplexMatrix) -> *mut GwMatrix {
    let n = a.n();
    let mut re = Vec::with_capacity(n * n);
    let mut im = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            re.push(a.get(r, c).re);
            im.push(a.get(r, c).im);
        }
    }
    let mut m = ptr::null_mut();
    let s = unsafe { gw_matrix_new(n, re.as_ptr(), im.as_ptr(), &mut m) };
    assert_eq!(s, GwStatus::Ok);
    m
}

#[test]
fn classify_two_flat_through_c_abi() {
    let m = handle(&fixtures::two_flat_portions());
    unsafe {
        assert_eq!(gw_matrix_dim(m), 4);
        let mut dim = 0;
        assert_eq!(gw_commutant_dimension(m, &mut dim), GwStatus::Ok);
        assert_eq!(dim, 1);
        let mut r = ptr::null_mut();
        assert_eq!(gw_classify(m, 0, &mut r), GwStatus::Ok);
        assert_eq!(gw_result_lower(r), 3);
        assert_eq!(gw_result_upper(r), 3);
        assert_eq!(gw_result_exact(r), 3);
        let count = gw_result_witness_count(r);
        assert!(count >= 3);
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(gw_result_witness_image(r, 0, &mut re, &mut im), GwStatus::Ok);
        assert!(re.is_finite() && im.is_finite());
        assert_eq!(gw_result_witness_image(r, count, &mut re, &mut im), GwStatus::OutOfRange);
        assert!(!gw_last_error().is_null());
        gw_result_free(r);
        gw_matrix_free(m);
    }
}

#[test]
fn base_polynomial_coefficients() {
    let m = handle(&fixtures::two_flat_portions());
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(gw_base_polynomial(m, &mut p), GwStatus::Ok);
        assert_eq!(gw_poly_degree(p), 4);
        for &((a, b, c), want) in &fixtures::two_flat_portions_base_polynomial() {
            let mut got = f64::NAN;
            assert_eq!(gw_poly_coefficient(p, a, b, c, &mut got), GwStatus::Ok);
            assert!((got - want).abs() <= 1e-8 * want.abs().max(1.0), "{a} {b} {c}: {got} vs {want}");
        }
        let mut x = 0.0;
        assert_eq!(gw_poly_coefficient(p, 1, 1, 1, &mut x), GwStatus::OutOfRange);
        gw_poly_free(p);
        gw_matrix_free(m);
    }
}

#[test]
fn real_matrix_with_null_imaginary_part() {
    let re = [0.0, 1.0, 0.0, 0.0];
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(gw_matrix_new(2, re.as_ptr(), ptr::null(), &mut m), GwStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(gw_classify(m, 64, &mut r), GwStatus::Ok);
        assert_eq!(gw_result_exact(r), 2);
        gw_result_free(r);
        gw_matrix_free(m);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(gw_matrix_new(2, ptr::null(), ptr::null(), &mut m), GwStatus::NullPointer);
        let bad = [f64::NAN, 0.0, 0.0, 0.0];
        assert_eq!(gw_matrix_new(2, bad.as_ptr(), ptr::null(), &mut m), GwStatus::Parse);
        let msg = CStr::from_ptr(gw_last_error()).to_str().unwrap();
        assert!(msg.contains("not finite"), "{msg}");

        let one = [1.0];
        assert_eq!(gw_matrix_new(1, one.as_ptr(), ptr::null(), &mut m), GwStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(gw_classify(m, 0, &mut r), GwStatus::Hypothesis);
        assert!(r.is_null());
        gw_matrix_free(m);

        let mut dim = 0;
        assert_eq!(gw_commutant_dimension(ptr::null(), &mut dim), GwStatus::NullPointer);
        assert_eq!(gw_matrix_dim(ptr::null()), 0);
        assert_eq!(gw_result_exact(ptr::null()), 0);

        let missing = CString::new("/nonexistent/matrix.txt").unwrap();
        assert_eq!(gw_matrix_from_file(missing.as_ptr(), &mut m), GwStatus::Io);

        let mut k = 0;
        assert_eq!(gw_toeplitz_k(5, 1.0, 0.0, 2.0, 0.0, &mut k), GwStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(gw_toeplitz_k(5, 1.0, 0.0, 0.0, 1.0, &mut k), GwStatus::Hypothesis);
        assert!(!gw_last_error().is_null());
        assert_eq!(gw_toeplitz_k(8, 1.0, 0.0, 3.0, 0.0, &mut k), GwStatus::Ok);
        assert!(gw_last_error().is_null());
        assert_eq!(k, 4);
    }
}

#[test]
fn matrix_from_file() {
    let dir = std::env::temp_dir().join(format!("gauwu-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("j.txt");
    std::fs::write(&path, "0 1\n0 0\n").unwrap();
    let c = CString::new(path.to_str().unwrap()).unwrap();
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(gw_matrix_from_file(c.as_ptr(), &mut m), GwStatus::Ok);
        assert_eq!(gw_matrix_dim(m), 2);
        gw_matrix_free(m);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn header_declares_every_entry_point() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/gauwu.h")).unwrap();
    for name in [
        "gw_matrix_new",
        "gw_matrix_from_file",
        "gw_matrix_free",
        "gw_classify",
        "gw_result_witness_image",
        "gw_base_polynomial",
        "gw_poly_coefficient",
        "gw_toeplitz_k",
        "gw_last_error",
        "typedef struct GwMatrix GwMatrix",
        "GW_STATUS_HYPOTHESIS = 4",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}
