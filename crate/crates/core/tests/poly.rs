mod common;

use gauwu_core::linalg::CMatrix;
use gauwu_core::poly::ProjectivePoint;
use gauwu_core::spectral::spectrum_slice;
use gauwu_core::{compute_base_polynomial, fixtures, hermitian_parts, BasePolynomial, HermitianPencil};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel_coeff_distance(a: &BasePolynomial, b: &BasePolynomial) -> f64 {
    a.relative_distance(b).expect("same degree")
}

#[test]
fn homogeneity() {
    let mut g = common::rng(21);
    for (name, a) in fixtures::all() {
        let f = compute_base_polynomial(&hermitian_parts(&a)).unwrap();
        let n = f.degree() as i32;
        for _ in 0..100 {
            let mut z = || c(g.gen_range(-2.0..2.0), g.gen_range(-2.0..2.0));
            let (x, y, t, s) = (z(), z(), z(), z());
            let lhs = f.evaluate_xyz(s * x, s * y, s * t);
            let rhs = s.powi(n) * f.evaluate_xyz(x, y, t);
            let mag = s.norm().powi(n) * (x.norm() + y.norm() + t.norm()).powi(n) * f.max_abs_coefficient();
            assert!((lhs - rhs).norm() <= 1e-8 * mag.max(1e-300), "{name}");
        }
    }
}

#[test]
fn real_coefficients_on_random_matrices() {
    let mut g = common::rng(22);
    for k in 0..20 {
        let n = 2 + k % 5;
        let a = common::random_matrix(&mut g, n);
        let f = compute_base_polynomial(&hermitian_parts(&a)).unwrap();
        assert!(f.imag_residue() <= 1e-8 * f.max_abs_coefficient(), "matrix {k}: residue {}", f.imag_residue());
        assert_eq!(f.coefficient(0, 0, n), 1.0);
    }
}

/// Roots of a real polynomial through the eigenvalues of its companion matrix.
fn roots(coeffs: &[f64]) -> Vec<f64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let comp = DMatrix::from_fn(d, d, |i, j| {
        if i == 0 {
            -coeffs[d - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut r: Vec<f64> = comp.complex_eigenvalues().iter().map(|z| z.re).collect();
    r.sort_by(f64::total_cmp);
    r
}

#[test]
fn restricted_roots_are_negated_eigenvalues() {
    for (name, a) in fixtures::all() {
        let p = hermitian_parts(&a);
        let f = compute_base_polynomial(&p).unwrap();
        for k in 0..16 {
            // Offset keeps clear of exactly repeated roots, where companion
            // eigenvalues lose half their digits.
            let theta = (k as f64 + 0.37) * TAU / 16.0;
            let s = spectrum_slice(&p, theta, 1e-7 * p.scale()).unwrap();
            let r = roots(f.restrict_to_angle(theta).coefficients());
            let mut want: Vec<f64> = s.eigenvalues.iter().map(|l| -l).collect();
            want.sort_by(f64::total_cmp);
            for (x, y) in r.iter().zip(&want) {
                assert!((x - y).abs() <= 1e-7, "{name} theta {theta}: {x} vs {y}");
            }
        }
    }
}

#[test]
fn rotation_equivariance() {
    let mut g = common::rng(23);
    for k in 0..20 {
        let n = 3 + k % 2;
        let a = common::random_matrix(&mut g, n);
        let theta = g.gen_range(0.0..TAU);
        let f = compute_base_polynomial(&hermitian_parts(&a)).unwrap();
        let fr = compute_base_polynomial(&hermitian_parts(&a.rotated(theta))).unwrap();
        let d = rel_coeff_distance(&f.rotate(theta), &fr);
        assert!(d <= 1e-8, "matrix {k}: {d}");
    }
}

/// Pencil whose `H1` has eigenvalue `lambda` with multiplicity `m` and a
/// generic `H2`, both in a random basis.
fn pencil_with_multiplicity(seed: u64, n: usize, m: usize, lambda: f64) -> HermitianPencil {
    let mut g = common::rng(seed);
    let u = common::haar_unitary(&mut g, n);
    let mut d = CMatrix::zeros(n, n);
    for k in 0..n {
        d[(k, k)] = c(if k < m { lambda } else { lambda - 1.0 - k as f64 }, 0.0);
    }
    let h1 = &u * d * u.adjoint();
    let h2 = common::random_hermitian(&mut g, n);
    HermitianPencil { h1, h2 }
}

#[test]
fn order_equals_multiplicity() {
    for (m, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
        for seed in 0..3 {
            let lambda = 0.75;
            let p = pencil_with_multiplicity(400 + seed, n, m, lambda);
            let f = compute_base_polynomial(&p).unwrap();
            let pt = ProjectivePoint::real(1.0, 0.0, -lambda);
            assert_eq!(f.order_at_point(&pt, 1e-6), m, "m = {m}, n = {n}, seed {seed}");
            // A simple eigenvalue gives a smooth point.
            let simple = ProjectivePoint::real(1.0, 0.0, -(lambda - 1.0 - m as f64));
            assert_eq!(f.order_at_point(&simple, 1e-6), 1);
        }
    }
}

#[test]
fn export_round_trip() {
    let f = compute_base_polynomial(&hermitian_parts(&fixtures::no_singularity())).unwrap();
    let g = BasePolynomial::from_export(&f.to_export()).unwrap();
    for (a, b, t, v) in f.terms() {
        assert_eq!(g.coefficient(a, b, t), v);
    }
}

#[test]
fn jordan_block_conic() {
    let f = compute_base_polynomial(&hermitian_parts(&fixtures::jordan2())).unwrap();
    let want = BasePolynomial::from_terms(2, &[((0, 0, 2), 1.0), ((2, 0, 0), -0.25), ((0, 2, 0), -0.25)]);
    assert!(f.equal_up_to_tol(&want, 1e-12));
    assert!(f.rotate(1.234).equal_up_to_tol(&f, 1e-12));
}
