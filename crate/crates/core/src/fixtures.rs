//! Reference matrices with known numerical-range structure.

use num_complex::Complex64;

use crate::linalg::CMatrix;
use crate::matrix::ComplexMatrix;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rows(entries: [[Complex64; 4]; 4]) -> ComplexMatrix {
    let v: Vec<Vec<Complex64>> = entries.iter().map(|r| r.to_vec()).collect();
    ComplexMatrix::from_rows(&v).expect("fixture is square and finite")
}

/// `[[0,1],[0,0]]`: numerical range is the disk of radius 1/2.
pub fn jordan2() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap()
}

/// Nilpotent 4x4 with superdiagonal `(1, 1/2, 2)`. Base curve has complex
/// singular points at `(±i : 1 : 0)` and no real singularities; `k = 2`.
pub fn complex_cusp() -> ComplexMatrix {
    let z = c(0.0, 0.0);
    rows([
        [z, c(1.0, 0.0), z, z],
        [z, z, c(0.5, 0.0), z],
        [z, z, z, c(2.0, 0.0)],
        [z, z, z, z],
    ])
}

/// Strictly upper triangular 4x4 whose numerical range has two flat
/// portions at angles not congruent mod pi; `k = 3`.
pub fn two_flat_portions() -> ComplexMatrix {
    let z = c(0.0, 0.0);
    rows([
        [z, c(0.0, 4.0 / 3.0), c(0.0, 0.5), c(0.0, 8.0 / 3.0)],
        [z, z, c(0.0, 8.0 / 3.0), z],
        [z, z, z, c(0.0, 4.0 / 3.0)],
        [z, z, z, z],
    ])
}

/// Exact coefficients of the base polynomial of [`two_flat_portions`] as
/// `((a, b, c), value)` for the monomial `x^a y^b t^c`; all others vanish.
pub fn two_flat_portions_base_polynomial() -> Vec<((usize, usize, usize), f64)> {
    vec![
        ((0, 0, 4), 1.0),
        ((2, 0, 2), -649.0 / 144.0),
        ((4, 0, 0), 400.0 / 81.0),
        ((2, 1, 1), 8.0 / 9.0),
        ((0, 2, 2), -649.0 / 144.0),
        ((2, 2, 0), 544.0 / 81.0),
        ((0, 3, 1), 8.0 / 9.0),
        ((0, 4, 0), 16.0 / 9.0),
    ]
}

/// 4x4 with a base curve free of singularities but `k = 3`; the first three
/// standard basis vectors map to boundary points `19i/54`, `8/27`, `1/2 + i/2`.
pub fn no_singularity() -> ComplexMatrix {
    let z = c(0.0, 0.0);
    rows([
        [c(0.0, 19.0 / 54.0), z, z, c(0.0, 7.0 / 54.0)],
        [z, c(8.0 / 27.0, 0.0), z, c(5.0 / 54.0, 0.0)],
        [z, z, c(0.5, 0.5), c(1.0 / 18.0, -1.0 / 18.0)],
        [c(0.0, 7.0 / 54.0), c(5.0 / 54.0, 0.0), c(1.0 / 18.0, -1.0 / 18.0), c(5.0 / 27.0, 10.0 / 27.0)],
    ])
}

/// Boundary images of `e1, e2, e3` for [`no_singularity`] and the support
/// angles (convention `H(theta) = Re(e^{-i theta} A)`) at which they are attained.
pub fn no_singularity_boundary_images() -> [(f64, Complex64); 3] {
    use std::f64::consts::PI;
    [
        (PI, c(0.0, 19.0 / 54.0)),
        (1.5 * PI, c(8.0 / 27.0, 0.0)),
        (0.25 * PI, c(0.5, 0.5)),
    ]
}

/// A fixed Hermitian matrix with no special structure.
pub fn generic_hermitian4() -> CMatrix {
    let entries = [
        [c(0.31, 0.0), c(0.72, 0.18), c(-0.45, 0.39), c(0.11, -0.83)],
        [c(0.0, 0.0), c(-0.57, 0.0), c(0.26, -0.61), c(0.94, 0.07)],
        [c(0.0, 0.0), c(0.0, 0.0), c(0.13, 0.0), c(-0.38, 0.52)],
        [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.68, 0.0)],
    ];
    let mut h = CMatrix::zeros(4, 4);
    for r in 0..4 {
        for col in r..4 {
            h[(r, col)] = entries[r][col];
            h[(col, r)] = entries[r][col].conj();
        }
    }
    h
}

/// `diag(1,1,-1,-1) + i H2` with `H2` generic: the base curve has two order-2
/// points on the line `y = 0`, collinear with the origin; `k = 4`.
pub fn collinear_pair() -> ComplexMatrix {
    collinear_pair_with(&generic_hermitian4())
}

pub fn collinear_pair_with(h2: &CMatrix) -> ComplexMatrix {
    let mut h1 = CMatrix::zeros(4, 4);
    for (k, v) in [1.0, 1.0, -1.0, -1.0].into_iter().enumerate() {
        h1[(k, k)] = c(v, 0.0);
    }
    ComplexMatrix::from_hermitian_parts(&h1, h2).unwrap()
}

/// All named fixtures, for sweeps.
pub fn all() -> Vec<(&'static str, ComplexMatrix)> {
    vec![
        ("jordan2", jordan2()),
        ("complex-cusp", complex_cusp()),
        ("two-flat-portions", two_flat_portions()),
        ("no-singularity", no_singularity()),
        ("collinear-pair", collinear_pair()),
    ]
}
