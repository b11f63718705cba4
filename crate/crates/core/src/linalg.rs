//! Small dense helpers shared by the analysis modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const EIG_EPS: f64 = 1e-15;
const EIG_MAX_ITER: usize = 10_000;

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted in
/// descending order and eigenvectors as matching columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

/// `theta` is carried only for the error diagnostic.
pub fn hermitian_eigen(m: &CMatrix, theta: f64) -> Result<HermitianEigen> {
    let n = m.nrows();
    let eig = nalgebra::SymmetricEigen::try_new(m.clone(), EIG_EPS, EIG_MAX_ITER)
        .ok_or(Error::Eigensolver { theta })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(m: &CMatrix, theta: f64) -> Result<Vec<f64>> {
    let eig = nalgebra::SymmetricEigen::try_new(m.clone(), EIG_EPS, EIG_MAX_ITER)
        .ok_or(Error::Eigensolver { theta })?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Spectral norm of a Hermitian matrix.
pub fn hermitian_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    match hermitian_eigenvalues(m, 0.0) {
        Ok(v) => v.iter().fold(0.0_f64, |acc, x| acc.max(x.abs())),
        Err(_) => m.norm(),
    }
}

/// `<M v, v>` for a (not necessarily unit) vector.
pub fn quadratic_form(m: &CMatrix, v: &CVector) -> Complex64 {
    v.dotc(&(m * v))
}

/// Modified Gram-Schmidt applied twice. Returns `None` if a vector collapses.
pub fn orthonormalize(vectors: &[CVector]) -> Option<Vec<CVector>> {
    let mut out: Vec<CVector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let proj = q.dotc(&w);
                w -= q * proj;
            }
        }
        let norm = w.norm();
        if norm < 1e-12 {
            return None;
        }
        out.push(w / Complex64::new(norm, 0.0));
    }
    Some(out)
}

/// Orthonormal basis of `{ P a : C^* P a = 0 }`, i.e. the part of the column
/// space of `basis` orthogonal to every vector in `chosen`. Singular values
/// below `tol` count as zero.
pub fn subspace_orthogonal_to(basis: &CMatrix, chosen: &[CVector], tol: f64) -> Vec<CVector> {
    let m = basis.ncols();
    if chosen.is_empty() {
        return (0..m).map(|j| basis.column(j).into_owned()).collect();
    }
    let mut g = CMatrix::zeros(chosen.len().max(m), m);
    for (i, c) in chosen.iter().enumerate() {
        for j in 0..m {
            g[(i, j)] = c.dotc(&basis.column(j).into_owned());
        }
    }
    // Null space of g from its right singular vectors; g has at least m rows
    // so v_t is square.
    let svd = g.svd(false, true);
    let Some(v_t) = svd.v_t else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for j in 0..m {
        if svd.singular_values[j] <= tol {
            let coeffs: CVector = v_t.row(j).adjoint();
            out.push(basis * coeffs);
        }
    }
    orthonormalize(&out).unwrap_or_default()
}
