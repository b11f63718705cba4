//! Everything derived from one matrix under one configuration, computed once
//! and shared by the classifier, the reports and the CLI.

use num_complex::Complex64;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::geometry::{collinear_groups, detect_seeds, real_singularities, RealCurvePoint, SeedRecord, SupportFunction};
use crate::linalg::CMatrix;
use crate::matrix::{commutant_dimension_of, ComplexMatrix, HermitianPencil};
use crate::poly::{compute_base_polynomial, BasePolynomial};
use crate::spectral::{scan, two_eigenvalue_angles_from, AngleSet, ScanResult};

const DEGENERATE_REL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub matrix: ComplexMatrix,
    pub pencil: HermitianPencil,
    pub config: RunConfig,
    pub scale: f64,
    pub scan: ScanResult,
    pub poly: BasePolynomial,
    pub support: SupportFunction,
    pub seeds: Vec<SeedRecord>,
    pub singularities: Vec<RealCurvePoint>,
    pub collinear: Vec<Vec<RealCurvePoint>>,
    pub two_eigenvalue_angles: AngleSet,
    pub commutant_dimension: usize,
    /// `W(A)` is a segment or a point.
    pub degenerate: bool,
    pub normal: bool,
}

impl Analysis {
    pub fn new(a: &ComplexMatrix, config: &RunConfig) -> Result<Self> {
        config.validate()?;
        let n = a.n();
        if n < 2 {
            return Err(Error::Dimension { n, min: 2 });
        }
        let pencil = a.hermitian_parts();
        let raw_scale = pencil.scale();
        // A zero pencil still needs a positive clustering tolerance.
        let scale = if raw_scale > 0.0 { raw_scale } else { 1.0 };
        let scan = scan(&pencil, config.grid_size, config.tol_cluster * scale)?;
        let poly = compute_base_polynomial(&pencil)?;
        let support = SupportFunction::from_scan(&pencil, &scan);
        let seeds = detect_seeds(&pencil, &scan, config.tol_seed)?;
        let singularities = real_singularities(&scan, &poly, config.tol_order)?;
        let collinear = collinear_groups(&singularities);
        let two_eigenvalue_angles = two_eigenvalue_angles_from(&scan);
        Ok(Self {
            matrix: a.clone(),
            commutant_dimension: commutant_dimension_of(&pencil),
            degenerate: is_degenerate(&pencil, scale),
            normal: is_normal(a, scale),
            pencil,
            config: config.clone(),
            scale,
            scan,
            poly,
            support,
            seeds,
            singularities,
            collinear,
            two_eigenvalue_angles,
        })
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn irreducible(&self) -> bool {
        self.commutant_dimension == 1
    }

    pub fn boundary_tolerance(&self) -> f64 {
        self.config.tol_boundary * self.scale
    }
}

/// `W(A)` lies on a line iff `H1`, `H2` and `I` are linearly dependent.
fn is_degenerate(p: &HermitianPencil, scale: f64) -> bool {
    let n = p.n();
    let mut m = CMatrix::zeros(n * n, 3);
    for c in 0..n {
        for r in 0..n {
            m[(c * n + r, 0)] = p.h1[(r, c)];
            m[(c * n + r, 1)] = p.h2[(r, c)];
            m[(c * n + r, 2)] = if r == c { Complex64::new(scale / (n as f64).sqrt(), 0.0) } else { Complex64::new(0.0, 0.0) };
        }
    }
    let sv = m.singular_values();
    sv.min() <= DEGENERATE_REL * scale
}

fn is_normal(a: &ComplexMatrix, scale: f64) -> bool {
    let m = a.as_matrix();
    let comm = m * m.adjoint() - m.adjoint() * m;
    comm.norm() <= DEGENERATE_REL * scale * scale
}
