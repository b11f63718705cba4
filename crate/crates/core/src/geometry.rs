//! Numerical range boundary, boundary generating curve, seeds and real
//! singular points of the base curve.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, quadratic_form, CVector};
use crate::matrix::{ComplexMatrix, HermitianPencil};
use crate::poly::{BasePolynomial, ProjectivePoint};
use crate::spectral::{golden_min, spectrum_slice, ScanResult, EVENT_DEDUP};

/// Flat portion vs. singular point threshold on the endpoint spread.
pub const SEED_KIND_REL: f64 = 1e-6;
/// Real curve points closer than this in angle are collinear with the origin.
pub const COLLINEAR_TOL: f64 = 1e-8;
const DISTANCE_RESOLUTION: f64 = 1e-11;

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Largest eigenvalue of `H(theta)`: the support function of `W(A)`.
pub fn support_value(p: &HermitianPencil, theta: f64) -> Result<f64> {
    Ok(hermitian_eigenvalues(&p.at(theta), theta)?[0])
}

#[derive(Debug, Clone, Copy)]
pub struct BoundarySample {
    pub theta: f64,
    pub z: Complex64,
    pub support: f64,
}

/// Envelope parametrization `z = e^{i theta} (lambda_max + i lambda_max')`,
/// with the derivative averaged over the top eigenspace when it is repeated.
pub fn boundary_points(a: &ComplexMatrix, grid_size: usize, tol_cluster: f64) -> Result<Vec<BoundarySample>> {
    let p = a.hermitian_parts();
    boundary_points_of(&p, grid_size, tol_cluster)
}

pub fn boundary_points_of(p: &HermitianPencil, grid_size: usize, tol_cluster: f64) -> Result<Vec<BoundarySample>> {
    assert!(grid_size >= 8, "grid_size must be at least 8");
    (0..grid_size)
        .into_par_iter()
        .map(|k| {
            let theta = TAU * k as f64 / grid_size as f64;
            let slice = spectrum_slice(p, theta, tol_cluster)?;
            let top = slice.top();
            let basis = slice.cluster_basis(top);
            let d = basis.adjoint() * p.derivative_at(theta) * &basis;
            let slope = d.trace().re / top.multiplicity as f64;
            let support = slice.eigenvalues[0];
            Ok(BoundarySample { theta, z: cis(theta) * Complex64::new(support, slope), support })
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct CurvePoint {
    pub theta: f64,
    /// Index in the descending spectrum of `H(theta)`.
    pub branch: usize,
    pub z: Complex64,
    /// `lambda_branch(theta)`.
    pub support: f64,
    /// Multiplicity of the eigenvalue cluster containing the branch.
    pub order: usize,
}

/// `<A v, v>` for an eigenvector of every branch of `H(theta)`, `theta` in
/// `[0, pi)`; this sweeps the real affine part of the boundary generating curve.
pub fn curve_points(a: &ComplexMatrix, grid_size: usize, tol_cluster: f64) -> Result<Vec<CurvePoint>> {
    let p = a.hermitian_parts();
    let m = a.as_matrix();
    let per_angle: Vec<Vec<CurvePoint>> = (0..grid_size)
        .into_par_iter()
        .map(|k| {
            let theta = PI * k as f64 / grid_size as f64;
            let slice = spectrum_slice(&p, theta, tol_cluster)?;
            Ok((0..slice.eigenvalues.len())
                .map(|j| {
                    let v: CVector = slice.basis.column(j).into_owned();
                    CurvePoint {
                        theta,
                        branch: j,
                        z: quadratic_form(m, &v),
                        support: slice.eigenvalues[j],
                        order: slice.cluster_of(j).multiplicity,
                    }
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_angle.into_iter().flatten().collect())
}

/// Tabulated support function used as a membership oracle for `W(A)`.
#[derive(Debug, Clone)]
pub struct SupportFunction {
    pencil: HermitianPencil,
    thetas: Vec<f64>,
    values: Vec<f64>,
}

impl SupportFunction {
    pub fn new(p: &HermitianPencil, grid_size: usize) -> Result<Self> {
        let thetas: Vec<f64> = (0..grid_size).map(|k| TAU * k as f64 / grid_size as f64).collect();
        let values = thetas.par_iter().map(|&t| support_value(p, t)).collect::<Result<_>>()?;
        Ok(Self { pencil: p.clone(), thetas, values })
    }

    pub fn from_scan(p: &HermitianPencil, scan: &ScanResult) -> Self {
        Self {
            pencil: p.clone(),
            thetas: scan.slices.iter().map(|s| s.theta).collect(),
            values: scan.slices.iter().map(|s| s.eigenvalues[0]).collect(),
        }
    }

    pub fn value(&self, theta: f64) -> Result<f64> {
        support_value(&self.pencil, theta)
    }

    /// Width of `W(A)` in direction `theta`: `h(theta) + h(theta + pi)`.
    pub fn min_width(&self) -> f64 {
        let g = self.values.len();
        if g.is_multiple_of(2) {
            (0..g / 2).map(|k| self.values[k] + self.values[k + g / 2]).fold(f64::INFINITY, f64::min)
        } else {
            (0..g)
                .map(|k| self.values[k] + self.value(self.thetas[k] + PI).unwrap_or(self.values[k]))
                .fold(f64::INFINITY, f64::min)
        }
    }

    /// `max_theta Re(e^{-i theta} z) - h(theta)`: non-positive inside `W(A)`,
    /// zero on the boundary. Grid maximum followed by golden-section refinement
    /// around the best two grid angles.
    pub fn distance(&self, z: Complex64) -> Result<f64> {
        let g = self.thetas.len();
        let excess = |k: usize| (cis(-self.thetas[k]) * z).re - self.values[k];
        let mut order: Vec<usize> = (0..g).collect();
        order.sort_by(|&i, &j| excess(j).total_cmp(&excess(i)));
        let step = TAU / g as f64;
        let mut best = excess(order[0]);
        for &k in order.iter().take(2) {
            let centre = self.thetas[k];
            let (_, neg) = golden_min(
                |t| Ok(self.value(t)? - (cis(-t) * z).re),
                centre - step,
                centre + step,
                DISTANCE_RESOLUTION,
            )?;
            best = best.max(-neg);
        }
        Ok(best)
    }
}

pub fn boundary_distance(a: &ComplexMatrix, z: Complex64, grid_size: usize) -> Result<f64> {
    SupportFunction::new(&a.hermitian_parts(), grid_size)?.distance(z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedKind {
    FlatPortion,
    SingularPoint,
}

impl SeedKind {
    pub fn label(self) -> &'static str {
        match self {
            SeedKind::FlatPortion => "flat-portion",
            SeedKind::SingularPoint => "singular-point",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SeedRecord {
    /// Outward normal angle of the support line.
    pub theta: f64,
    pub kind: SeedKind,
    /// One endpoint for a singular point, two for a flat portion.
    pub endpoints: Vec<Complex64>,
    pub multiplicity: usize,
    /// Support value `lambda_max(theta)`.
    pub support: f64,
}

/// One seed per repeated-maximum event. The derivative `Im(e^{-i theta} A)`
/// compressed to the top eigenspace gives the extreme points of `W(A)` on the
/// support line.
pub fn detect_seeds(p: &HermitianPencil, scan: &ScanResult, kind_tol_rel: f64) -> Result<Vec<SeedRecord>> {
    let mut seeds = Vec::new();
    for e in scan.max_events() {
        let slice = spectrum_slice(p, e.theta, scan.tol_cluster)?;
        let top = slice.top().clone();
        if top.multiplicity < 2 {
            return Err(Error::Numerical(format!(
                "repeated maximum at theta = {} not reproduced by its slice",
                e.theta
            )));
        }
        let basis = slice.cluster_basis(&top);
        let compressed = basis.adjoint() * p.derivative_at(e.theta) * &basis;
        let mu = hermitian_eigen(&compressed, e.theta)?.values;
        let (mu_hi, mu_lo) = (mu[0], *mu.last().unwrap());
        let rot = cis(e.theta);
        let lo = rot * Complex64::new(top.value, mu_lo);
        let hi = rot * Complex64::new(top.value, mu_hi);
        let (kind, endpoints) = if mu_hi - mu_lo > kind_tol_rel * scan.scale {
            (SeedKind::FlatPortion, vec![lo, hi])
        } else {
            (SeedKind::SingularPoint, vec![(lo + hi) * 0.5])
        };
        seeds.push(SeedRecord { theta: e.theta, kind, endpoints, multiplicity: top.multiplicity, support: top.value });
    }
    Ok(seeds)
}

#[derive(Debug, Clone, Copy)]
pub struct RealCurvePoint {
    /// In `[0, pi)`.
    pub theta: f64,
    pub lambda: f64,
    pub order: usize,
    /// `(cos theta : sin theta : -lambda)`.
    pub point: ProjectivePoint,
    /// Whether the point is dual to a support line of `W(A)`.
    pub on_boundary: bool,
}

/// Every coincidence event, folded to `[0, pi)` via `H(theta + pi) = -H(theta)`,
/// as a singular point of the base curve. The spectral multiplicity is
/// cross-checked against the order computed from the polynomial.
pub fn real_singularities(
    scan: &ScanResult,
    poly: &BasePolynomial,
    tol_order: f64,
) -> Result<Vec<RealCurvePoint>> {
    let mut out: Vec<RealCurvePoint> = Vec::new();
    for e in &scan.events {
        let (mut theta, mut lambda) = (e.theta, e.lambda);
        let n = scan.slices[0].eigenvalues.len();
        let on_boundary = e.first_branch == 0 || e.first_branch + e.multiplicity == n;
        if theta >= PI - EVENT_DEDUP {
            theta -= PI;
            lambda = -lambda;
        }
        if theta.abs() < EVENT_DEDUP {
            theta = 0.0;
        }
        let lambda_tol = scan.tol_cluster.max(1e-9 * scan.scale);
        if let Some(existing) = out
            .iter_mut()
            .find(|q| (q.theta - theta).abs() < EVENT_DEDUP && (q.lambda - lambda).abs() < lambda_tol)
        {
            existing.on_boundary |= on_boundary;
            continue;
        }
        let point = ProjectivePoint::real(theta.cos(), theta.sin(), -lambda);
        let order = poly.order_at_point(&point, tol_order);
        if order != e.multiplicity {
            return Err(Error::Numerical(format!(
                "spectral multiplicity {} disagrees with curve order {order} at theta = {theta}, lambda = {lambda}",
                e.multiplicity
            )));
        }
        out.push(RealCurvePoint { theta, lambda, order, point, on_boundary });
    }
    out.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(b.lambda.total_cmp(&a.lambda)));
    Ok(out)
}

/// Groups points by pencil angle modulo `pi`: points in one group lie on a
/// common line through `(0:0:1)`.
pub fn collinear_groups(points: &[RealCurvePoint]) -> Vec<Vec<RealCurvePoint>> {
    let mut groups: Vec<Vec<RealCurvePoint>> = Vec::new();
    for p in points {
        let t = p.theta.rem_euclid(PI);
        let close = |q: &RealCurvePoint| {
            let d = (q.theta.rem_euclid(PI) - t).abs();
            d.min(PI - d) < COLLINEAR_TOL
        };
        match groups.iter_mut().find(|g| close(&g[0])) {
            Some(g) => g.push(*p),
            None => groups.push(vec![*p]),
        }
    }
    groups
}
