//! The base polynomial `F_A(x:y:t) = det(x H1 + y H2 + t I)` as an explicit
//! homogeneous trivariate polynomial with real coefficients.

use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::hermitian_eigenvalues;
use crate::matrix::HermitianPencil;

/// Directions used for degree-`k` interpolation start at this offset.
pub const DIRECTION_OFFSET: f64 = 0.1;
pub const MAX_CONDITION: f64 = 1e8;
pub const DEFAULT_ORDER_TOL: f64 = 1e-6;
const JITTER_ATTEMPTS: usize = 6;

/// Homogeneous polynomial of degree `degree` in `(x, y, t)`, stored densely
/// over exponent triples `(a, b, c)` with `a + b + c = degree`, in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePolynomial {
    degree: usize,
    coeffs: Vec<f64>,
    imag_residue: f64,
}

fn term_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

fn index_of(n: usize, a: usize, b: usize) -> usize {
    // rows a' < a contribute (n - a' + 1) entries each
    a * (n + 1) - a * (a.saturating_sub(1)) / 2 + b
}

fn falling(m: usize, k: usize) -> f64 {
    (0..k).map(|i| (m - i) as f64).product()
}

impl BasePolynomial {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: vec![0.0; term_count(degree)], imag_residue: 0.0 }
    }

    /// The degree-0 polynomial `1`.
    pub fn one() -> Self {
        Self::from_terms(0, &[((0, 0, 0), 1.0)])
    }

    /// Builds from sparse `((a, b, c), value)` terms.
    ///
    /// Panics if a triple does not sum to `degree`.
    pub fn from_terms(degree: usize, terms: &[((usize, usize, usize), f64)]) -> Self {
        let mut p = Self::zero(degree);
        for &((a, b, c), v) in terms {
            assert_eq!(a + b + c, degree, "monomial x^{a} y^{b} t^{c} is not of degree {degree}");
            p.coeffs[index_of(degree, a, b)] += v;
        }
        p
    }

    /// A linear form `u x + v y + w t`.
    pub fn linear(u: f64, v: f64, w: f64) -> Self {
        Self::from_terms(1, &[((1, 0, 0), u), ((0, 1, 0), v), ((0, 0, 1), w)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> f64 {
        if a + b + c != self.degree {
            return 0.0;
        }
        self.coeffs[index_of(self.degree, a, b)]
    }

    /// Largest imaginary part seen while cross-checking the construction,
    /// relative to the largest coefficient. Zero for hand-built polynomials.
    pub fn imag_residue(&self) -> f64 {
        self.imag_residue
    }

    /// `(a, b, c, coefficient)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, f64)> + '_ {
        let n = self.degree;
        (0..=n).flat_map(move |a| (0..=n - a).map(move |b| (a, b, n - a - b))).map(move |(a, b, c)| {
            (a, b, c, self.coeffs[index_of(n, a, b)])
        })
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn evaluate(&self, p: &ProjectivePoint) -> Complex64 {
        self.evaluate_xyz(p.x, p.y, p.t)
    }

    pub fn evaluate_xyz(&self, x: Complex64, y: Complex64, t: Complex64) -> Complex64 {
        let n = self.degree;
        let px = powers(x, n);
        let py = powers(y, n);
        let pt = powers(t, n);
        self.terms().map(|(a, b, c, v)| px[a] * py[b] * pt[c] * v).sum()
    }

    pub fn evaluate_real(&self, x: f64, y: f64, t: f64) -> f64 {
        self.evaluate_xyz(Complex64::new(x, 0.0), Complex64::new(y, 0.0), Complex64::new(t, 0.0)).re
    }

    /// Partial derivative `d^{i+j+l} / dx^i dy^j dt^l` at a point.
    pub fn derivative_at(&self, i: usize, j: usize, l: usize, p: &ProjectivePoint) -> Complex64 {
        let n = self.degree;
        let px = powers(p.x, n);
        let py = powers(p.y, n);
        let pt = powers(p.t, n);
        self.terms()
            .filter(|&(a, b, c, v)| a >= i && b >= j && c >= l && v != 0.0)
            .map(|(a, b, c, v)| {
                let k = v * falling(a, i) * falling(b, j) * falling(c, l);
                px[a - i] * py[b - j] * pt[c - l] * k
            })
            .sum()
    }

    /// Order of the curve `F = 0` at `p`: the smallest `k` such that some
    /// `k`-th partial derivative is numerically nonzero. `0` means `p` is off
    /// the curve, `1` a smooth point, `>= 2` a singular point of that order.
    pub fn order_at_point(&self, p: &ProjectivePoint, tol: f64) -> usize {
        let p = p.normalized();
        let n = self.degree;
        let m = self.max_abs_coefficient();
        for k in 0..=n {
            let threshold = tol * m * falling(n, k);
            for i in 0..=k {
                for j in 0..=k - i {
                    if self.derivative_at(i, j, k - i - j, &p).norm() > threshold {
                        return k;
                    }
                }
            }
        }
        n + 1
    }

    /// `t -> F(cos theta, sin theta, t)`.
    pub fn restrict_to_angle(&self, theta: f64) -> UnivariatePoly {
        let (s, c) = theta.sin_cos();
        let mut coeffs = vec![0.0; self.degree + 1];
        for (a, b, tc, v) in self.terms() {
            coeffs[tc] += v * c.powi(a as i32) * s.powi(b as i32);
        }
        UnivariatePoly(coeffs)
    }

    /// The polynomial of `e^{i theta} A` given that `self` belongs to `A`:
    /// `G(u, v, t) = F(u cos theta + v sin theta, -u sin theta + v cos theta, t)`.
    pub fn rotate(&self, theta: f64) -> BasePolynomial {
        let (s, c) = theta.sin_cos();
        let lx = BasePolynomial::linear(c, s, 0.0);
        let ly = BasePolynomial::linear(-s, c, 0.0);
        let lt = BasePolynomial::linear(0.0, 0.0, 1.0);
        let n = self.degree;
        let px = poly_powers(&lx, n);
        let py = poly_powers(&ly, n);
        let pt = poly_powers(&lt, n);
        let mut out = BasePolynomial::zero(n);
        for (a, b, tc, v) in self.terms() {
            if v == 0.0 {
                continue;
            }
            let term = px[a].product(&py[b]).product(&pt[tc]);
            for (k, w) in term.coeffs.iter().enumerate() {
                out.coeffs[k] += v * w;
            }
        }
        out
    }

    pub fn product(&self, other: &BasePolynomial) -> BasePolynomial {
        let n = self.degree + other.degree;
        let mut out = BasePolynomial::zero(n);
        for (a, b, _, v) in self.terms() {
            if v == 0.0 {
                continue;
            }
            for (a2, b2, _, w) in other.terms() {
                out.coeffs[index_of(n, a + a2, b + b2)] += v * w;
            }
        }
        out
    }

    pub fn scaled(&self, s: f64) -> BasePolynomial {
        BasePolynomial {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            imag_residue: self.imag_residue,
        }
    }

    /// Largest coefficient difference relative to the largest coefficient of
    /// either operand. `None` on degree mismatch.
    pub fn relative_distance(&self, other: &BasePolynomial) -> Option<f64> {
        if self.degree != other.degree {
            return None;
        }
        let scale = self.max_abs_coefficient().max(other.max_abs_coefficient());
        let diff = self.coeffs.iter().zip(&other.coeffs).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
        Some(if scale == 0.0 { diff } else { diff / scale })
    }

    pub fn equal_up_to_tol(&self, other: &BasePolynomial, tol: f64) -> bool {
        self.relative_distance(other).is_some_and(|d| d <= tol)
    }

    /// True iff the product of `factors`, rescaled so its `t^n` coefficient
    /// matches `self`, equals `self` within `tol`.
    pub fn verify_factorization(&self, factors: &[BasePolynomial], tol: f64) -> bool {
        if factors.iter().map(BasePolynomial::degree).sum::<usize>() != self.degree {
            return false;
        }
        let prod = factors.iter().fold(BasePolynomial::one(), |acc, f| acc.product(f));
        let lead = prod.coefficient(0, 0, self.degree);
        if lead == 0.0 {
            return false;
        }
        let s = self.coefficient(0, 0, self.degree) / lead;
        self.equal_up_to_tol(&prod.scaled(s), tol)
    }

    /// One line per monomial, `a b c coefficient`, 17 significant digits.
    pub fn to_export(&self) -> String {
        let mut out = String::new();
        for (a, b, c, v) in self.terms() {
            let _ = writeln!(out, "{a} {b} {c} {v:.16e}");
        }
        out
    }

    pub fn from_export(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut degree = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Parse(format!("expected 4 fields: {line:?}")));
            }
            let idx = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(e.to_string()));
            let (a, b, c) = (idx(fields[0])?, idx(fields[1])?, idx(fields[2])?);
            let v: f64 = fields[3].parse().map_err(|e: std::num::ParseFloatError| Error::Parse(e.to_string()))?;
            match degree {
                None => degree = Some(a + b + c),
                Some(d) if d != a + b + c => {
                    return Err(Error::Parse(format!("mixed degrees {d} and {}", a + b + c)))
                }
                _ => {}
            }
            terms.push(((a, b, c), v));
        }
        let degree = degree.ok_or_else(|| Error::Parse("empty polynomial".into()))?;
        Ok(Self::from_terms(degree, &terms))
    }
}

fn powers(z: Complex64, n: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..=n {
        out.push(acc);
        acc *= z;
    }
    out
}

fn poly_powers(p: &BasePolynomial, n: usize) -> Vec<BasePolynomial> {
    let mut out = vec![BasePolynomial::one()];
    for k in 1..=n {
        let next = out[k - 1].product(p);
        out.push(next);
    }
    out
}

/// Point of the complex projective plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    pub x: Complex64,
    pub y: Complex64,
    pub t: Complex64,
}

impl ProjectivePoint {
    pub fn new(x: Complex64, y: Complex64, t: Complex64) -> Self {
        Self { x, y, t }
    }

    pub fn real(x: f64, y: f64, t: f64) -> Self {
        Self::new(Complex64::new(x, 0.0), Complex64::new(y, 0.0), Complex64::new(t, 0.0))
    }

    /// Scaled to unit max-modulus.
    pub fn normalized(&self) -> Self {
        let m = self.x.norm().max(self.y.norm()).max(self.t.norm());
        if m == 0.0 {
            return *self;
        }
        let s = Complex64::new(1.0 / m, 0.0);
        Self::new(self.x * s, self.y * s, self.t * s)
    }
}

/// Ascending coefficients of a real polynomial in `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePoly(pub Vec<f64>);

impl UnivariatePoly {
    /// `prod_j (t + r_j)`.
    pub fn from_negated_roots(roots: &[f64]) -> Self {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (k, &v) in c.iter().enumerate() {
                next[k] += v * r;
                next[k + 1] += v;
            }
            c = next;
        }
        UnivariatePoly(c)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.0
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }
}

/// Elementary symmetric functions `e_0 .. e_n` of `values`.
pub fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    // e_k is the coefficient of t^{n-k} in prod (t + v)
    let c = UnivariatePoly::from_negated_roots(values).0;
    c.into_iter().rev().collect()
}

pub fn compute_base_polynomial(p: &HermitianPencil) -> Result<BasePolynomial> {
    let n = p.n();
    let mut out = BasePolynomial::zero(n);
    out.coeffs[index_of(n, 0, 0)] = 1.0;
    let mut residue = 0.0_f64;

    for k in 1..=n {
        let mut solved = None;
        let mut last_cond = f64::INFINITY;
        for attempt in 0..JITTER_ATTEMPTS {
            let offset = DIRECTION_OFFSET + 0.0371 * attempt as f64;
            let angles: Vec<f64> =
                (0..=k).map(|j| j as f64 * std::f64::consts::PI / (k + 1) as f64 + offset).collect();
            // V[j, a] = cos^a sin^(k-a); unknown a <-> x^a y^(k-a) t^(n-k).
            let v = DMatrix::from_fn(k + 1, k + 1, |j, a| {
                let (s, c) = angles[j].sin_cos();
                c.powi(a as i32) * s.powi((k - a) as i32)
            });
            let sv = v.singular_values();
            let cond = sv.max() / sv.min();
            last_cond = cond;
            if !cond.is_finite() || cond > MAX_CONDITION {
                continue;
            }
            let mut rhs = DVector::zeros(k + 1);
            for (j, &phi) in angles.iter().enumerate() {
                let eig = hermitian_eigenvalues(&p.at(phi), phi)?;
                rhs[j] = elementary_symmetric(&eig)[k];
                if k == n {
                    residue = residue.max(determinant_imag_residue(p, phi));
                }
            }
            if let Some(c) = v.lu().solve(&rhs) {
                solved = Some(c);
                break;
            }
        }
        let c = solved.ok_or(Error::IllConditioned { degree: k, condition: last_cond })?;
        for a in 0..=k {
            out.coeffs[index_of(n, a, k - a)] = c[a];
        }
    }
    let m = out.max_abs_coefficient();
    out.imag_residue = residue / m.max(1.0);
    if out.imag_residue > 1e-8 {
        return Err(Error::Numerical(format!(
            "base polynomial imaginary residue {:.3e} exceeds 1e-8",
            out.imag_residue
        )));
    }
    Ok(out)
}

/// `|Im det(H(phi) + I)| / max(1, |det|)` from a complex LU factorization;
/// an independent check that the determinant of a Hermitian pencil is real.
fn determinant_imag_residue(p: &HermitianPencil, phi: f64) -> f64 {
    let mut m = p.at(phi);
    for d in 0..m.nrows() {
        m[(d, d)] += Complex64::new(1.0, 0.0);
    }
    let det = m.determinant();
    det.im.abs() / det.norm().max(1.0)
}
