//! Matrix ingestion, the Hermitian pencil `(Re A, Im A)` and the unitary
//! irreducibility test.

use std::fmt;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_norm, CMatrix};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense square complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(CMatrix);

impl ComplexMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare { row: 0, len: m.ncols(), n: m.nrows() });
        }
        if m.nrows() == 0 {
            return Err(Error::Dimension { n: 0, min: 1 });
        }
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                let z = m[(r, c)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: r, col: c });
                }
            }
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), n });
            }
        }
        Self::new(DMatrix::from_fn(n, n, |r, c| rows[r][c]))
    }

    /// Real-valued convenience constructor (row-major).
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diagonal(values: &[Complex64]) -> Result<Self> {
        let n = values.len();
        Self::new(DMatrix::from_fn(n, n, |r, c| if r == c { values[r] } else { Complex64::new(0.0, 0.0) }))
    }

    pub fn from_hermitian_parts(h1: &CMatrix, h2: &CMatrix) -> Result<Self> {
        Self::new(h1 + h2 * I)
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.0[(r, c)]
    }

    /// `e^{i theta} A`.
    pub fn rotated(&self, theta: f64) -> Self {
        Self(&self.0 * Complex64::from_polar(1.0, theta))
    }

    /// `A + z I`.
    pub fn shifted(&self, z: Complex64) -> Self {
        let mut m = self.0.clone();
        for k in 0..self.n() {
            m[(k, k)] += z;
        }
        Self(m)
    }

    /// `U^* A U`.
    pub fn similar(&self, u: &CMatrix) -> Self {
        Self(u.adjoint() * &self.0 * u)
    }

    pub fn direct_sum(&self, other: &ComplexMatrix) -> Self {
        let (n, m) = (self.n(), other.n());
        let mut out = CMatrix::zeros(n + m, n + m);
        out.view_mut((0, 0), (n, n)).copy_from(&self.0);
        out.view_mut((n, n), (m, m)).copy_from(&other.0);
        Self(out)
    }

    /// Eigenvalues of `A` itself (not Hermitian in general).
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        match nalgebra::Schur::try_new(self.0.clone(), 1e-15, 10_000) {
            Some(s) => s.eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default(),
            None => Vec::new(),
        }
    }

    pub fn is_tridiagonal(&self) -> bool {
        let n = self.n();
        (0..n).all(|r| (0..n).all(|c| r.abs_diff(c) <= 1 || self.0[(r, c)] == Complex64::new(0.0, 0.0)))
    }

    pub fn hermitian_parts(&self) -> HermitianPencil {
        hermitian_parts(self)
    }

    // ---- file formats ----------------------------------------------------

    /// Parses either the JSON object form or the plain-text `a+bi` grid.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: MatrixDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.entries.len() != doc.n {
            return Err(Error::Parse(format!(
                "field n = {} but entries has {} rows",
                doc.n,
                doc.entries.len()
            )));
        }
        let rows: Vec<Vec<Complex64>> = doc
            .entries
            .iter()
            .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    parse_complex_token(tok)
                        .ok_or_else(|| Error::Parse(format!("line {}: bad entry {tok:?}", lineno + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Self::from_rows(&rows)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let n = self.n();
        let doc = MatrixDocument {
            n,
            entries: (0..n)
                .map(|r| (0..n).map(|c| [self.0[(r, c)].re, self.0[(r, c)].im]).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("matrix document serializes")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{:?}", self.0)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixDocument {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i`, `-i`. Exponents (`1e-3`) are allowed
/// in either part.
pub fn parse_complex_token(tok: &str) -> Option<Complex64> {
    let tok = tok.trim();
    if tok.is_empty() {
        return None;
    }
    let Some(body) = tok.strip_suffix('i').or_else(|| tok.strip_suffix('j')) else {
        return tok.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not the leading one and not part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() { 0.0 } else { re_part.parse::<f64>().ok()? };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re, im))
}

/// The pair `(H1, H2)` with `A = H1 + i H2`, both Hermitian.
#[derive(Debug, Clone)]
pub struct HermitianPencil {
    pub h1: CMatrix,
    pub h2: CMatrix,
}

impl HermitianPencil {
    pub fn n(&self) -> usize {
        self.h1.nrows()
    }

    /// `cos(theta) H1 + sin(theta) H2 = Re(e^{-i theta} A)`.
    pub fn at(&self, theta: f64) -> CMatrix {
        let (s, c) = theta.sin_cos();
        &self.h1 * Complex64::new(c, 0.0) + &self.h2 * Complex64::new(s, 0.0)
    }

    /// `-sin(theta) H1 + cos(theta) H2 = Im(e^{-i theta} A)`, the angular
    /// derivative of [`HermitianPencil::at`].
    pub fn derivative_at(&self, theta: f64) -> CMatrix {
        let (s, c) = theta.sin_cos();
        &self.h1 * Complex64::new(-s, 0.0) + &self.h2 * Complex64::new(c, 0.0)
    }

    pub fn recombine(&self) -> CMatrix {
        &self.h1 + &self.h2 * I
    }

    /// `||H1|| + ||H2||` in the spectral norm; the reference scale for every
    /// relative tolerance in the crate.
    pub fn scale(&self) -> f64 {
        hermitian_norm(&self.h1) + hermitian_norm(&self.h2)
    }
}

pub fn hermitian_parts(a: &ComplexMatrix) -> HermitianPencil {
    let m = a.as_matrix();
    let adj = m.adjoint();
    let h1 = (m + &adj) * Complex64::new(0.5, 0.0);
    // (A - A^*) / (2i) = -i (A - A^*) / 2
    let h2 = (m - &adj) * Complex64::new(0.0, -0.5);
    HermitianPencil { h1, h2 }
}

/// Relative singular-value threshold of the commutator operator.
pub const COMMUTANT_REL_TOL: f64 = 1e-8;

/// Dimension of `{X : X H1 = H1 X, X H2 = H2 X}`.
pub fn commutant_dimension(a: &ComplexMatrix) -> usize {
    commutant_dimension_of(&hermitian_parts(a))
}

pub fn commutant_dimension_of(p: &HermitianPencil) -> usize {
    let n = p.n();
    let nn = n * n;
    // Column-major vec: vec(X H - H X) = (H^T (x) I - I (x) H) vec(X).
    let mut k = CMatrix::zeros(2 * nn, nn);
    for (block, h) in [&p.h1, &p.h2].into_iter().enumerate() {
        let off = block * nn;
        for j in 0..n {
            for i in 0..n {
                let row = off + i + j * n;
                // (X H)_{ij} = sum_l X_{il} H_{lj}
                for l in 0..n {
                    k[(row, i + l * n)] += h[(l, j)];
                }
                // (H X)_{ij} = sum_l H_{il} X_{lj}
                for l in 0..n {
                    k[(row, l + j * n)] -= h[(i, l)];
                }
            }
        }
    }
    let threshold = COMMUTANT_REL_TOL * p.scale().max(f64::MIN_POSITIVE);
    let sv = k.singular_values();
    let rank = sv.iter().filter(|&&s| s > threshold).count();
    nn - rank
}

pub fn is_unitarily_irreducible(a: &ComplexMatrix) -> bool {
    commutant_dimension(a) == 1
}
