//! Tridiagonal Toeplitz matrices `T_n(a, b, c)`, the variant with the
//! off-diagonal pairs swapped at odd positions, and the 2x2 block structure
//! shared by both.

use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::gauwu::{search_witnesses, toeplitz_k};
use crate::linalg::CMatrix;
use crate::matrix::{commutant_dimension, ComplexMatrix};
use crate::poly::{compute_base_polynomial, BasePolynomial};

const MODULUS_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToeplitzSpec {
    pub n: usize,
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl ToeplitzSpec {
    pub fn new(n: usize, a: Complex64, b: Complex64, c: Complex64) -> Self {
        Self { n, a, b, c }
    }

    /// `|b| != |c|`, the hypothesis of the Gau-Wu formula.
    pub fn moduli_differ(&self) -> bool {
        let (mb, mc) = (self.b.norm(), self.c.norm());
        (mb - mc).abs() > MODULUS_REL_TOL * mb.max(mc)
    }

    fn centred(&self) -> Self {
        Self { a: Complex64::new(0.0, 0.0), ..*self }
    }
}

pub fn build_toeplitz(spec: &ToeplitzSpec) -> ComplexMatrix {
    let n = spec.n.max(1);
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = spec.a;
        if i + 1 < n {
            m[(i, i + 1)] = spec.b;
            m[(i + 1, i)] = spec.c;
        }
    }
    ComplexMatrix::new(m).expect("constant bands are finite")
}

/// Recovers `(n, a, b, c)` when `a` is tridiagonal with constant bands.
pub fn detect_toeplitz(a: &ComplexMatrix) -> Option<ToeplitzSpec> {
    let n = a.n();
    if !a.is_tridiagonal() {
        return None;
    }
    let scale = a.as_matrix().iter().fold(0.0_f64, |m, z| m.max(z.norm())).max(f64::MIN_POSITIVE);
    let same = |x: Complex64, y: Complex64| (x - y).norm() <= 1e-12 * scale;
    let diag = a.get(0, 0);
    let (b, c) = if n > 1 { (a.get(0, 1), a.get(1, 0)) } else { (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)) };
    let constant = (0..n).all(|i| same(a.get(i, i), diag))
        && (0..n.saturating_sub(1)).all(|i| same(a.get(i, i + 1), b) && same(a.get(i + 1, i), c));
    constant.then_some(ToeplitzSpec::new(n, diag, b, c))
}

/// Exchanges entries `(j, j+1)` and `(j+1, j)` for every odd `j` (1-based).
pub fn swap_variant(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_tridiagonal() {
        return Err(Error::Hypothesis("swap variant needs a tridiagonal matrix".into()));
    }
    let mut m = a.as_matrix().clone();
    let n = a.n();
    for j in (0..n.saturating_sub(1)).step_by(2) {
        let upper = m[(j, j + 1)];
        m[(j, j + 1)] = m[(j + 1, j)];
        m[(j + 1, j)] = upper;
    }
    ComplexMatrix::new(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockDecomposition {
    pub beta: Complex64,
    /// Nonzero singular values of `X`, descending.
    pub sigmas: Vec<f64>,
    #[serde(skip)]
    pub blocks: Vec<ComplexMatrix>,
    pub has_zero_block: bool,
}

/// The `ceil(n/2) x floor(n/2)` matrix whose column `j` is `b (e_j + e_{j+1})`.
pub fn x_matrix(n: usize, b: Complex64) -> CMatrix {
    let rows = n.div_ceil(2);
    let cols = n / 2;
    let mut x = CMatrix::zeros(rows, cols);
    for j in 0..cols {
        x[(j, j)] = b;
        if j + 1 < rows {
            x[(j + 1, j)] = b;
        }
    }
    x
}

pub fn block_decomposition(spec: &ToeplitzSpec) -> Result<BlockDecomposition> {
    if spec.b.norm() == 0.0 {
        return Err(Error::Hypothesis("block decomposition needs b != 0".into()));
    }
    if spec.n < 2 {
        return Err(Error::Hypothesis(format!("block decomposition needs n >= 2, got {}", spec.n)));
    }
    let beta = spec.c / spec.b.conj();
    let mut sigmas: Vec<f64> = x_matrix(spec.n, spec.b).singular_values().iter().copied().collect();
    sigmas.sort_by(|a, b| b.total_cmp(a));
    let floor = 1e-12 * sigmas[0];
    if sigmas.iter().any(|&s| s <= floor) {
        return Err(Error::Numerical("X has a vanishing singular value".into()));
    }
    if sigmas.len() > 1 && sigmas[0] - sigmas[1] <= floor {
        return Err(Error::Numerical("largest singular value of X is not simple".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let blocks = sigmas
        .iter()
        .map(|&s| {
            let s = Complex64::new(s, 0.0);
            ComplexMatrix::from_rows(&[vec![zero, s], vec![s * beta, zero]]).expect("2x2 block")
        })
        .collect();
    Ok(BlockDecomposition { beta, sigmas, blocks, has_zero_block: spec.n % 2 == 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The witness search did not reach the formula value; not a contradiction.
    Inconclusive,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub status: CheckStatus,
    pub residual: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToeplitzReport {
    pub spec: ToeplitzSpec,
    pub decomposition: BlockDecomposition,
    /// `k(T_n)` from the formula.
    pub k: usize,
    /// `k` of the swap variant, from the dominant-block argument.
    pub k_swap: usize,
    pub witness_k: usize,
    pub witness_k_swap: usize,
    pub checks: Vec<Check>,
}

impl ToeplitzReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Base polynomial of the direct sum of the blocks and, for odd `n`, the
/// 1x1 zero block.
pub fn block_base_polynomial(d: &BlockDecomposition) -> Result<BasePolynomial> {
    let mut f = if d.has_zero_block { BasePolynomial::linear(0.0, 0.0, 1.0) } else { BasePolynomial::one() };
    for b in &d.blocks {
        f = f.product(&compute_base_polynomial(&b.hermitian_parts())?);
    }
    Ok(f)
}

pub fn verify_toeplitz(spec: &ToeplitzSpec) -> Result<ToeplitzReport> {
    verify_toeplitz_with(spec, &RunConfig::default())
}

pub fn verify_toeplitz_with(spec: &ToeplitzSpec, config: &RunConfig) -> Result<ToeplitzReport> {
    if spec.n < 3 {
        return Err(Error::Hypothesis(format!("needs n >= 3, got {}", spec.n)));
    }
    if !spec.moduli_differ() {
        return Err(Error::Hypothesis(format!("|b| = |c| = {}; needs |b| != |c|", spec.b.norm())));
    }
    let k = toeplitz_k(spec.n, spec.b, spec.c)?;
    let centred = spec.centred();
    let a = build_toeplitz(&centred);
    let a_swap = swap_variant(&a)?;
    let d = block_decomposition(&centred)?;
    let tol = config.tol_coeff;
    let mut checks = Vec::new();

    let f = compute_base_polynomial(&a.hermitian_parts())?;
    let f_swap = compute_base_polynomial(&a_swap.hermitian_parts())?;
    let r = f.relative_distance(&f_swap).unwrap_or(f64::INFINITY);
    checks.push(Check {
        id: "i",
        name: "equal base polynomials",
        status: CheckStatus::from_bool(r <= tol),
        residual: Some(r),
        detail: "F(T) against F(T')".into(),
    });

    let f_blocks = block_base_polynomial(&d)?;
    let r = f_swap.relative_distance(&f_blocks).unwrap_or(f64::INFINITY);
    checks.push(Check {
        id: "ii",
        name: "block factorization",
        status: CheckStatus::from_bool(r <= tol),
        residual: Some(r),
        detail: format!(
            "F(T') against the product over {} block(s){}",
            d.blocks.len(),
            if d.has_zero_block { " times t" } else { "" }
        ),
    });

    let (dim, dim_swap) = (commutant_dimension(&a), commutant_dimension(&a_swap));
    checks.push(Check {
        id: "iii",
        name: "irreducibility",
        status: CheckStatus::from_bool(dim == 1 && dim_swap >= 2),
        residual: None,
        detail: format!("commutant dimension {dim} for T, {dim_swap} for T'"),
    });

    let (nested, margin) = nesting(&d, config)?;
    checks.push(Check {
        id: "iv",
        name: "dominant block",
        status: CheckStatus::from_bool(nested),
        residual: Some(margin),
        detail: "every other block range lies strictly inside the first block ellipse".into(),
    });

    let an = Analysis::new(&a, config)?;
    let witness_k = search_witnesses(&an)?.len();
    checks.push(Check {
        id: "v",
        name: "witness search on T",
        status: match witness_k.cmp(&k) {
            std::cmp::Ordering::Equal => CheckStatus::Pass,
            std::cmp::Ordering::Less => CheckStatus::Inconclusive,
            std::cmp::Ordering::Greater => CheckStatus::Fail,
        },
        residual: None,
        detail: format!("certified {witness_k} witnesses, formula gives {k}"),
    });

    let an_swap = Analysis::new(&a_swap, config)?;
    let witness_k_swap = search_witnesses(&an_swap)?.len();
    checks.push(Check {
        id: "vi",
        name: "swap variant k = 2",
        status: CheckStatus::from_bool(witness_k_swap == 2 && nested),
        residual: None,
        detail: format!(
            "witness floor {witness_k_swap}; upper bound 2 from the dominant 2x2 block (decomposition-derived)"
        ),
    });

    Ok(ToeplitzReport { spec: *spec, decomposition: d, k, k_swap: 2, witness_k, witness_k_swap, checks })
}

/// Whether every block other than the first (and the origin for odd `n`) lies
/// strictly inside the numerical range of the first block; also returns the
/// smallest distance to its boundary.
fn nesting(d: &BlockDecomposition, config: &RunConfig) -> Result<(bool, f64)> {
    let first = d.blocks[0].hermitian_parts();
    let support = crate::geometry::SupportFunction::new(&first, config.grid_size)?;
    let mut worst = f64::NEG_INFINITY;
    if d.has_zero_block {
        worst = worst.max(support.distance(Complex64::new(0.0, 0.0))?);
    }
    for b in &d.blocks[1..] {
        for s in crate::geometry::boundary_points(b, 64, 1e-12)? {
            worst = worst.max(support.distance(s.z)?);
        }
    }
    let sigma_ok = d.sigmas.windows(2).all(|w| w[0] > w[1]);
    if worst == f64::NEG_INFINITY {
        // n = 2: a single block and nothing to nest.
        return Ok((sigma_ok, 0.0));
    }
    Ok((sigma_ok && worst < 0.0, -worst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec(n: usize, b: f64, cc: f64) -> ToeplitzSpec {
        ToeplitzSpec::new(n, c(0.0, 0.0), c(b, 0.0), c(cc, 0.0))
    }

    #[test]
    fn build_examples() {
        let t = build_toeplitz(&spec(2, 1.0, 2.0));
        assert_eq!(t.as_matrix(), ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap().as_matrix());
        let t = build_toeplitz(&ToeplitzSpec::new(3, c(7.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
        assert_eq!(t.as_matrix(), &(CMatrix::identity(3, 3) * c(7.0, 0.0)));
        let t = build_toeplitz(&spec(5, 1.0, 2.0));
        assert_eq!(t.get(0, 1), c(1.0, 0.0));
        assert_eq!(t.get(1, 0), c(2.0, 0.0));
        assert_eq!(t.get(0, 2), c(0.0, 0.0));
    }

    #[test]
    fn swap_examples() {
        let t = build_toeplitz(&spec(5, 1.0, 2.0));
        let s = swap_variant(&t).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[
            vec![0.0, 2.0, 0.0, 0.0, 0.0],
            vec![1.0, 0.0, 1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0, 2.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0, 1.0],
            vec![0.0, 0.0, 0.0, 2.0, 0.0],
        ])
        .unwrap();
        assert_eq!(s.as_matrix(), expected.as_matrix());
        assert_eq!(swap_variant(&s).unwrap().as_matrix(), t.as_matrix());
        let t2 = swap_variant(&build_toeplitz(&spec(2, 1.0, 2.0))).unwrap();
        assert_eq!(t2.as_matrix(), build_toeplitz(&spec(2, 2.0, 1.0)).as_matrix());
        let full = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0, 1.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        assert!(swap_variant(&full).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = block_decomposition(&spec(5, 1.0, 2.0)).unwrap();
        assert_eq!(d.beta, c(2.0, 0.0));
        assert_abs_diff_eq!(d.sigmas[0], 3f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(d.sigmas[1], 1.0, epsilon = 1e-12);
        assert!(d.has_zero_block);
        let d = block_decomposition(&spec(3, 1.0, 2.0)).unwrap();
        assert_eq!(d.sigmas.len(), 1);
        assert_abs_diff_eq!(d.sigmas[0], 2f64.sqrt(), epsilon = 1e-12);
        let d = block_decomposition(&spec(4, 1.0, 2.0)).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(!d.has_zero_block);
        assert!(block_decomposition(&spec(4, 0.0, 2.0)).is_err());
    }

    #[test]
    fn verify_small_cases() {
        let r = verify_toeplitz(&spec(3, 1.0, 2.0)).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert_eq!((r.k, r.k_swap), (2, 2));
        let r = verify_toeplitz(&spec(5, 1.0, 2.0)).unwrap();
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass), "{:?}", r.checks);
        assert_eq!((r.k, r.k_swap), (3, 2));
    }

    #[test]
    fn detects_constant_bands() {
        let t = build_toeplitz(&ToeplitzSpec::new(5, c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0)));
        let s = detect_toeplitz(&t).unwrap();
        assert_eq!((s.n, s.a, s.b, s.c), (5, c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0)));
        assert!(detect_toeplitz(&swap_variant(&t).unwrap()).is_none());
    }

    #[test]
    fn verify_rejects_equal_moduli() {
        assert!(matches!(verify_toeplitz(&spec(5, 1.0, 1.0)), Err(Error::Hypothesis(_))));
        assert!(matches!(
            verify_toeplitz(&ToeplitzSpec::new(5, c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0))),
            Err(Error::Hypothesis(_))
        ));
    }
}
