//! Bounds and exact values of the Gau-Wu number `k(A)`: the largest size of an
//! orthonormal set whose images `<A x, x>` all lie on the boundary of `W(A)`.

mod rules;
mod witness;

use num_complex::Complex64;
use serde::Serialize;

pub use rules::{apply_rules, RuleId, RuleRecord, RuleStatus, TheoremBounds};
pub use witness::{certify, search_witnesses, verify_witnesses, Witness};

use crate::analysis::Analysis;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Applicability {
    pub unitarily_irreducible: bool,
    pub n: usize,
    pub commutant_dimension: usize,
    pub degenerate: bool,
    pub normal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GauWuResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub witnesses: Vec<Witness>,
    pub rules: Vec<RuleRecord>,
    pub applicability: Applicability,
    pub warnings: Vec<String>,
}

impl GauWuResult {
    fn new(an: &Analysis, lower: usize, upper: usize, rules: Vec<RuleRecord>, witnesses: Vec<Witness>) -> Result<Self> {
        if lower > upper {
            return Err(Error::Numerical(format!(
                "inconsistent bounds: lower {lower} exceeds upper {upper}; check the tolerances"
            )));
        }
        let mut warnings = Vec::new();
        if an.normal {
            warnings.push("matrix is normal; theorem rules do not apply and only universal and witness bounds are reported".into());
        }
        if an.degenerate {
            warnings.push("numerical range is a segment or a point".into());
        }
        Ok(Self {
            lower,
            upper,
            exact: (lower == upper).then_some(lower),
            witnesses,
            rules,
            applicability: Applicability {
                unitarily_irreducible: an.irreducible(),
                n: an.n(),
                commutant_dimension: an.commutant_dimension,
                degenerate: an.degenerate,
                normal: an.normal,
            },
            warnings,
        })
    }

    /// Folds in an exact value known from a matrix family (the Toeplitz
    /// formula); an out-of-bounds value is a diagnostic error.
    pub fn with_family_value(mut self, k: usize, detail: impl Into<String>) -> Result<Self> {
        if k < self.lower || k > self.upper {
            return Err(Error::Numerical(format!(
                "family value {k} lies outside the computed bounds [{}, {}]",
                self.lower, self.upper
            )));
        }
        self.lower = k;
        self.upper = k;
        self.exact = Some(k);
        self.rules.push(RuleRecord { id: RuleId::Toeplitz, status: RuleStatus::Fired(detail.into()), lower: Some(k), upper: Some(k) });
        Ok(self)
    }

    pub fn fired_rules(&self) -> impl Iterator<Item = &RuleRecord> {
        self.rules.iter().filter(|r| r.fired_rule())
    }
}

/// Bounds from the theorem rules alone, without witnesses.
pub fn theorem_bounds(a: &ComplexMatrix) -> Result<GauWuResult> {
    let an = Analysis::new(a, &RunConfig::default())?;
    theorem_bounds_of(&an)
}

pub fn theorem_bounds_of(an: &Analysis) -> Result<GauWuResult> {
    let b = apply_rules(an);
    GauWuResult::new(an, b.lower, b.upper, b.rules, Vec::new())
}

/// Size and members of the largest certified witness set found.
pub fn witness_lower_bound(a: &ComplexMatrix, grid_size: usize, budget: usize) -> Result<(usize, Vec<Witness>)> {
    let cfg = RunConfig { grid_size, budget, ..RunConfig::default() };
    let an = Analysis::new(a, &cfg)?;
    let w = search_witnesses(&an)?;
    Ok((w.len(), w))
}

pub fn classify(a: &ComplexMatrix) -> Result<GauWuResult> {
    classify_with(a, &RunConfig::default())
}

pub fn classify_with(a: &ComplexMatrix, config: &RunConfig) -> Result<GauWuResult> {
    classify_analysis(&Analysis::new(a, config)?)
}

pub fn classify_analysis(an: &Analysis) -> Result<GauWuResult> {
    let b = apply_rules(an);
    let witnesses = search_witnesses(an)?;
    let mut rules = b.rules;
    rules.push(RuleRecord {
        id: RuleId::Witness,
        status: RuleStatus::Fired(format!("{} certified witnesses", witnesses.len())),
        lower: Some(witnesses.len()),
        upper: None,
    });
    let lower = b.lower.max(witnesses.len());
    GauWuResult::new(an, lower, b.upper, rules, witnesses)
}

/// `ceil(n/2)`, the Gau-Wu number of every tridiagonal Toeplitz matrix
/// `T_n(a, b, c)` with `|b| != |c|`.
pub fn toeplitz_k(n: usize, b: Complex64, c: Complex64) -> Result<usize> {
    if n < 3 {
        return Err(Error::Hypothesis(format!("toeplitz formula needs n >= 3, got {n}")));
    }
    let (mb, mc) = (b.norm(), c.norm());
    if (mb - mc).abs() <= 1e-10 * mb.max(mc) {
        return Err(Error::Hypothesis(format!("|b| = |c| = {mb}; the formula needs |b| != |c|")));
    }
    Ok(n.div_ceil(2))
}
