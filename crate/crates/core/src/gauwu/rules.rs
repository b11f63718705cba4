//! Theorem-driven bounds on `k(A)`.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::spectral::AngleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    /// Lower bound from a certified witness set.
    Witness,
    /// Bound from the block structure of the tridiagonal Toeplitz family.
    Toeplitz,
}

impl RuleId {
    pub fn label(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::Witness => "W",
            RuleId::Toeplitz => "T",
        }
    }

    /// Statement of the result the rule applies.
    pub fn anchor(self) -> &'static str {
        match self {
            RuleId::R1 => "a matrix whose numerical range has a seed (flat portion or singular boundary point of the generating curve) has k >= 3",
            RuleId::R2 => "an irreducible matrix has k = n exactly when some Re(e^{-i theta} A) has only two distinct eigenvalues",
            RuleId::R3 => "an irreducible 4x4 matrix has k = 4 exactly when its base curve has a real point of order 3 or two real singular points on one line through the origin",
            RuleId::R4 => "an irreducible 4x4 matrix whose seeds carry only order-2 singularities, no two on one line through the origin, has k = 3",
            RuleId::R5 => "every matrix of size n >= 2 has 2 <= k <= n",
            RuleId::Witness => "an orthonormal set with all images on the boundary of W(A) bounds k from below",
            RuleId::Toeplitz => "a tridiagonal Toeplitz matrix with |b| != |c| has k = ceil(n/2); its odd-position swap variant is a direct sum dominated by one 2x2 block",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum RuleStatus {
    Fired(String),
    NotFired(String),
    Skipped(String),
}

impl RuleStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RuleStatus::Fired(_) => "fired",
            RuleStatus::NotFired(_) => "not-fired",
            RuleStatus::Skipped(_) => "skipped",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            RuleStatus::Fired(s) | RuleStatus::NotFired(s) | RuleStatus::Skipped(s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleRecord {
    pub id: RuleId,
    pub status: RuleStatus,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

impl RuleRecord {
    fn fired(id: RuleId, lower: Option<usize>, upper: Option<usize>, detail: impl Into<String>) -> Self {
        Self { id, status: RuleStatus::Fired(detail.into()), lower, upper }
    }

    fn not_fired(id: RuleId, detail: impl Into<String>) -> Self {
        Self { id, status: RuleStatus::NotFired(detail.into()), lower: None, upper: None }
    }

    fn skipped(id: RuleId, detail: impl Into<String>) -> Self {
        Self { id, status: RuleStatus::Skipped(detail.into()), lower: None, upper: None }
    }

    pub fn fired_rule(&self) -> bool {
        matches!(self.status, RuleStatus::Fired(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremBounds {
    pub lower: usize,
    pub upper: usize,
    pub rules: Vec<RuleRecord>,
}

pub fn apply_rules(an: &Analysis) -> TheoremBounds {
    let n = an.n();
    let mut lower = 2;
    let mut upper = n;
    let mut rules = Vec::new();

    let gate = if an.degenerate {
        Some("numerical range is a segment or a point")
    } else if !an.irreducible() {
        Some("matrix is unitarily reducible")
    } else {
        None
    };

    // R1
    if an.degenerate {
        rules.push(RuleRecord::skipped(RuleId::R1, "numerical range is a segment or a point"));
    } else if n < 3 {
        rules.push(RuleRecord::skipped(RuleId::R1, "n < 3"));
    } else if !an.seeds.is_empty() {
        lower = lower.max(3);
        rules.push(RuleRecord::fired(RuleId::R1, Some(3), None, format!("{} seed(s) detected", an.seeds.len())));
    } else {
        rules.push(RuleRecord::not_fired(RuleId::R1, "no seeds"));
    }

    // R2
    match gate {
        Some(reason) => rules.push(RuleRecord::skipped(RuleId::R2, reason)),
        None => match &an.two_eigenvalue_angles {
            AngleSet::All => {
                lower = lower.max(n);
                upper = upper.min(n);
                rules.push(RuleRecord::fired(RuleId::R2, Some(n), Some(n), "every pencil angle has two distinct eigenvalues"));
            }
            AngleSet::Finite(angles) if !angles.is_empty() => {
                lower = lower.max(n);
                upper = upper.min(n);
                rules.push(RuleRecord::fired(
                    RuleId::R2,
                    Some(n),
                    Some(n),
                    format!("two distinct eigenvalues at theta = {}", fmt_angles(angles)),
                ));
            }
            AngleSet::Finite(_) => {
                upper = upper.min(n - 1);
                rules.push(RuleRecord::fired(RuleId::R2, None, Some(n - 1), "no pencil angle has only two distinct eigenvalues"));
            }
        },
    }

    // R3 and R4
    if n != 4 {
        rules.push(RuleRecord::skipped(RuleId::R3, "n != 4"));
        rules.push(RuleRecord::skipped(RuleId::R4, "n != 4"));
    } else if let Some(reason) = gate {
        rules.push(RuleRecord::skipped(RuleId::R3, reason));
        rules.push(RuleRecord::skipped(RuleId::R4, reason));
    } else {
        let triple = an.singularities.iter().find(|p| p.order >= 3);
        let pair = an.collinear.iter().find(|g| g.len() >= 2);
        if let Some(p) = triple {
            lower = lower.max(4);
            upper = upper.min(4);
            rules.push(RuleRecord::fired(
                RuleId::R3,
                Some(4),
                Some(4),
                format!("order-{} real point at theta = {}", p.order, fmt(p.theta)),
            ));
        } else if let Some(g) = pair {
            lower = lower.max(4);
            upper = upper.min(4);
            rules.push(RuleRecord::fired(
                RuleId::R3,
                Some(4),
                Some(4),
                format!("{} singular points on the line at theta = {}", g.len(), fmt(g[0].theta)),
            ));
        } else {
            upper = upper.min(3);
            rules.push(RuleRecord::fired(RuleId::R3, None, Some(3), "no order-3 point and no collinear singular pair"));
        }

        let seeded: Vec<_> = an.singularities.iter().filter(|p| p.on_boundary).collect();
        if an.seeds.is_empty() {
            rules.push(RuleRecord::not_fired(RuleId::R4, "no seeds"));
        } else if triple.is_some() || pair.is_some() || seeded.iter().any(|p| p.order != 2) {
            rules.push(RuleRecord::not_fired(RuleId::R4, "a seed singularity has order > 2 or singular points are collinear"));
        } else {
            lower = lower.max(3);
            upper = upper.min(3);
            rules.push(RuleRecord::fired(
                RuleId::R4,
                Some(3),
                Some(3),
                format!("{} order-2 seed singularities, pairwise non-collinear", seeded.len()),
            ));
        }
    }

    rules.push(RuleRecord::fired(RuleId::R5, Some(2), Some(n), format!("n = {n}")));
    TheoremBounds { lower, upper, rules }
}

fn fmt(x: f64) -> String {
    format!("{x:.12}")
}

fn fmt_angles(v: &[f64]) -> String {
    v.iter().map(|&x| fmt(x)).collect::<Vec<_>>().join(", ")
}
