//! Angle sweep of the pencil `H(theta) = cos(theta) H1 + sin(theta) H2`.
//!
//! The multiplicity structure of `H(theta)` encodes every real point of the
//! base curve: an eigenvalue `lambda` of multiplicity `m` is a point
//! `(cos theta : sin theta : -lambda)` of order `m`.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::Result;
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, CMatrix};
use crate::matrix::HermitianPencil;

pub const DEFAULT_GRID: usize = 720;
pub const DEFAULT_TOL_CLUSTER_REL: f64 = 1e-7;
/// Angular resolution of gap minimization.
pub const REFINE_RESOLUTION: f64 = 1e-12;
/// Events closer than this (in angle) describe the same coincidence.
pub const EVENT_DEDUP: f64 = 1e-9;
/// Gap dips below `DIP_REL * scale` are always refined.
pub const DIP_REL: f64 = 1e-3;

pub fn pencil_at(p: &HermitianPencil, theta: f64) -> CMatrix {
    p.at(theta)
}

/// Maps an angle into `[0, 2 pi)`, snapping values within `EVENT_DEDUP` of
/// `2 pi` to zero.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if TAU - t < EVENT_DEDUP {
        0.0
    } else {
        t
    }
}

/// Distance between two angles on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// A run of eigenvalues (descending order) chained by gaps below tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub value: f64,
    pub start: usize,
    pub multiplicity: usize,
}

impl Cluster {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.multiplicity
    }
}

pub fn cluster_values(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        if k == values.len() || values[k - 1] - values[k] >= tol {
            let run = &values[start..k];
            out.push(Cluster {
                value: run.iter().sum::<f64>() / run.len() as f64,
                start,
                multiplicity: run.len(),
            });
            start = k;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SpectrumSlice {
    pub theta: f64,
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
    /// Orthonormal eigenvectors as columns, aligned with `eigenvalues`.
    pub basis: CMatrix,
}

impl SpectrumSlice {
    pub fn top(&self) -> &Cluster {
        &self.clusters[0]
    }

    pub fn bottom(&self) -> &Cluster {
        self.clusters.last().expect("non-empty spectrum")
    }

    pub fn cluster_of(&self, index: usize) -> &Cluster {
        self.clusters
            .iter()
            .find(|c| c.indices().contains(&index))
            .expect("index within spectrum")
    }

    /// Columns of `basis` spanning the eigenspace of `cluster`.
    pub fn cluster_basis(&self, cluster: &Cluster) -> CMatrix {
        self.basis.columns(cluster.start, cluster.multiplicity).into_owned()
    }
}

pub fn spectrum_slice(p: &HermitianPencil, theta: f64, tol_cluster: f64) -> Result<SpectrumSlice> {
    let eig = hermitian_eigen(&p.at(theta), theta)?;
    let clusters = cluster_values(&eig.values, tol_cluster);
    Ok(SpectrumSlice { theta, eigenvalues: eig.values, clusters, basis: eig.vectors })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    /// The largest eigenvalue is repeated (a flat portion or singular
    /// boundary point of the numerical range).
    MaxRepeated,
    /// The smallest eigenvalue is repeated; the same event appears as
    /// `MaxRepeated` at `theta + pi`.
    MinRepeated,
    /// Coincidence strictly inside the spectrum.
    Interior,
    /// The clustered spectrum has exactly two distinct values.
    TwoDistinct,
}

impl EventKind {
    pub fn label(self) -> &'static str {
        match self {
            EventKind::MaxRepeated => "max-eigenvalue-repeated",
            EventKind::MinRepeated => "min-eigenvalue-repeated",
            EventKind::Interior => "interior-coincidence",
            EventKind::TwoDistinct => "exactly-two-distinct",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MultiplicityEvent {
    pub theta: f64,
    pub kind: EventKind,
    pub lambda: f64,
    pub multiplicity: usize,
    /// Position of the coinciding cluster in the descending spectrum.
    pub first_branch: usize,
    /// Smallest gap inside the cluster at `theta`.
    pub gap: f64,
}

impl MultiplicityEvent {
    pub fn is_max(&self) -> bool {
        self.first_branch == 0
    }
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub slices: Vec<SpectrumSlice>,
    pub events: Vec<MultiplicityEvent>,
    /// Adjacent branch pairs `(j, j+1)` whose gap stays below tolerance on the
    /// whole grid (reducible or degenerate pencils).
    pub persistent: Vec<usize>,
    pub tol_cluster: f64,
    pub scale: f64,
}

impl ScanResult {
    pub fn grid_size(&self) -> usize {
        self.slices.len()
    }

    pub fn max_events(&self) -> impl Iterator<Item = &MultiplicityEvent> {
        self.events.iter().filter(|e| e.is_max())
    }
}

/// Sweeps `theta_k = 2 pi k / grid_size`, detects dips of adjacent gaps and
/// refines each to a coincidence event. `tol_cluster` is absolute.
pub fn scan(p: &HermitianPencil, grid_size: usize, tol_cluster: f64) -> Result<ScanResult> {
    assert!(grid_size >= 8, "grid_size must be at least 8");
    let n = p.n();
    let scale = p.scale();
    let slices: Vec<SpectrumSlice> = (0..grid_size)
        .into_par_iter()
        .map(|k| spectrum_slice(p, TAU * k as f64 / grid_size as f64, tol_cluster))
        .collect::<Result<_>>()?;

    let step = TAU / grid_size as f64;
    let dip_threshold = (DIP_REL.max(4.0 * step)) * scale;
    let mut persistent = Vec::new();
    let mut brackets = Vec::new();
    for j in 0..n.saturating_sub(1) {
        let gaps: Vec<f64> =
            slices.iter().map(|s| s.eigenvalues[j] - s.eigenvalues[j + 1]).collect();
        if gaps.iter().all(|&g| g < tol_cluster) {
            persistent.push(j);
            continue;
        }
        for k in 0..grid_size {
            let prev = gaps[(k + grid_size - 1) % grid_size];
            let next = gaps[(k + 1) % grid_size];
            let g = gaps[k];
            if g <= prev && g <= next && g < dip_threshold {
                let centre = slices[k].theta;
                brackets.push((centre - step, centre + step, j));
            }
        }
    }

    let refined: Vec<Option<MultiplicityEvent>> = brackets
        .par_iter()
        .map(|&(lo, hi, j)| refine_event(p, lo, hi, j, tol_cluster))
        .collect::<Result<_>>()?;
    let mut events: Vec<MultiplicityEvent> = Vec::new();
    for ev in refined.into_iter().flatten() {
        if !events.iter().any(|e| {
            angle_distance(e.theta, ev.theta) < EVENT_DEDUP && e.first_branch == ev.first_branch
        }) {
            events.push(ev);
        }
    }
    events.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(a.first_branch.cmp(&b.first_branch)));

    Ok(ScanResult { slices, events, persistent, tol_cluster, scale })
}

/// Golden-section minimization of `g(theta) = lambda_j - lambda_{j+1}` on
/// `[theta_lo, theta_hi]`. Returns an event iff the minimal gap is below
/// `tol_cluster` (absolute); near misses (avoided crossings) give `None`.
pub fn refine_event(
    p: &HermitianPencil,
    theta_lo: f64,
    theta_hi: f64,
    branch: usize,
    tol_cluster: f64,
) -> Result<Option<MultiplicityEvent>> {
    let gap = |theta: f64| -> Result<f64> {
        let v = hermitian_eigenvalues(&p.at(theta), theta)?;
        Ok(v[branch] - v[branch + 1])
    };
    let (theta, g) = golden_min(gap, theta_lo, theta_hi, REFINE_RESOLUTION)?;
    if g >= tol_cluster {
        return Ok(None);
    }
    let theta = normalize_angle(theta);
    let slice = spectrum_slice(p, theta, tol_cluster)?;
    let cluster = slice.cluster_of(branch).clone();
    if cluster.multiplicity < 2 {
        return Ok(None);
    }
    let n = slice.eigenvalues.len();
    let kind = if n >= 3 && slice.clusters.len() == 2 {
        EventKind::TwoDistinct
    } else if cluster.start == 0 {
        EventKind::MaxRepeated
    } else if cluster.start + cluster.multiplicity == n {
        EventKind::MinRepeated
    } else {
        EventKind::Interior
    };
    let inner_gap = cluster
        .indices()
        .skip(1)
        .map(|k| slice.eigenvalues[k - 1] - slice.eigenvalues[k])
        .fold(0.0_f64, f64::max);
    Ok(Some(MultiplicityEvent {
        theta,
        kind,
        lambda: cluster.value,
        multiplicity: cluster.multiplicity,
        first_branch: cluster.start,
        gap: inner_gap,
    }))
}

/// Golden-section search for a minimum of a unimodal function.
pub fn golden_min<F>(mut f: F, mut lo: f64, mut hi: f64, resolution: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > resolution {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Angles in `[0, pi)` where `H(theta)` has exactly two distinct eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub enum AngleSet {
    All,
    Finite(Vec<f64>),
}

impl AngleSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, AngleSet::Finite(v) if v.is_empty())
    }

    /// A representative angle, if any.
    pub fn first(&self) -> Option<f64> {
        match self {
            AngleSet::All => Some(0.0),
            AngleSet::Finite(v) => v.first().copied(),
        }
    }
}

pub fn two_eigenvalue_angles(p: &HermitianPencil, tol: f64) -> Result<AngleSet> {
    let result = scan(p, DEFAULT_GRID, tol)?;
    Ok(two_eigenvalue_angles_from(&result))
}

pub fn two_eigenvalue_angles_from(result: &ScanResult) -> AngleSet {
    if result.slices.iter().all(|s| s.clusters.len() == 2) {
        return AngleSet::All;
    }
    let mut angles: Vec<f64> = Vec::new();
    for e in result.events.iter().filter(|e| e.kind == EventKind::TwoDistinct) {
        let t = e.theta.rem_euclid(PI);
        let t = if PI - t < EVENT_DEDUP { 0.0 } else { t };
        if !angles.iter().any(|&a| (a - t).abs() < EVENT_DEDUP || PI - (a - t).abs() < EVENT_DEDUP) {
            angles.push(t);
        }
    }
    angles.sort_by(f64::total_cmp);
    AngleSet::Finite(angles)
}

/// Greedy maximal-overlap matching of eigenvectors between two consecutive
/// slices. `order[j]` is the index in `next` continuing branch `j` of `prev`;
/// ties go to the lowest index.
pub fn align_branches(prev: &SpectrumSlice, next: &SpectrumSlice) -> Vec<usize> {
    let n = prev.eigenvalues.len();
    let mut overlaps = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let o = prev.basis.column(i).dotc(&next.basis.column(j)).norm();
            overlaps.push((o, i, j));
        }
    }
    overlaps.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut order = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for (_, i, j) in overlaps {
        if order[i] == usize::MAX && !taken[j] {
            order[i] = j;
            taken[j] = true;
        }
    }
    order
}
