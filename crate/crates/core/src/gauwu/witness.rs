//! Certified orthonormal witness sets: unit vectors whose images `<Av, v>`
//! all lie on the boundary of `W(A)`.
//!
//! Boundary-attaining vectors are exactly the top eigenvectors of some
//! `H(theta)`. Repeated extreme eigenvalues give whole subspaces of them
//! ("exact blocks"); simple ones give a one-parameter family searched by a
//! clique search on grid angles followed by Levenberg-Marquardt refinement of
//! the angles until the inner products vanish.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Result;
use crate::linalg::{hermitian_eigen, orthonormalize, quadratic_form, subspace_orthogonal_to, CMatrix, CVector};
use crate::spectral::angle_distance;

/// Compatibility slack added to the Lipschitz estimate of the coarse graph.
const COARSE_BASE: f64 = 0.05;
const COARSE_MAX: f64 = 0.9;
const MAX_CLIQUES: usize = 4096;
const MAX_NODES: usize = 2_000_000;
const MAX_REFINE: usize = 64;
const LM_ITERS: usize = 80;
const FD_STEP: f64 = 1e-7;
const MAX_ANGLE_STEP: f64 = 0.2;
const MAX_SNAP_COMBINATIONS: usize = 4096;
const MAX_SNAP_WORK: usize = 1 << 20;

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serialize_vector")]
    pub vector: CVector,
    pub image: Complex64,
    /// Signed distance of the image to the boundary (non-positive inside).
    pub distance: f64,
}

fn serialize_vector<S: serde::Serializer>(v: &CVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
}

#[derive(Debug, Clone)]
struct Candidate {
    /// Index of the grid slice.
    grid: usize,
    theta: f64,
    vector: CVector,
    pivot: usize,
    /// Angular rate of change of the eigenvector.
    rate: f64,
}

fn pivot_of(v: &CVector) -> usize {
    v.icamax()
}

/// Phase-fixes `v` so that its `pivot` component is real and positive.
fn fix_phase(mut v: CVector, pivot: usize) -> CVector {
    let z = v[pivot];
    if z.norm() > 0.0 {
        v *= z.conj() / z.norm();
    }
    v
}

fn top_vector(an: &Analysis, theta: f64, pivot: usize) -> Result<CVector> {
    let e = hermitian_eigen(&an.pencil.at(theta), theta)?;
    Ok(fix_phase(e.vectors.column(0).into_owned(), pivot))
}

/// Checks a proposed set: raw pairwise inner products within `tol_orth`, then
/// a stabilizing re-orthonormalization and a boundary test of every image.
pub fn certify(an: &Analysis, vectors: &[CVector]) -> Result<Option<Vec<Witness>>> {
    let unit: Vec<CVector> = vectors.iter().map(|v| v.normalize()).collect();
    for i in 0..unit.len() {
        for j in i + 1..unit.len() {
            if unit[i].dotc(&unit[j]).norm() > an.config.tol_orth {
                return Ok(None);
            }
        }
    }
    let Some(ortho) = orthonormalize(&unit) else {
        return Ok(None);
    };
    let tol = an.boundary_tolerance();
    let mut out = Vec::with_capacity(ortho.len());
    for v in ortho {
        let image = quadratic_form(an.matrix.as_matrix(), &v);
        let distance = an.support.distance(image)?;
        if distance.abs() > tol {
            return Ok(None);
        }
        out.push(Witness { vector: v, image, distance });
    }
    Ok(Some(out))
}

/// Independent re-check of a witness set against the orthonormality and
/// boundary contracts.
pub fn verify_witnesses(an: &Analysis, witnesses: &[Witness]) -> Result<bool> {
    for (i, w) in witnesses.iter().enumerate() {
        if (w.vector.norm() - 1.0).abs() > an.config.tol_orth {
            return Ok(false);
        }
        for u in &witnesses[i + 1..] {
            if w.vector.dotc(&u.vector).norm() > an.config.tol_orth {
                return Ok(false);
            }
        }
        let image = quadratic_form(an.matrix.as_matrix(), &w.vector);
        if (image - w.image).norm() > 1e-12 * an.scale.max(1.0) {
            return Ok(false);
        }
        if an.support.distance(image)?.abs() > an.boundary_tolerance() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum and minimum eigenvectors at the grid angle with the widest
/// spectrum; always a valid pair.
fn floor_pair(an: &Analysis) -> Vec<CVector> {
    let n = an.n();
    let slice = an
        .scan
        .slices
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| {
            let wa = a.eigenvalues[0] - a.eigenvalues[n - 1];
            let wb = b.eigenvalues[0] - b.eigenvalues[n - 1];
            wa.total_cmp(&wb).then(j.cmp(i))
        })
        .map(|(_, s)| s)
        .expect("scan has slices");
    vec![slice.basis.column(0).into_owned(), slice.basis.column(n - 1).into_owned()]
}

/// Angles with a repeated extreme eigenvalue, in scan order.
fn block_angles(an: &Analysis) -> Vec<f64> {
    let n = an.n();
    let mut angles: Vec<f64> = an
        .scan
        .events
        .iter()
        .filter(|e| e.first_branch == 0 || e.first_branch + e.multiplicity == n)
        .map(|e| e.theta)
        .collect();
    if an.scan.persistent.contains(&0) || an.scan.persistent.contains(&(n - 2)) {
        angles.push(0.0);
    }
    let mut out: Vec<f64> = Vec::new();
    for a in angles {
        if !out.iter().any(|&b| angle_distance(a, b) < 1e-9) {
            out.push(a);
        }
    }
    out
}

/// Extreme eigenspaces at `theta`: the top cluster basis and the bottom one
/// (the latter is the top eigenspace of `H(theta + pi)`).
fn extreme_spaces(an: &Analysis, theta: f64) -> Result<(CMatrix, Option<CMatrix>)> {
    let slice = crate::spectral::spectrum_slice(&an.pencil, theta, an.scan.tol_cluster)?;
    let top = slice.top().clone();
    let bottom = slice.bottom().clone();
    let tb = slice.cluster_basis(&top);
    let bb = (bottom.start != top.start).then(|| slice.cluster_basis(&bottom));
    Ok((tb, bb))
}

/// Anchor sets built from exact blocks, largest first; each is orthonormal
/// and boundary-attaining by construction.
fn exact_blocks(an: &Analysis) -> Result<Vec<Vec<CVector>>> {
    let angles = block_angles(an);
    let mut spaces: Vec<CMatrix> = Vec::new();
    let mut anchors: Vec<Vec<CVector>> = Vec::new();
    for &theta in &angles {
        let (tb, bb) = extreme_spaces(an, theta)?;
        let cols = |m: &CMatrix| (0..m.ncols()).map(|j| m.column(j).into_owned()).collect::<Vec<CVector>>();
        let mut both = cols(&tb);
        if let Some(b) = &bb {
            both.extend(cols(b));
            if b.ncols() >= 2 {
                anchors.push(cols(b));
            }
        }
        if tb.ncols() >= 2 {
            anchors.push(cols(&tb));
        }
        anchors.push(both);
        spaces.push(tb);
        if let Some(b) = bb {
            spaces.push(b);
        }
    }
    // Greedy extension of each anchor by the other exact subspaces.
    let tol = an.config.tol_orth;
    for anchor in anchors.iter_mut() {
        for s in &spaces {
            let extra = subspace_orthogonal_to(s, anchor, tol);
            anchor.extend(extra);
        }
    }
    anchors.retain(|a| a.len() >= 2);
    anchors.sort_by_key(|a| std::cmp::Reverse(a.len()));
    Ok(anchors)
}

fn candidate_pool(an: &Analysis) -> Vec<Candidate> {
    let slices = &an.scan.slices;
    let g = slices.len();
    let step = TAU / g as f64;
    let simple: Vec<bool> = slices.iter().map(|s| s.top().multiplicity == 1).collect();
    let mut pool = Vec::new();
    for k in 0..g {
        if !simple[k] {
            continue;
        }
        let v: CVector = slices[k].basis.column(0).into_owned();
        let mut rate: f64 = 0.0;
        for nb in [(k + g - 1) % g, (k + 1) % g] {
            if simple[nb] {
                let w = slices[nb].basis.column(0);
                let overlap = v.dotc(&w.into_owned()).norm().min(1.0);
                rate = rate.max((1.0 - overlap * overlap).sqrt() / step);
            } else {
                rate = f64::INFINITY;
            }
        }
        let pivot = pivot_of(&v);
        pool.push(Candidate { grid: k, theta: slices[k].theta, vector: fix_phase(v, pivot), pivot, rate });
    }
    pool
}

/// Farthest-angle subsampling down to `budget` members; deterministic.
fn prune(pool: Vec<Candidate>, budget: usize) -> Vec<Candidate> {
    if pool.len() <= budget {
        return pool;
    }
    let mut chosen = vec![0usize];
    let mut dist: Vec<f64> = pool.iter().map(|c| angle_distance(c.theta, pool[0].theta)).collect();
    while chosen.len() < budget {
        let mut best = 0;
        for i in 0..pool.len() {
            if dist[i] > dist[best] {
                best = i;
            }
        }
        chosen.push(best);
        for i in 0..pool.len() {
            dist[i] = dist[i].min(angle_distance(pool[i].theta, pool[best].theta));
        }
    }
    chosen.sort_unstable();
    chosen.into_iter().map(|i| pool[i].clone()).collect()
}

fn spacing(pool: &[Candidate]) -> Vec<f64> {
    let m = pool.len();
    (0..m)
        .map(|i| {
            if m < 2 {
                return TAU;
            }
            let a = angle_distance(pool[i].theta, pool[(i + m - 1) % m].theta);
            let b = angle_distance(pool[i].theta, pool[(i + 1) % m].theta);
            a.max(b)
        })
        .collect()
}

fn slack(c: &Candidate, h: f64) -> f64 {
    (c.rate * h * 0.6).min(COARSE_MAX)
}

/// All simple grid candidates, addressable by grid index.
struct Grid {
    full: Vec<Candidate>,
    by_grid: Vec<Option<usize>>,
}

fn with_anchor(anchor: &[CVector], members: &[&Candidate]) -> Vec<CVector> {
    let mut all = anchor.to_vec();
    all.extend(members.iter().map(|c| c.vector.clone()));
    all
}

fn overlap_score(anchor: &[CVector], members: &[&Candidate]) -> f64 {
    let mut s = 0.0;
    for (i, c) in members.iter().enumerate() {
        for f in anchor {
            s += f.dotc(&c.vector).norm_sqr();
        }
        for d in &members[i + 1..] {
            s += c.vector.dotc(&d.vector).norm_sqr();
        }
    }
    s
}

/// Moves each member to the full-grid neighbour (within `window` slices)
/// minimizing the total squared overlap, so that exact grid solutions are
/// found before any continuous refinement.
fn snap<'a>(anchor: &[CVector], grid: &'a Grid, members: &[&'a Candidate], window: usize) -> Vec<&'a Candidate> {
    let g = grid.by_grid.len();
    let options: Vec<Vec<&Candidate>> = members
        .iter()
        .map(|c| {
            (0..=2 * window)
                .filter_map(|d| grid.by_grid[(c.grid + g + d - window) % g])
                .map(|i| &grid.full[i])
                .collect()
        })
        .collect();
    let combos = options.iter().try_fold(1usize, |acc, o| acc.checked_mul(o.len().max(1)));
    let mut best: Vec<&Candidate> = members.to_vec();
    let mut best_score = overlap_score(anchor, &best);
    if combos.is_some_and(|c| c <= MAX_SNAP_COMBINATIONS) {
        let mut idx = vec![0usize; options.len()];
        loop {
            let sel: Vec<&Candidate> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
            let sc = overlap_score(anchor, &sel);
            if sc < best_score {
                best_score = sc;
                best = sel;
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    } else {
        // Coordinate descent.
        let mut improved = true;
        while improved {
            improved = false;
            for k in 0..best.len() {
                for &o in &options[k] {
                    let mut sel = best.clone();
                    sel[k] = o;
                    let sc = overlap_score(anchor, &sel);
                    if sc < best_score {
                        best_score = sc;
                        best = sel;
                        improved = true;
                    }
                }
            }
        }
    }
    best
}

/// Enumerates cliques of size `s` in increasing index order, with at most
/// `MAX_CLIQUES / m` cliques per lowest vertex so that every angular region
/// is represented.
fn cliques(adj: &[Vec<bool>], s: usize) -> Vec<Vec<usize>> {
    struct Search<'a> {
        adj: &'a [Vec<bool>],
        s: usize,
        cap: usize,
        out: Vec<Vec<usize>>,
        nodes: usize,
    }
    impl Search<'_> {
        fn extend(&mut self, r: &mut Vec<usize>, cand: &[usize], found: &mut usize) {
            if r.len() == self.s {
                self.out.push(r.clone());
                *found += 1;
                return;
            }
            for (i, &v) in cand.iter().enumerate() {
                if r.len() + cand.len() - i < self.s || *found >= self.cap || self.nodes >= MAX_NODES {
                    return;
                }
                self.nodes += 1;
                let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| self.adj[v][w]).collect();
                r.push(v);
                self.extend(r, &next, found);
                r.pop();
            }
        }
    }
    let m = adj.len();
    let mut search = Search { adj, s, cap: (MAX_CLIQUES / m.max(1)).max(8), out: Vec::new(), nodes: 0 };
    for (root, row) in adj.iter().enumerate() {
        let next: Vec<usize> = (root + 1..m).filter(|&w| row[w]).collect();
        let mut found = 0;
        search.extend(&mut vec![root], &next, &mut found);
    }
    search.out
}

fn residuals(anchor: &[CVector], vs: &[CVector]) -> Vec<f64> {
    let mut r = Vec::new();
    for i in 0..vs.len() {
        for f in anchor {
            let z = f.dotc(&vs[i]);
            r.push(z.re);
            r.push(z.im);
        }
        for w in &vs[i + 1..] {
            let z = vs[i].dotc(w);
            r.push(z.re);
            r.push(z.im);
        }
    }
    r
}

fn eval(an: &Analysis, anchor: &[CVector], thetas: &[f64], pivots: &[usize]) -> Result<(Vec<f64>, Vec<CVector>)> {
    let vs = thetas.iter().zip(pivots).map(|(&t, &p)| top_vector(an, t, p)).collect::<Result<Vec<_>>>()?;
    Ok((residuals(anchor, &vs), vs))
}

fn sup(r: &[f64]) -> f64 {
    r.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn sumsq(r: &[f64]) -> f64 {
    r.iter().map(|x| x * x).sum()
}

/// Levenberg-Marquardt on the candidate angles until every inner product with
/// the anchor and between candidates vanishes.
fn refine(an: &Analysis, anchor: &[CVector], start: &[&Candidate]) -> Result<Option<Vec<CVector>>> {
    let target = an.config.tol_orth * 1e-2;
    let mut thetas: Vec<f64> = start.iter().map(|c| c.theta).collect();
    let pivots: Vec<usize> = start.iter().map(|c| c.pivot).collect();
    let (mut r, mut vs) = eval(an, anchor, &thetas, &pivots)?;
    if r.is_empty() {
        return Ok(Some(vs));
    }
    let s = thetas.len();
    let mut mu = 1e-3;
    for _ in 0..LM_ITERS {
        if sup(&r) < target {
            return Ok(Some(vs));
        }
        let mut jac = DMatrix::<f64>::zeros(r.len(), s);
        for k in 0..s {
            let mut t = thetas.clone();
            t[k] += FD_STEP;
            let (rk, _) = eval(an, anchor, &t, &pivots)?;
            for (row, (a, b)) in rk.iter().zip(&r).enumerate() {
                jac[(row, k)] = (a - b) / FD_STEP;
            }
        }
        let rv = DVector::from_column_slice(&r);
        let jtj = jac.transpose() * &jac;
        let jtr = jac.transpose() * rv;
        let mut improved = false;
        while mu < 1e10 {
            let mut m = jtj.clone();
            for k in 0..s {
                m[(k, k)] += mu * (jtj[(k, k)] + 1e-12);
            }
            let Some(delta) = m.lu().solve(&(-&jtr)) else {
                mu *= 10.0;
                continue;
            };
            let trial: Vec<f64> = thetas
                .iter()
                .zip(delta.iter())
                .map(|(t, d)| t + d.clamp(-MAX_ANGLE_STEP, MAX_ANGLE_STEP))
                .collect();
            let (rt, vt) = eval(an, anchor, &trial, &pivots)?;
            if sumsq(&rt) < sumsq(&r) {
                thetas = trial;
                r = rt;
                vs = vt;
                mu = (mu / 3.0).max(1e-12);
                improved = true;
                break;
            }
            mu *= 4.0;
        }
        if !improved {
            break;
        }
    }
    Ok((sup(&r) < target).then_some(vs))
}

/// Cliques of grid candidates that are already orthogonal to `tol_orth`.
fn exact_grid_search(an: &Analysis, anchor: &[CVector], grid: &Grid, need: usize) -> Result<Option<Vec<Witness>>> {
    let tol = an.config.tol_orth;
    let idx: Vec<usize> = (0..grid.full.len())
        .filter(|&i| anchor.iter().all(|f| f.dotc(&grid.full[i].vector).norm() <= tol))
        .collect();
    if idx.len() < need {
        return Ok(None);
    }
    let m = idx.len();
    let mut adj = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let ok = grid.full[idx[a]].vector.dotc(&grid.full[idx[b]].vector).norm() <= tol;
            adj[a][b] = ok;
            adj[b][a] = ok;
        }
    }
    for c in cliques(&adj, need).into_iter().take(MAX_REFINE) {
        let members: Vec<&Candidate> = c.iter().map(|&a| &grid.full[idx[a]]).collect();
        if let Some(w) = certify(an, &with_anchor(anchor, &members))? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Tries to find `need` simple candidates which, with `anchor`, form a
/// certified witness set.
fn search_with_anchor(
    an: &Analysis,
    anchor: &[CVector],
    grid: &Grid,
    pool: &[Candidate],
    h: &[f64],
    need: usize,
) -> Result<Option<Vec<Witness>>> {
    if let Some(w) = exact_grid_search(an, anchor, grid, need)? {
        return Ok(Some(w));
    }
    let window = grid.by_grid.len().div_ceil(2 * pool.len().max(1)) + 1;
    // Candidates compatible with the anchor at coarse resolution.
    let idx: Vec<usize> = (0..pool.len())
        .filter(|&i| {
            let tol = COARSE_BASE + slack(&pool[i], h[i]);
            anchor.iter().all(|f| f.dotc(&pool[i].vector).norm() <= tol)
        })
        .collect();
    if idx.len() < need {
        return Ok(None);
    }
    let m = idx.len();
    let mut adj = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let (p, q) = (&pool[idx[a]], &pool[idx[b]]);
            let o = p.vector.dotc(&q.vector).norm();
            let tol = (COARSE_BASE + slack(p, h[idx[a]]) + slack(q, h[idx[b]])).min(COARSE_MAX);
            adj[a][b] = o <= tol;
            adj[b][a] = adj[a][b];
        }
    }
    let mut found = cliques(&adj, need);
    let score = |c: &Vec<usize>| {
        let members: Vec<&Candidate> = c.iter().map(|&a| &pool[idx[a]]).collect();
        overlap_score(anchor, &members)
    };
    let mut scored: Vec<(f64, Vec<usize>)> = found.drain(..).map(|c| (score(&c), c)).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    // Exact grid solutions first, then continuous refinement.
    let combos = (2 * window + 1).saturating_pow(need as u32);
    let snap_count = if scored.len().saturating_mul(combos) <= MAX_SNAP_WORK { scored.len() } else { MAX_REFINE };
    let mut starts: Vec<(f64, Vec<&Candidate>)> = scored
        .into_iter()
        .take(snap_count)
        .map(|(_, c)| {
            let members: Vec<&Candidate> = c.iter().map(|&a| &pool[idx[a]]).collect();
            let snapped = snap(anchor, grid, &members, window);
            (overlap_score(anchor, &snapped), snapped)
        })
        .collect();
    starts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let starts: Vec<Vec<&Candidate>> = starts.into_iter().take(MAX_REFINE).map(|(_, c)| c).collect();
    for start in &starts {
        if overlap_score(anchor, start) <= an.config.tol_orth.powi(2) {
            if let Some(w) = certify(an, &with_anchor(anchor, start))? {
                return Ok(Some(w));
            }
        }
    }
    for start in &starts {
        if let Some(vs) = refine(an, anchor, start)? {
            let mut all = anchor.to_vec();
            all.extend(vs);
            if let Some(w) = certify(an, &all)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Largest certified witness set found; never smaller than 2.
pub fn search_witnesses(an: &Analysis) -> Result<Vec<Witness>> {
    let n = an.n();
    let mut best = match certify(an, &floor_pair(an))? {
        Some(w) => w,
        None => {
            return Err(crate::error::Error::Numerical(
                "extreme eigenvector pair failed boundary certification".into(),
            ))
        }
    };
    let anchors = exact_blocks(an)?;
    for a in &anchors {
        if a.len() > best.len() {
            if let Some(w) = certify(an, a)? {
                best = w;
            }
        }
    }
    let full = candidate_pool(an);
    let mut by_grid = vec![None; an.scan.slices.len()];
    for (i, c) in full.iter().enumerate() {
        by_grid[c.grid] = Some(i);
    }
    let grid = Grid { full: full.clone(), by_grid };
    let pool = prune(full, an.config.budget);
    let h = spacing(&pool);
    let mut with_empty: Vec<Vec<CVector>> = anchors;
    with_empty.push(Vec::new());
    while best.len() < n {
        let target = best.len() + 1;
        let mut next = None;
        for anchor in &with_empty {
            if anchor.len() >= target {
                continue;
            }
            if let Some(w) = search_with_anchor(an, anchor, &grid, &pool, &h, target - anchor.len())? {
                next = Some(w);
                break;
            }
        }
        match next {
            Some(w) => best = w,
            None => break,
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;
    use crate::fixtures;

    fn analysis(a: &crate::ComplexMatrix) -> Analysis {
        Analysis::new(a, &RunConfig::default()).unwrap()
    }

    #[test]
    fn jordan_gives_two() {
        let an = analysis(&fixtures::jordan2());
        let w = search_witnesses(&an).unwrap();
        assert_eq!(w.len(), 2);
        assert!(verify_witnesses(&an, &w).unwrap());
    }

    #[test]
    fn collinear_pair_gives_four() {
        let an = analysis(&fixtures::collinear_pair());
        let w = search_witnesses(&an).unwrap();
        assert_eq!(w.len(), 4);
        assert!(verify_witnesses(&an, &w).unwrap());
    }

    #[test]
    fn two_flat_gives_three() {
        let an = analysis(&fixtures::two_flat_portions());
        let w = search_witnesses(&an).unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn no_singularity_finds_basis_images() {
        let an = analysis(&fixtures::no_singularity());
        let w = search_witnesses(&an).unwrap();
        assert_eq!(w.len(), 3);
        for (_, target) in fixtures::no_singularity_boundary_images() {
            assert!(w.iter().any(|x| (x.image - target).norm() < 1e-6), "missing {target}");
        }
    }

    #[test]
    fn no_singularity_rotated_off_grid() {
        let a = fixtures::no_singularity().rotated(0.0123);
        let an = analysis(&a);
        assert_eq!(search_witnesses(&an).unwrap().len(), 3);
    }

    #[test]
    fn certify_rejects_interior_images() {
        let an = analysis(&fixtures::jordan2());
        let e1 = CVector::from_vec(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
        assert!(certify(&an, &[e1]).unwrap().is_none());
    }

    #[test]
    fn segment_matrix_is_all_boundary() {
        let d = crate::ComplexMatrix::diagonal(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.3, 0.0),
        ])
        .unwrap();
        let an = analysis(&d);
        assert_eq!(search_witnesses(&an).unwrap().len(), 3);
    }
}
