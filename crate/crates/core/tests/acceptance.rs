//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

mod common;

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::Instant;

use gauwu_core::gauwu::{verify_witnesses, RuleId};
use gauwu_core::linalg::{hermitian_eigenvalues, quadratic_form, CMatrix};
use gauwu_core::poly::ProjectivePoint;
use gauwu_core::spectral::spectrum_slice;
use gauwu_core::toeplitz::{block_decomposition, build_toeplitz, swap_variant, verify_toeplitz, x_matrix, ToeplitzSpec};
use gauwu_core::{
    classify, compute_base_polynomial, fixtures, hermitian_parts, is_unitarily_irreducible, toeplitz_k, Analysis,
    BasePolynomial, ComplexMatrix, GauWuResult, RunConfig,
};
use num_complex::Complex64;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn poly(a: &ComplexMatrix) -> Result<BasePolynomial, String> {
    compute_base_polynomial(&hermitian_parts(a)).map_err(err)
}

fn toeplitz(n: usize, b: Complex64, cc: Complex64) -> ComplexMatrix {
    build_toeplitz(&ToeplitzSpec::new(n, c(0.0, 0.0), b, cc))
}

fn max_rel_dev(f: &BasePolynomial, g: &BasePolynomial) -> f64 {
    let scale = f.max_abs_coefficient().max(1.0);
    f.terms().map(|(a, b, t, v)| (v - g.coefficient(a, b, t)).abs()).fold(0.0, f64::max) / scale
}

fn base_polynomial_fixture() -> Outcome {
    let f = poly(&fixtures::two_flat_portions())?;
    let expected = fixtures::two_flat_portions_base_polynomial();
    let mut worst = 0.0f64;
    for (a, b, t, v) in f.terms() {
        let want = expected.iter().find(|(e, _)| *e == (a, b, t)).map_or(0.0, |(_, w)| *w);
        let err = if want == 0.0 { v.abs() } else { ((v - want) / want).abs() };
        worst = worst.max(err);
    }
    ensure(worst <= 1e-8, || format!("worst relative coefficient error {worst:.3e}"))?;
    Ok(format!("15 coefficients, worst relative error {worst:.2e}"))
}

fn toeplitz_factorization() -> Outcome {
    let a = toeplitz(5, c(1.0, 0.0), c(2.0, 0.0));
    let f = poly(&a)?;
    let e1 = BasePolynomial::from_terms(2, &[((2, 0, 0), 9.0), ((0, 2, 0), 1.0), ((0, 0, 2), -4.0)]);
    let e2 = BasePolynomial::from_terms(2, &[((2, 0, 0), 27.0), ((0, 2, 0), 3.0), ((0, 0, 2), -4.0)]);
    let t = BasePolynomial::linear(0.0, 0.0, 1.0);
    let expected = t.product(&e1).product(&e2).scaled(1.0 / 16.0);
    let mut worst = 0.0f64;
    for (a, b, tc, v) in expected.terms() {
        worst = worst.max((f.coefficient(a, b, tc) - v).abs());
    }
    ensure(worst <= 1e-8, || format!("coefficient deviation {worst:.3e}"))?;
    let factors = [t.clone(), e1.scaled(0.25), e2.scaled(0.25)];
    ensure(f.verify_factorization(&factors, 1e-8), || "verify_factorization rejected t * E1/4 * E2/4".into())?;
    let f_swap = poly(&swap_variant(&a).map_err(err)?)?;
    ensure(f_swap.verify_factorization(&factors, 1e-8), || "swap variant does not factor".into())?;
    Ok(format!("F = t (9x^2+y^2-4t^2)(27x^2+3y^2-4t^2)/16, max deviation {worst:.2e}"))
}

fn swap_invariance() -> Outcome {
    let mut g = common::rng(3);
    let mut worst = 0.0f64;
    let mut count = 0;
    for n in 3..=8 {
        let mut pairs = 0;
        while pairs < 10 {
            let b = Complex64::from_polar(g.gen_range(0.2..2.0), g.gen_range(0.0..TAU));
            let cc = Complex64::from_polar(g.gen_range(0.2..2.0), g.gen_range(0.0..TAU));
            if (b.norm() - cc.norm()).abs() < 1e-3 {
                continue;
            }
            let a = toeplitz(n, b, cc);
            worst = worst.max(max_rel_dev(&poly(&a)?, &poly(&swap_variant(&a).map_err(err)?)?));
            pairs += 1;
            count += 1;
        }
    }
    ensure(worst <= 1e-8, || format!("max deviation {worst:.3e}"))?;
    Ok(format!("{count} matrices, max deviation {worst:.2e}"))
}

fn rule_fired(r: &GauWuResult, id: RuleId, lower: usize) -> bool {
    r.rules.iter().any(|x| x.id == id && x.fired_rule() && x.lower == Some(lower))
}

fn witnesses_valid(a: &ComplexMatrix, r: &GauWuResult) -> Result<bool, String> {
    let an = Analysis::new(a, &RunConfig::default()).map_err(err)?;
    verify_witnesses(&an, &r.witnesses).map_err(err)
}

fn gau_wu_fixtures() -> Outcome {
    let mut notes = Vec::new();

    let a = fixtures::two_flat_portions();
    let r = classify(&a).map_err(err)?;
    ensure(r.exact == Some(3), || format!("two-flat: bounds [{}, {}]", r.lower, r.upper))?;
    notes.push("two-flat 3".to_string());

    let a = fixtures::no_singularity();
    let r = classify(&a).map_err(err)?;
    ensure(r.exact == Some(3), || format!("no-singularity: bounds [{}, {}]", r.lower, r.upper))?;
    ensure(witnesses_valid(&a, &r)?, || "no-singularity: witness re-check failed".into())?;
    for (_, want) in fixtures::no_singularity_boundary_images() {
        let d = r.witnesses.iter().map(|w| (w.image - want).norm()).fold(f64::INFINITY, f64::min);
        ensure(d <= 1e-6, || format!("no-singularity: no witness image near {want} (closest {d:.2e})"))?;
    }
    notes.push("no-singularity 3 at 19i/54, 8/27, 1/2+i/2".into());

    let a = fixtures::complex_cusp();
    let r = classify(&a).map_err(err)?;
    let an = Analysis::new(&a, &RunConfig::default()).map_err(err)?;
    ensure((r.lower, r.upper) == (2, 3), || format!("cusp: bounds [{}, {}]", r.lower, r.upper))?;
    ensure(an.seeds.is_empty(), || format!("cusp: {} seeds", an.seeds.len()))?;
    notes.push("cusp [2, 3], no seeds".into());

    let spec = ToeplitzSpec::new(5, c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0));
    let t = verify_toeplitz(&spec).map_err(err)?;
    let k = toeplitz_k(5, spec.b, spec.c).map_err(err)?;
    let r = classify(&build_toeplitz(&spec)).map_err(err)?;
    ensure(k == 3 && t.witness_k == 3 && r.lower <= 3 && 3 <= r.upper, || {
        format!("T5: formula {k}, witnesses {}, bounds [{}, {}]", t.witness_k, r.lower, r.upper)
    })?;
    ensure(t.k_swap == 2 && t.witness_k_swap == 2 && t.all_pass(), || {
        format!("T5 swap: k {} witnesses {}, checks pass {}", t.k_swap, t.witness_k_swap, t.all_pass())
    })?;
    notes.push("T5 3 / swap 2".into());

    let a = fixtures::collinear_pair();
    let r = classify(&a).map_err(err)?;
    ensure(is_unitarily_irreducible(&a), || "collinear: reducible".into())?;
    ensure(r.exact == Some(4), || format!("collinear: bounds [{}, {}]", r.lower, r.upper))?;
    ensure(rule_fired(&r, RuleId::R3, 4), || "collinear: collinearity rule did not fire".into())?;
    ensure(r.witnesses.len() == 4 && witnesses_valid(&a, &r)?, || {
        format!("collinear: {} certified witnesses", r.witnesses.len())
    })?;
    notes.push("collinear 4 (rule + 4 witnesses)".into());

    Ok(notes.join("; "))
}

fn singularity_orders() -> Outcome {
    let f = poly(&fixtures::complex_cusp())?;
    for s in [1.0, -1.0] {
        let p = ProjectivePoint::new(c(0.0, s), c(1.0, 0.0), c(0.0, 0.0));
        let o = f.order_at_point(&p, 1e-6);
        ensure(o == 2, || format!("cusp: order {o} at ({}i : 1 : 0)", s))?;
    }

    let a = fixtures::two_flat_portions();
    let an = Analysis::new(&a, &RunConfig::default()).map_err(err)?;
    ensure(an.singularities.len() == 2, || format!("two-flat: {} real singular points", an.singularities.len()))?;
    for q in &an.singularities {
        let slice = spectrum_slice(&an.pencil, q.theta, an.scan.tol_cluster).map_err(err)?;
        let mult = slice
            .clusters
            .iter()
            .filter(|cl| (cl.value - q.lambda).abs() <= 1e-6 * an.scale)
            .map(|cl| cl.multiplicity)
            .max()
            .unwrap_or(0);
        let order = an.poly.order_at_point(&q.point, 1e-6);
        ensure(mult == 2 && order == 2, || format!("two-flat: multiplicity {mult}, order {order} at theta {}", q.theta))?;
    }
    Ok("cusp order 2 at (+-i:1:0); two-flat multiplicity 2 = order 2 at both points".into())
}

/// Characteristic polynomial `mu^3 - e1 mu^2 + e2 mu - e3` of a 3x3 matrix
/// from traces, principal minors and the cofactor determinant.
fn charpoly3(m: &CMatrix) -> [f64; 3] {
    let e = |i: usize, j: usize| m[(i, j)].re;
    let e1 = e(0, 0) + e(1, 1) + e(2, 2);
    let e2 = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0) + e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0) + e(1, 1) * e(2, 2)
        - e(1, 2) * e(2, 1);
    let e3 = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    [e1, e2, e3]
}

fn block_decomposition_values() -> Outcome {
    let spec = ToeplitzSpec::new(5, c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0));
    let d = block_decomposition(&spec).map_err(err)?;
    let x = x_matrix(5, spec.b);
    let xx = &x * x.adjoint();
    let [e1, e2, e3] = charpoly3(&xx);
    // mu (mu - 1)(mu - 3) = mu^3 - 4 mu^2 + 3 mu
    ensure((e1 - 4.0).abs() < 1e-14 && (e2 - 3.0).abs() < 1e-14 && e3.abs() < 1e-14, || {
        format!("oracle characteristic polynomial mu^3 - {e1} mu^2 + {e2} mu - {e3}")
    })?;
    let want = [3f64.sqrt(), 1.0];
    ensure(d.sigmas.len() == 2, || format!("{} singular values", d.sigmas.len()))?;
    let dev = d.sigmas.iter().zip(want).map(|(s, w)| (s - w).abs()).fold(0.0, f64::max);
    ensure(dev <= 1e-10, || format!("sigmas {:?}", d.sigmas))?;
    for n in 2..=32 {
        let d = block_decomposition(&ToeplitzSpec::new(n, c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0))).map_err(err)?;
        if d.sigmas.len() > 1 {
            ensure(d.sigmas[0] > d.sigmas[1], || format!("n = {n}: sigma1 not simple"))?;
        }
    }
    Ok(format!("sigmas = (sqrt 3, 1) within {dev:.1e}; Perron simple for n <= 32"))
}

fn pencil_with_multiplicity(seed: u64, n: usize, m: usize, lambda: f64) -> gauwu_core::HermitianPencil {
    let mut g = common::rng(seed);
    let u = common::haar_unitary(&mut g, n);
    let mut d = CMatrix::zeros(n, n);
    for k in 0..n {
        d[(k, k)] = c(if k < m { lambda } else { lambda - 1.0 - k as f64 }, 0.0);
    }
    gauwu_core::HermitianPencil { h1: &u * d * u.adjoint(), h2: common::random_hermitian(&mut g, n) }
}

fn same_bounds(a: &GauWuResult, b: &GauWuResult) -> bool {
    (a.lower, a.upper, a.exact) == (b.lower, b.upper, b.exact)
}

fn property_suites() -> Outcome {
    let mut g = common::rng(7);

    let mut rot_worst = 0.0f64;
    let mut residue_worst = 0.0f64;
    for k in 0..20 {
        let a = common::random_matrix(&mut g, 3 + k % 2);
        let theta = g.gen_range(0.0..TAU);
        let f = poly(&a)?;
        rot_worst = rot_worst.max(f.rotate(theta).relative_distance(&poly(&a.rotated(theta))?).unwrap_or(f64::INFINITY));
        let b = common::random_matrix(&mut g, 2 + k % 5);
        let fb = poly(&b)?;
        residue_worst = residue_worst.max(fb.imag_residue() / fb.max_abs_coefficient());
    }
    ensure(rot_worst <= 1e-8, || format!("rotation equivariance {rot_worst:.3e}"))?;
    ensure(residue_worst <= 1e-8, || format!("imaginary residue {residue_worst:.3e}"))?;

    for (m, n) in [(2, 4), (3, 5)] {
        let p = pencil_with_multiplicity(90 + m as u64, n, m, 0.5);
        let o = compute_base_polynomial(&p).map_err(err)?.order_at_point(&ProjectivePoint::real(1.0, 0.0, -0.5), 1e-6);
        ensure(o == m, || format!("multiplicity {m} pencil has order {o}"))?;
    }

    let mut classified = 0;
    let check = |r: &GauWuResult, n: usize| 2 <= r.lower && r.lower <= r.upper && r.upper <= n;
    for (name, a) in fixtures::all() {
        let base = classify(&a).map_err(err)?;
        ensure(check(&base, a.n()), || format!("{name}: bounds [{}, {}]", base.lower, base.upper))?;
        for _ in 0..8 {
            let theta = g.gen_range(0.0..TAU);
            let r = classify(&a.rotated(theta)).map_err(err)?;
            ensure(check(&r, a.n()) && same_bounds(&r, &base), || format!("{name}: rotation by {theta} changed bounds"))?;
            let z = c(g.gen_range(-2.0..2.0), g.gen_range(-2.0..2.0));
            let r = classify(&a.shifted(z)).map_err(err)?;
            ensure(check(&r, a.n()) && same_bounds(&r, &base), || format!("{name}: shift by {z} changed bounds"))?;
            classified += 2;
        }
        classified += 1;
    }

    let mut oracle_max = 0;
    let mut done = 0;
    while done < 20 {
        let a = common::random_matrix(&mut g, 3);
        if !is_unitarily_irreducible(&a) {
            continue;
        }
        let r = classify(&a).map_err(err)?;
        ensure(check(&r, 3), || format!("random 3x3: bounds [{}, {}]", r.lower, r.upper))?;
        let sampled = sampled_lower_bound(&a, &mut g, 500).max(2);
        oracle_max = oracle_max.max(sampled);
        ensure(r.upper >= sampled, || format!("random 3x3: upper {} below sampled {sampled}", r.upper))?;
        classified += 1;
        done += 1;
    }
    Ok(format!(
        "rotation {rot_worst:.1e}, residue {residue_worst:.1e}, orders 2 and 3, {classified} classify outputs in bounds, 3x3 oracle max {oracle_max}"
    ))
}

/// Largest number of boundary images in sampled orthonormal bases whose
/// first vector is a top eigenvector at a random angle.
fn sampled_lower_bound(a: &ComplexMatrix, g: &mut rand_chacha::ChaCha8Rng, trials: usize) -> usize {
    let p = a.hermitian_parts();
    let n = a.n();
    let tol = 1e-6 * p.scale();
    let support: Vec<(f64, f64)> = (0..720)
        .map(|k| {
            let th = TAU * k as f64 / 720.0;
            (th, hermitian_eigenvalues(&p.at(th), th).unwrap()[0])
        })
        .collect();
    let mut best = 0;
    for _ in 0..trials {
        let t = g.gen_range(0.0..TAU);
        let e = gauwu_core::linalg::hermitian_eigen(&p.at(t), t).unwrap();
        let mut basis = vec![e.vectors.column(0).into_owned()];
        let u = common::haar_unitary(g, n);
        for j in 0..n {
            let mut w = u.column(j).into_owned();
            for s in &basis {
                let proj = s.dotc(&w);
                w -= s * proj;
            }
            if w.norm() > 1e-6 && basis.len() < n {
                basis.push(w.normalize());
            }
        }
        let hits = basis
            .iter()
            .filter(|v| {
                let z = quadratic_form(a.as_matrix(), v);
                support.iter().map(|&(th, top)| (Complex64::from_polar(1.0, -th) * z).re - top).fold(f64::NEG_INFINITY, f64::max) >= -tol
            })
            .count();
        best = best.max(hits);
    }
    best
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("base polynomial fixture", base_polynomial_fixture),
        ("toeplitz factorization", toeplitz_factorization),
        ("swap invariance", swap_invariance),
        ("gau-wu fixtures", gau_wu_fixtures),
        ("singularity orders", singularity_orders),
        ("block decomposition", block_decomposition_values),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
