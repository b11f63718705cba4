//! Plain-text reports, curve tables and SVG figures.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::analysis::Analysis;
use crate::gauwu::GauWuResult;
use crate::geometry::{BoundarySample, CurvePoint};
use crate::toeplitz::ToeplitzReport;

pub const REPORT_DIGITS: usize = 12;
pub const SVG_SIZE: f64 = 600.0;

/// `%g`-style formatting with `digits` significant digits.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn fmt_num(x: f64) -> String {
    // Avoid printing "-0".
    fmt_g(if x == 0.0 { 0.0 } else { x }, REPORT_DIGITS)
}

pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_num(z.re);
    let im = fmt_num(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

fn clean(x: f64, scale: f64) -> f64 {
    // Round-off noise far below the report precision prints as zero.
    if x.abs() <= 1e-14 * scale.max(1.0) {
        0.0
    } else {
        x
    }
}

fn clean_complex(z: Complex64, scale: f64) -> Complex64 {
    Complex64::new(clean(z.re, scale), clean(z.im, scale))
}

pub fn exact_line(lower: usize, upper: usize, exact: Option<usize>) -> String {
    match exact {
        Some(k) => format!("exact k = {k}"),
        None => format!("exact k = undetermined (bounds [{lower}, {upper}])"),
    }
}

pub fn analysis_report(an: &Analysis, result: &GauWuResult) -> String {
    let s = an.scale;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "gauwu analysis report");
    let _ = writeln!(w);
    let _ = writeln!(w, "[applicability]");
    let _ = writeln!(w, "n = {}", an.n());
    let _ = writeln!(w, "unitarily irreducible = {}", an.irreducible());
    let _ = writeln!(w, "commutant dimension = {}", an.commutant_dimension);
    let _ = writeln!(w, "degenerate numerical range = {}", an.degenerate);
    let _ = writeln!(w, "normal = {}", an.normal);
    let _ = writeln!(w, "grid size = {}", an.config.grid_size);
    let _ = writeln!(w, "scale = {}", fmt_num(s));
    let _ = writeln!(w);

    let _ = writeln!(w, "[base polynomial]");
    let _ = writeln!(w, "degree = {}", an.poly.degree());
    let _ = writeln!(w, "imaginary residue = {}", fmt_num(an.poly.imag_residue()));
    let _ = writeln!(w, "a b c coefficient");
    let cmax = an.poly.max_abs_coefficient();
    for (a, b, c, v) in an.poly.terms() {
        let v = if v.abs() <= 1e-12 * cmax { 0.0 } else { v };
        let _ = writeln!(w, "{a} {b} {c} {}", fmt_num(v));
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "[seeds]");
    let _ = writeln!(w, "count = {}", an.seeds.len());
    for (i, sd) in an.seeds.iter().enumerate() {
        let ends: Vec<String> = sd.endpoints.iter().map(|&z| fmt_complex(clean_complex(z, s))).collect();
        let _ = writeln!(
            w,
            "seed {}: theta = {}, kind = {}, multiplicity = {}, support = {}, endpoints = {}",
            i + 1,
            fmt_num(sd.theta),
            sd.kind.label(),
            sd.multiplicity,
            fmt_num(clean(sd.support, s)),
            ends.join(" ")
        );
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "[real singularities]");
    let _ = writeln!(w, "count = {}", an.singularities.len());
    for (i, p) in an.singularities.iter().enumerate() {
        let _ = writeln!(
            w,
            "point {}: theta = {}, lambda = {}, order = {}, on boundary = {}, coordinates = ({} : {} : {})",
            i + 1,
            fmt_num(p.theta),
            fmt_num(clean(p.lambda, s)),
            p.order,
            p.on_boundary,
            fmt_num(clean(p.theta.cos(), 1.0)),
            fmt_num(clean(p.theta.sin(), 1.0)),
            fmt_num(clean(-p.lambda, s))
        );
    }
    let _ = writeln!(w, "collinear groups = {}", an.collinear.len());
    for (i, g) in an.collinear.iter().enumerate() {
        let _ = writeln!(w, "group {}: theta = {}, size = {}", i + 1, fmt_num(g[0].theta), g.len());
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "[gau-wu number]");
    let _ = writeln!(w, "lower = {}", result.lower);
    let _ = writeln!(w, "upper = {}", result.upper);
    let _ = writeln!(w, "{}", exact_line(result.lower, result.upper, result.exact));
    let _ = writeln!(w);

    let _ = writeln!(w, "[rules]");
    for r in &result.rules {
        let bounds = match (r.lower, r.upper) {
            (Some(l), Some(u)) => format!(" [{l}, {u}]"),
            (Some(l), None) => format!(" lower {l}"),
            (None, Some(u)) => format!(" upper {u}"),
            (None, None) => String::new(),
        };
        let _ = writeln!(w, "{} {}{}: {}", r.id.label(), r.status.label(), bounds, r.status.detail());
        let _ = writeln!(w, "  statement: {}", r.id.anchor());
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "[witnesses]");
    let _ = writeln!(w, "count = {}", result.witnesses.len());
    for (i, x) in result.witnesses.iter().enumerate() {
        let entries: Vec<String> = x.vector.iter().map(|&z| fmt_complex(clean_complex(z, 1.0))).collect();
        let _ = writeln!(
            w,
            "witness {}: image = {}, boundary distance = {}",
            i + 1,
            fmt_complex(clean_complex(x.image, s)),
            fmt_num(clean(x.distance, s))
        );
        let _ = writeln!(w, "  vector = [{}]", entries.join(", "));
    }
    if !result.warnings.is_empty() {
        let _ = writeln!(w);
        let _ = writeln!(w, "[warnings]");
        for m in &result.warnings {
            let _ = writeln!(w, "{m}");
        }
    }
    out
}

/// Section appended to an analysis report when the input is a tridiagonal
/// Toeplitz matrix analysed through the family formula.
pub fn toeplitz_family_section(n: usize, a: Complex64, b: Complex64, c: Complex64, k: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out);
    let _ = writeln!(out, "[toeplitz family]");
    let _ = writeln!(out, "n = {n}");
    let _ = writeln!(out, "a = {}", fmt_complex(a));
    let _ = writeln!(out, "b = {}", fmt_complex(b));
    let _ = writeln!(out, "c = {}", fmt_complex(c));
    let _ = writeln!(out, "family k = {k}");
    let _ = writeln!(out, "{}", exact_line(k, k, Some(k)));
    out
}

pub fn toeplitz_report(r: &ToeplitzReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "gauwu toeplitz verification report");
    let _ = writeln!(w);
    let _ = writeln!(w, "[family]");
    let _ = writeln!(w, "n = {}", r.spec.n);
    let _ = writeln!(w, "a = {}", fmt_complex(r.spec.a));
    let _ = writeln!(w, "b = {}", fmt_complex(r.spec.b));
    let _ = writeln!(w, "c = {}", fmt_complex(r.spec.c));
    let _ = writeln!(w);
    let _ = writeln!(w, "[decomposition]");
    let _ = writeln!(w, "beta = {}", fmt_complex(r.decomposition.beta));
    let sig: Vec<String> = r.decomposition.sigmas.iter().map(|&x| fmt_num(x)).collect();
    let _ = writeln!(w, "sigmas = {}", sig.join(" "));
    let _ = writeln!(w, "zero block = {}", r.decomposition.has_zero_block);
    let _ = writeln!(w);
    for c in &r.checks {
        let _ = writeln!(w, "[check {}] {}", c.id, c.name);
        let _ = writeln!(w, "status = {}", c.status.label());
        if let Some(x) = c.residual {
            let _ = writeln!(w, "residual = {}", fmt_num(x));
        }
        let _ = writeln!(w, "detail = {}", c.detail);
        let _ = writeln!(w);
    }
    let _ = writeln!(w, "[gau-wu numbers]");
    let _ = writeln!(w, "T: {} (family formula; witnesses certified {})", exact_line(r.k, r.k, Some(r.k)), r.witness_k);
    let _ = writeln!(
        w,
        "T': {} (decomposition-derived upper bound; witnesses certified {})",
        exact_line(r.k_swap, r.k_swap, Some(r.k_swap)),
        r.witness_k_swap
    );
    let _ = writeln!(w, "overall = {}", if r.all_pass() { "pass" } else { "FAIL" });
    out
}

pub fn curve_tsv(points: &[CurvePoint]) -> String {
    let mut out = String::from("theta\tbranch\tre\tim\tsupport\torder\n");
    for p in points {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            fmt_num(p.theta),
            p.branch,
            fmt_num(p.z.re),
            fmt_num(p.z.im),
            fmt_num(p.support),
            p.order
        );
    }
    out
}

/// Standalone 600x600 SVG: curve points in black, boundary in blue,
/// eigenvalues in red.
pub fn svg_figure(boundary: &[BoundarySample], curve: &[CurvePoint], eigenvalues: &[Complex64], note: Option<&str>) -> String {
    let all = boundary.iter().map(|b| b.z).chain(curve.iter().map(|c| c.z)).chain(eigenvalues.iter().copied());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in all {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let k = SVG_SIZE * 0.9 / span;
    let map = |z: Complex64| (SVG_SIZE / 2.0 + (z.re - cx) * k, SVG_SIZE / 2.0 - (z.im - cy) * k);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    );
    if let Some(n) = note {
        let _ = writeln!(out, "<desc>{n}</desc>");
    }
    let _ = writeln!(out, r#"<rect width="600" height="600" fill="white"/>"#);
    let (ox, oy) = map(Complex64::new(0.0, 0.0));
    let _ = writeln!(
        out,
        r##"<g stroke="#bbbbbb" stroke-width="0.5"><line x1="0" y1="{oy:.3}" x2="600" y2="{oy:.3}"/><line x1="{ox:.3}" y1="0" x2="{ox:.3}" y2="600"/></g>"##
    );
    let _ = writeln!(out, r#"<g fill="black">"#);
    for c in curve {
        let (x, y) = map(c.z);
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="0.7"/>"#);
    }
    let _ = writeln!(out, "</g>");
    if !boundary.is_empty() {
        let pts: Vec<String> = boundary
            .iter()
            .map(|b| {
                let (x, y) = map(b.z);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(out, r#"<polygon points="{}" fill="none" stroke="blue" stroke-width="1.5"/>"#, pts.join(" "));
    }
    let _ = writeln!(out, r#"<g fill="red">"#);
    for &z in eigenvalues {
        let (x, y) = map(z);
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
