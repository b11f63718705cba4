//! Command implementations behind the `gauwu` binary. Each writes its files
//! into `config.output_dir` and returns the paths written.

use std::fs;
use std::path::{Path, PathBuf};

use crate::analysis::Analysis;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::gauwu::{classify_analysis, toeplitz_k, GauWuResult};
use crate::geometry::{boundary_points_of, curve_points};
use crate::matrix::ComplexMatrix;
use crate::report;
use crate::toeplitz::{detect_toeplitz, verify_toeplitz_with, ToeplitzReport, ToeplitzSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Toeplitz,
}

#[derive(Debug)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    /// One-line summary for standard output.
    pub summary: String,
    /// Whether every verification check passed.
    pub success: bool,
}

fn stem(path: &Path) -> String {
    path.file_stem().and_then(|s| s.to_str()).unwrap_or("matrix").to_string()
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let p = dir.join(name);
    fs::write(&p, contents)?;
    Ok(p)
}

pub fn analyze_matrix(a: &ComplexMatrix, config: &RunConfig, family: Option<Family>) -> Result<(Analysis, GauWuResult, String)> {
    let an = Analysis::new(a, config)?;
    let mut result = classify_analysis(&an)?;
    let mut extra = String::new();
    if family == Some(Family::Toeplitz) {
        let spec = detect_toeplitz(a)
            .ok_or_else(|| Error::Hypothesis("matrix is not tridiagonal Toeplitz".into()))?;
        let k = toeplitz_k(spec.n, spec.b, spec.c)?;
        result = result.with_family_value(k, format!("tridiagonal Toeplitz, n = {}, k = ceil(n/2) = {k}", spec.n))?;
        extra = report::toeplitz_family_section(spec.n, spec.a, spec.b, spec.c, k);
    }
    let mut text = report::analysis_report(&an, &result);
    text.push_str(&extra);
    Ok((an, result, text))
}

pub fn cmd_analyze(matrix_file: &Path, config: &RunConfig, family: Option<Family>) -> Result<Outcome> {
    let a = ComplexMatrix::from_file(matrix_file)?;
    let (an, result, text) = analyze_matrix(&a, config, family)?;
    let name = stem(matrix_file);
    let dir = &config.output_dir;
    let files = vec![
        write(dir, &format!("{name}.report.txt"), &text)?,
        write(dir, &format!("{name}.poly.txt"), &an.poly.to_export())?,
    ];
    Ok(Outcome { files, summary: report::exact_line(result.lower, result.upper, result.exact), success: true })
}

pub fn cmd_curve(matrix_file: &Path, config: &RunConfig) -> Result<Outcome> {
    let a = ComplexMatrix::from_file(matrix_file)?;
    let an = Analysis::new(&a, config)?;
    let curve = curve_points(&a, config.grid_size, an.scan.tol_cluster)?;
    let boundary = boundary_points_of(&an.pencil, config.grid_size, an.scan.tol_cluster)?;
    let eigenvalues = a.eigenvalues();
    let shape = if an.degenerate { "degenerate (segment or point)" } else { "two-dimensional" };
    let note = format!("n = {}; numerical range {shape}", a.n());
    let meta = format!(
        "n = {}\ngrid size = {}\nnumerical range = {shape}\ndegenerate = {}\nnormal = {}\nseeds = {}\nreal singularities = {}\ncurve points = {}\n",
        a.n(),
        config.grid_size,
        an.degenerate,
        an.normal,
        an.seeds.len(),
        an.singularities.len(),
        curve.len()
    );
    let name = stem(matrix_file);
    let dir = &config.output_dir;
    let files = vec![
        write(dir, &format!("{name}.curve.tsv"), &report::curve_tsv(&curve))?,
        write(dir, &format!("{name}.curve.svg"), &report::svg_figure(&boundary, &curve, &eigenvalues, Some(&note)))?,
        write(dir, &format!("{name}.curve.meta.txt"), &meta)?,
    ];
    Ok(Outcome { files, summary: note, success: true })
}

pub fn cmd_toeplitz(spec: &ToeplitzSpec, config: &RunConfig) -> Result<(Outcome, ToeplitzReport)> {
    config.validate()?;
    let r = verify_toeplitz_with(spec, config)?;
    let text = report::toeplitz_report(&r);
    let file = write(&config.output_dir, &format!("toeplitz_n{}.report.txt", spec.n), &text)?;
    let summary = format!(
        "k(T) = {}, k(T') = {}, checks {}",
        r.k,
        r.k_swap,
        if r.all_pass() { "pass" } else { "FAIL" }
    );
    Ok((Outcome { files: vec![file], summary, success: r.all_pass() }, r))
}
