use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::spectral::{DEFAULT_GRID, DEFAULT_TOL_CLUSTER_REL};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "GAUWU_OUT";

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub grid_size: usize,
    /// Relative to `||H1|| + ||H2||`.
    pub tol_cluster: f64,
    pub tol_orth: f64,
    pub tol_order: f64,
    pub tol_coeff: f64,
    /// Relative tolerance for witness images on the boundary.
    pub tol_boundary: f64,
    /// Flat portion vs. singular point threshold, relative to the scale.
    pub tol_seed: f64,
    /// Cap on the candidate pool of the witness search.
    pub budget: usize,
    pub output_dir: PathBuf,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            grid_size: DEFAULT_GRID,
            tol_cluster: DEFAULT_TOL_CLUSTER_REL,
            tol_orth: 1e-8,
            tol_order: 1e-6,
            tol_coeff: 1e-8,
            tol_boundary: 1e-6,
            tol_seed: 1e-6,
            budget: 256,
            output_dir: PathBuf::from("."),
            seed: 20_160_601,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_size < 8 {
            return Err(Error::Parse(format!("grid size {} is below 8", self.grid_size)));
        }
        let tols = [
            ("tol-cluster", self.tol_cluster),
            ("tol-orth", self.tol_orth),
            ("tol-order", self.tol_order),
            ("tol-coeff", self.tol_coeff),
            ("tol-boundary", self.tol_boundary),
            ("tol-seed", self.tol_seed),
        ];
        for (name, v) in tols {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Parse(format!("{name} must be positive, got {v}")));
            }
        }
        if self.budget < 2 {
            return Err(Error::Parse("budget must be at least 2".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        let c = RunConfig { grid_size: 4, ..RunConfig::default() };
        assert!(c.validate().is_err());
        let c = RunConfig { tol_orth: 0.0, ..RunConfig::default() };
        assert!(c.validate().is_err());
        let c = RunConfig { tol_cluster: f64::NAN, ..RunConfig::default() };
        assert!(c.validate().is_err());
    }
}
