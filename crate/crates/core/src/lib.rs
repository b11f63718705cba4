//! Numerical range analysis through the base polynomial `det(x Re A + y Im A + t I)`:
//! seeds, real singularities of the base curve, boundary generating curve
//! sampling, and bounds on the Gau-Wu number `k(A)`.

pub mod analysis;
pub mod commands;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod gauwu;
pub mod geometry;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod spectral;
pub mod toeplitz;

pub use error::{Error, Result};
pub use matrix::{commutant_dimension, hermitian_parts, is_unitarily_irreducible, ComplexMatrix, HermitianPencil};
pub use poly::{compute_base_polynomial, BasePolynomial, ProjectivePoint};
pub use analysis::Analysis;
pub use config::RunConfig;
pub use gauwu::{classify, classify_with, theorem_bounds, toeplitz_k, witness_lower_bound, GauWuResult};
