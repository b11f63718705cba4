use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("matrix dimension must be at least {min}, got {n}")]
    Dimension { n: usize, min: usize },

    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("hermitian eigensolver failed at theta = {theta}")]
    Eigensolver { theta: f64 },

    #[error("interpolation for degree {degree} stayed ill-conditioned (condition {condition:.3e})")]
    IllConditioned { degree: usize, condition: f64 },

    #[error("numerical diagnostic: {0}")]
    Numerical(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::NotSquare { .. } | Error::NonFinite { .. } => 2,
            Error::Io(_) => 2,
            Error::Hypothesis(_) => 4,
            Error::Dimension { .. } => 4,
            Error::Eigensolver { .. } | Error::IllConditioned { .. } | Error::Numerical(_) => 3,
        }
    }
}
