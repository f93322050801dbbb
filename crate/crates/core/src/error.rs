use thiserror::Error;

/// Errors raised by the numerics in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |h - h^dagger| = {deviation:e} exceeds {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("matrix is numerically rank deficient: |R[{index}][{index}]| = {value:e}")]
    RankDeficient { index: usize, value: f64 },

    #[error("index ({n}, {m}) out of range for subsystem dimension {d}")]
    IndexOutOfRange { n: usize, m: usize, d: usize },

    #[error("zero state: amplitudes have zero norm")]
    ZeroState,

    #[error("non-finite entry in matrix")]
    NonFinite,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
}

impl Error {
    /// True for failures of the numerical engine itself, as opposed to bad input.
    pub fn is_numeric_failure(&self) -> bool {
        matches!(self, Error::NoConvergence { .. } | Error::RankDeficient { .. } | Error::NonFinite)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
