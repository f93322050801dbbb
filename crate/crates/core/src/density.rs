use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};

/// Tolerance for Hermiticity and unit trace of a density matrix.
pub const DENSITY_TOLERANCE: f64 = 1e-10;
/// Most negative eigenvalue accepted by [`DensityMatrix::new_checked`].
pub const PSD_TOLERANCE: f64 = 1e-9;

/// Hermitian, unit-trace, positive semidefinite matrix, optionally carrying
/// the subsystem dimension `d` of a `d x d` bipartite split.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    split: Option<usize>,
}

impl DensityMatrix {
    /// Validates Hermiticity and trace. Positivity is not checked; use
    /// [`DensityMatrix::new_checked`] for matrices of unknown provenance.
    pub fn new(matrix: ComplexMatrix, split: Option<usize>) -> Result<Self> {
        let n = matrix.require_square()?;
        if n == 0 {
            return Err(Error::InvalidDensity("empty matrix".into()));
        }
        if let Some(d) = split {
            if d * d != n {
                return Err(Error::DimensionMismatch(format!("split {d} does not square to {n}")));
            }
        }
        let dev = matrix.hermitian_deviation()?;
        if dev > DENSITY_TOLERANCE {
            return Err(Error::InvalidDensity(format!("not Hermitian (deviation {dev:e})")));
        }
        let tr = matrix.trace()?;
        if (tr.re - 1.0).abs() > DENSITY_TOLERANCE || tr.im.abs() > DENSITY_TOLERANCE {
            return Err(Error::InvalidDensity(format!("trace {tr} is not 1")));
        }
        Ok(Self { matrix, split })
    }

    /// [`DensityMatrix::new`] plus an eigenvalue check of positivity.
    pub fn new_checked(matrix: ComplexMatrix, split: Option<usize>) -> Result<Self> {
        let rho = Self::new(matrix, split)?;
        let min = hermitian_eigenvalues(&rho.matrix)?.min();
        if min < -PSD_TOLERANCE {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(rho)
    }

    /// Normalizes a Hermitian PSD matrix by its trace.
    pub fn from_unnormalized(matrix: ComplexMatrix, split: Option<usize>) -> Result<Self> {
        let tr = matrix.trace()?.re;
        if !(tr > 0.0) {
            return Err(Error::InvalidDensity(format!("non-positive trace {tr}")));
        }
        Self::new(matrix.scale(1.0 / tr), split)
    }

    /// `I / n`.
    pub fn maximally_mixed(n: usize, split: Option<usize>) -> Result<Self> {
        Self::new(ComplexMatrix::identity(n).scale(1.0 / n as f64), split)
    }

    pub(crate) fn from_parts_unchecked(matrix: ComplexMatrix, split: Option<usize>) -> Self {
        Self { matrix, split }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn split(&self) -> Option<usize> {
        self.split
    }

    pub fn with_split(self, d: usize) -> Result<Self> {
        if d * d != self.dim() {
            return Err(Error::DimensionMismatch(format!("split {d} does not square to {}", self.dim())));
        }
        Ok(Self { split: Some(d), ..self })
    }

    pub(crate) fn require_split(&self) -> Result<usize> {
        self.split.ok_or_else(|| Error::InvalidArgument("density matrix has no bipartite split".into()))
    }

    /// `Tr[rho^2]`.
    pub fn purity(&self) -> f64 {
        self.matrix.purity().expect("density matrices are square")
    }
}
