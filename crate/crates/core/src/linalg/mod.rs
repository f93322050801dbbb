//! Dense complex linear algebra used throughout the crate.

mod eigen;
mod index;
mod matrix;
mod qr;

pub use eigen::{
    hermitian_eigenvalues, hermitian_eigenvalues_with, EigenSolver, Spectrum, HERMITICITY_TOLERANCE,
    INVARIANT_TOLERANCE, JACOBI_MAX_DIM, JACOBI_MAX_SWEEPS, JACOBI_OFF_DIAGONAL_TOLERANCE,
};
pub use index::{flatten_index, unflatten_index, BipartiteIndex};
pub use matrix::ComplexMatrix;
pub use qr::{qr_phase_corrected, RANK_TOLERANCE};
