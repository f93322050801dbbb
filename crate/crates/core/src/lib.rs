//! Log negativity of bipartite quantum states and the amplitude-determinant
//! witness that approximates it without diagonalization.
//!
//! A pure state of two `d`-level systems is stored as its `d x d` amplitude
//! matrix `C`. The exact log negativity comes from the spectrum of the
//! partial transpose; the witness reads it off `2 x 2` minors of `C` (or of
//! `rho` for mixed states).

pub mod density;
pub mod error;
pub mod linalg;
pub mod mixed;
pub mod pure;
pub mod random;

/// Crate version, recorded in experiment outputs.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use density::DensityMatrix;
pub use error::{Error, Result};
pub use linalg::{
    flatten_index, hermitian_eigenvalues, hermitian_eigenvalues_with, qr_phase_corrected, unflatten_index,
    BipartiteIndex, ComplexMatrix, EigenSolver, Spectrum,
};
pub use mixed::{
    avg_ln, avg_ln_mixed, ln_approx_mixed, ln_approx_mixed_sym, ln_exact_mixed, psd_sample, psd_to_density,
    separable_mixture, werner_analytics, werner_components, werner_state, werner_y_decomposition, AverageMeasure,
    PsdEnsemble, WernerAnalytics,
};
pub use num_complex::Complex64;
pub use pure::{
    amplitude_purity, coherent_coeffs, diagonal_state, linear_entropy, ln_approx, ln_diagonal, ln_exact,
    ln_exact_pure, ln_schmidt, ln_variation, make_pure, negativity_components, nmmn_superposition,
    partial_transpose, partial_transpose_matrix, pure_density, pure_partial_transpose, schmidt_spectrum,
    symmetric_product_superposition, two_qubit_pt_spectrum, witness_report, LogNegativity, PureState,
    SchmidtSpectrum, TwoQubitSpectrum, WitnessReport,
};
pub use random::{
    ginibre, haar_orthogonal, haar_unitary, histogram, purity_targeted_amplitudes, purity_targeted_density,
    random_density_matrix, random_density_with_spectrum, random_real_density_matrix, random_unit_vector,
    real_ginibre, sample_amplitudes, verify_class, weyl_diagonal, AmplitudeClass, PurityKnob, RngStream,
};
