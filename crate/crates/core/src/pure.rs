//! Bipartite pure states `|psi> = sum c_nm |n>|m>` described by their `d x d`
//! amplitude matrix, with the exact log negativity and the amplitude-determinant
//! witness that bounds it from below.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};

/// Eigenvalues of the partial transpose below `-NEGATIVITY_THRESHOLD` count toward the negativity.
pub const NEGATIVITY_THRESHOLD: f64 = 1e-10;
/// Tolerance on `Tr[C C^dagger] = 1`.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;
/// Coherent amplitudes are rejected when the probability beyond the cutoff exceeds this.
pub const COHERENT_TAIL_LIMIT: f64 = 0.01;

/// Negativity `N` together with the log negativity `log2(1 + 2N)` in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogNegativity {
    pub negativity: f64,
    pub ln: f64,
}

impl LogNegativity {
    /// Negative inputs are clamped to zero.
    pub fn from_negativity(negativity: f64) -> Self {
        let negativity = negativity.max(0.0);
        Self { negativity, ln: (1.0 + 2.0 * negativity).log2() }
    }
}

/// Normalized bipartite pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    d: usize,
    amplitudes: ComplexMatrix,
}

impl PureState {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn amplitudes(&self) -> &ComplexMatrix {
        &self.amplitudes
    }

    pub fn amplitude(&self, n: usize, m: usize) -> Complex64 {
        self.amplitudes[(n, m)]
    }

    /// Row-major state vector, `v[n d + m] = c_nm`.
    pub fn to_vector(&self) -> Vec<Complex64> {
        self.amplitudes.as_slice().to_vec()
    }
}

/// Scales a square matrix to unit Frobenius norm.
pub fn make_pure(raw: ComplexMatrix) -> Result<PureState> {
    let d = raw.require_square()?;
    if d == 0 {
        return Err(Error::InvalidArgument("amplitude matrix is empty".into()));
    }
    let norm = raw.frobenius_norm();
    if norm == 0.0 {
        return Err(Error::ZeroState);
    }
    if !norm.is_finite() {
        return Err(Error::NonFinite);
    }
    let amplitudes = if norm == 1.0 { raw } else { raw.scale(1.0 / norm) };
    Ok(PureState { d, amplitudes })
}

/// `sum_n c_n |n n>`.
pub fn diagonal_state(coeffs: &[Complex64]) -> Result<PureState> {
    make_pure(ComplexMatrix::from_diagonal(coeffs))
}

/// `sum c_nm (|nm> + |mn>) / sqrt(2)` over the supplied `(n, m, c_nm)` terms.
pub fn nmmn_superposition(d: usize, terms: &[(usize, usize, Complex64)]) -> Result<PureState> {
    if terms.is_empty() {
        return Err(Error::ZeroState);
    }
    let mut c = ComplexMatrix::zeros(d, d);
    for &(n, m, coeff) in terms {
        if n >= d || m >= d {
            return Err(Error::IndexOutOfRange { n, m, d });
        }
        if n == m {
            return Err(Error::InvalidArgument(format!("term ({n}, {m}) must have n != m")));
        }
        let half = coeff * std::f64::consts::FRAC_1_SQRT_2;
        c[(n, m)] += half;
        c[(m, n)] += half;
    }
    make_pure(c)
}

/// Fock amplitudes `beta^n / sqrt(n!) exp(-|beta|^2 / 2)` of a coherent state,
/// for `n = 0..=cutoff`, renormalized after truncation.
pub fn coherent_coeffs(beta: Complex64, cutoff: usize) -> Result<Vec<Complex64>> {
    if !beta.re.is_finite() || !beta.im.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut coeffs = Vec::with_capacity(cutoff + 1);
    let mut c = Complex64::new((-0.5 * beta.norm_sqr()).exp(), 0.0);
    coeffs.push(c);
    for n in 1..=cutoff {
        c = c * beta / (n as f64).sqrt();
        coeffs.push(c);
    }
    let kept: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
    let tail = 1.0 - kept;
    if !(tail <= COHERENT_TAIL_LIMIT) {
        return Err(Error::InvalidArgument(format!(
            "coherent amplitude {beta} leaves probability {tail:.3e} beyond cutoff {cutoff}"
        )));
    }
    let scale = kept.sqrt().recip();
    Ok(coeffs.into_iter().map(|z| z * scale).collect())
}

fn unit_norm(v: &[Complex64], name: &str) -> Result<()> {
    let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroState);
    }
    if (norm2 - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::InvalidArgument(format!("{name} has squared norm {norm2}, expected 1")));
    }
    Ok(())
}

/// `N (|psi>|phi> + |phi>|psi>) / sqrt(2)` with `N = (1 + |<psi|phi>|^2)^(-1/2)`.
pub fn symmetric_product_superposition(psi: &[Complex64], phi: &[Complex64]) -> Result<PureState> {
    if psi.len() != phi.len() {
        return Err(Error::DimensionMismatch(format!("vectors of length {} and {}", psi.len(), phi.len())));
    }
    unit_norm(psi, "psi")?;
    unit_norm(phi, "phi")?;
    let overlap: Complex64 = psi.iter().zip(phi).map(|(a, b)| a.conj() * b).sum();
    let norm = (1.0 + overlap.norm_sqr()).sqrt().recip() * std::f64::consts::FRAC_1_SQRT_2;
    let d = psi.len();
    make_pure(ComplexMatrix::from_fn(d, d, |n, m| (psi[n] * phi[m] + phi[n] * psi[m]) * norm))
}

/// `|psi><psi|` on the `d^2`-dimensional product space.
pub fn pure_density(state: &PureState) -> DensityMatrix {
    let v = state.to_vector();
    DensityMatrix::from_parts_unchecked(ComplexMatrix::outer(&v, &v), Some(state.d))
}

/// Transpose on the second factor: `out[(n,m),(n',m')] = rho[(n,m'),(n',m)]`.
pub fn partial_transpose_matrix(rho: &ComplexMatrix, d: usize) -> Result<ComplexMatrix> {
    let dim = rho.require_square()?;
    if d * d != dim {
        return Err(Error::DimensionMismatch(format!("{dim}x{dim} matrix is not bipartite with d = {d}")));
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |row, col| {
        let (n, m) = (row / d, row % d);
        let (n2, m2) = (col / d, col % d);
        rho[(n * d + m2, n2 * d + m)]
    }))
}

pub fn partial_transpose(rho: &DensityMatrix, d: usize) -> Result<ComplexMatrix> {
    partial_transpose_matrix(rho.matrix(), d)
}

/// Partial transpose of `|psi><psi|` built directly from the amplitudes:
/// `c_{n m'} conj(c_{n' m})`.
pub fn pure_partial_transpose(state: &PureState) -> ComplexMatrix {
    let d = state.d;
    let c = &state.amplitudes;
    ComplexMatrix::from_fn(d * d, d * d, |row, col| {
        let (n, m) = (row / d, row % d);
        let (n2, m2) = (col / d, col % d);
        c[(n, m2)] * c[(n2, m)].conj()
    })
}

fn negativity_of(pt: &ComplexMatrix) -> Result<LogNegativity> {
    let spectrum = hermitian_eigenvalues(pt)?;
    Ok(LogNegativity::from_negativity(spectrum.negative_mass(NEGATIVITY_THRESHOLD)))
}

/// Exact negativity from the spectrum of the partial transpose.
pub fn ln_exact(rho: &DensityMatrix, d: usize) -> Result<LogNegativity> {
    negativity_of(&partial_transpose(rho, d)?)
}

/// [`ln_exact`] of `|psi><psi|` without forming the density matrix first.
pub fn ln_exact_pure(state: &PureState) -> Result<LogNegativity> {
    negativity_of(&pure_partial_transpose(state))
}

/// `(1/2 sum_{n != m} |c_nn c_mm|, 1/2 sum_{n != m} |c_nm c_mn|)`.
pub fn negativity_components(state: &PureState) -> (f64, f64) {
    let c = &state.amplitudes;
    let (mut n1, mut n2) = (0.0, 0.0);
    for n in 0..state.d {
        for m in 0..state.d {
            if n != m {
                n1 += (c[(n, n)] * c[(m, m)]).norm();
                n2 += (c[(n, m)] * c[(m, n)]).norm();
            }
        }
    }
    (0.5 * n1, 0.5 * n2)
}

/// Amplitude-determinant witness `1/2 sum_{n != m} |c_nn c_mm - c_nm c_mn|`.
pub fn ln_approx(state: &PureState) -> LogNegativity {
    let c = &state.amplitudes;
    let mut acc = 0.0;
    for n in 0..state.d {
        for m in 0..state.d {
            if n != m {
                acc += (c[(n, n)] * c[(m, m)] - c[(n, m)] * c[(m, n)]).norm();
            }
        }
    }
    LogNegativity::from_negativity(0.5 * acc)
}

/// `log2(1 + |(Tr C)^2 - Tr[C^2]|)`: the determinant sum taken before the
/// absolute value. For Hermitian `C` this is `|Tr C Tr C^dagger - Tr[C C^dagger]|`.
pub fn ln_variation(state: &PureState) -> f64 {
    let c = &state.amplitudes;
    let tr = c.trace().expect("amplitude matrices are square");
    let tr_sq = c.trace_of_square().expect("amplitude matrices are square");
    (1.0 + (tr * tr - tr_sq).norm()).log2()
}

/// `log2((sum_n |c_n|)^2)` for the diagonal state `sum c_n |nn>` (coefficients normalized here).
pub fn ln_diagonal(coeffs: &[Complex64]) -> Result<f64> {
    let norm2: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroState);
    }
    let l1: f64 = coeffs.iter().map(|z| z.norm()).sum();
    Ok((l1 * l1 / norm2).log2())
}

/// Schmidt coefficients `sigma_n` (eigenvalues of `C C^dagger`), sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    sigmas: Vec<f64>,
    singular_values: Vec<f64>,
}

impl SchmidtSpectrum {
    pub fn sigmas(&self) -> &[f64] {
        &self.sigmas
    }

    /// `sqrt(sigma_n)`, the singular values of `C`.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.sigmas.iter().filter(|&&s| s > tol).count()
    }
}

/// Schmidt coefficients from the Hermitian dilation `[[0, C], [C^dagger, 0]]`,
/// whose spectrum is `+-sqrt(sigma_n)`. Reading the singular values directly
/// keeps `sqrt(sigma_n)` accurate even when `sigma_n` is at rounding level.
pub fn schmidt_spectrum(state: &PureState) -> Result<SchmidtSpectrum> {
    let d = state.d;
    let c = &state.amplitudes;
    let zero = Complex64::new(0.0, 0.0);
    let dilation = ComplexMatrix::from_fn(2 * d, 2 * d, |i, j| match (i < d, j < d) {
        (true, false) => c[(i, j - d)],
        (false, true) => c[(j, i - d)].conj(),
        _ => zero,
    });
    let values = hermitian_eigenvalues(&dilation)?.into_vec();
    let mut singular_values: Vec<f64> = values[d..].iter().map(|v| v.abs()).collect();
    singular_values.sort_by(|a, b| b.total_cmp(a));
    let sigmas = singular_values.iter().map(|s| s * s).collect();
    Ok(SchmidtSpectrum { sigmas, singular_values })
}

/// `log2((sum_n sqrt(sigma_n))^2)`, the exact log negativity of a pure state.
pub fn ln_schmidt(state: &PureState) -> Result<f64> {
    let s = schmidt_spectrum(state)?;
    let root_sum: f64 = s.singular_values.iter().sum();
    Ok((root_sum * root_sum).log2().max(0.0))
}

/// `1 - Tr[rho_a^2]` with `rho_a = C C^dagger`.
pub fn linear_entropy(state: &PureState) -> f64 {
    let c = &state.amplitudes;
    let rho_a = c.matmul(&c.dagger()).expect("amplitude matrices are square");
    1.0 - rho_a.purity().expect("square")
}

/// `Tr[C C^dagger] / |Tr C|^2`: the purity of `C` read as an unnormalized
/// density matrix. Infinite when `Tr C = 0`.
pub fn amplitude_purity(state: &PureState) -> f64 {
    let tr = state.amplitudes.trace().expect("square");
    let norm2 = state.amplitudes.frobenius_norm().powi(2);
    norm2 / tr.norm_sqr()
}

/// Closed-form spectrum of the partial transpose of a two-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitSpectrum {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

impl TwoQubitSpectrum {
    /// The four eigenvalues in ascending order.
    pub fn sorted(&self) -> [f64; 4] {
        let mut v = [self.lambda1, self.lambda2, self.lambda_plus, self.lambda_minus];
        v.sort_by(|a, b| a.total_cmp(b));
        v
    }

    /// `log2(1 + 2|lambda2|)`.
    pub fn ln(&self) -> f64 {
        LogNegativity::from_negativity(-self.lambda2).ln
    }
}

/// `lambda1 = |c00 c11 - c01 c10| = -lambda2`, `lambda_pm = (1 +- sqrt(1 - 4 lambda1^2)) / 2`.
pub fn two_qubit_pt_spectrum(state: &PureState) -> Result<TwoQubitSpectrum> {
    if state.d != 2 {
        return Err(Error::InvalidArgument(format!("two-qubit spectrum needs d = 2, got {}", state.d)));
    }
    let c = &state.amplitudes;
    let lambda1 = (c[(0, 0)] * c[(1, 1)] - c[(0, 1)] * c[(1, 0)]).norm();
    // 1 - 4 lambda1^2 = (a - b)^2 + 4|x|^2 for C C^dagger = [[a, x], [x*, b]]; this form
    // avoids the cancellation near lambda1 = 1/2.
    let a = c[(0, 0)].norm_sqr() + c[(0, 1)].norm_sqr();
    let b = c[(1, 0)].norm_sqr() + c[(1, 1)].norm_sqr();
    let x = c[(0, 0)] * c[(1, 0)].conj() + c[(0, 1)] * c[(1, 1)].conj();
    let root = ((a - b) * (a - b) + 4.0 * x.norm_sqr()).sqrt() / (a + b);
    Ok(TwoQubitSpectrum {
        lambda1,
        lambda2: -lambda1,
        lambda_plus: 0.5 * (1.0 + root),
        lambda_minus: 0.5 * (1.0 - root),
    })
}

/// Every pure-state measure evaluated on one normalized state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessReport {
    pub ln_exact: f64,
    pub ln_approx: f64,
    pub ln_variation: f64,
    pub linear_entropy: f64,
    pub purity_of_c: f64,
    pub negativity_exact: f64,
    pub negativity_approx: f64,
}

pub fn witness_report(state: &PureState) -> Result<WitnessReport> {
    let exact = ln_exact_pure(state)?;
    let approx = ln_approx(state);
    Ok(WitnessReport {
        ln_exact: exact.ln,
        ln_approx: approx.ln,
        ln_variation: ln_variation(state),
        linear_entropy: linear_entropy(state),
        purity_of_c: amplitude_purity(state),
        negativity_exact: exact.negativity,
        negativity_approx: approx.negativity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bell(d: usize) -> PureState {
        make_pure(ComplexMatrix::identity(d)).unwrap()
    }

    fn product(a: &[Complex64], b: &[Complex64]) -> PureState {
        make_pure(ComplexMatrix::from_fn(a.len(), b.len(), |n, m| a[n] * b[m])).unwrap()
    }

    #[test]
    fn make_pure_examples() {
        let s = bell(2);
        assert!((s.amplitude(0, 0).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(make_pure(s.amplitudes().clone()).unwrap().amplitudes().max_abs_diff(s.amplitudes()) < 1e-12);
        assert_eq!(make_pure(ComplexMatrix::zeros(2, 2)), Err(Error::ZeroState));
        assert!(make_pure(ComplexMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn diagonal_state_examples() {
        let s = diagonal_state(&[c(0.9f64.sqrt(), 0.0), c(0.1f64.sqrt(), 0.0)]).unwrap();
        assert!((s.amplitude(0, 0).norm_sqr() - 0.9).abs() < 1e-15);
        assert_eq!(diagonal_state(&[c(1.0, 0.0)]).unwrap().d(), 1);
        assert!(diagonal_state(&[c(0.0, 0.0); 3]).is_err());
    }

    #[test]
    fn nmmn_validation() {
        assert!(nmmn_superposition(3, &[]).is_err());
        assert!(nmmn_superposition(3, &[(1, 1, c(1.0, 0.0))]).is_err());
        assert!(matches!(nmmn_superposition(3, &[(0, 3, c(1.0, 0.0))]), Err(Error::IndexOutOfRange { .. })));
        let s = nmmn_superposition(3, &[(0, 1, c(1.0, 0.0)), (0, 2, c(1.0, 0.0))]).unwrap();
        assert_eq!(s.amplitudes(), &s.amplitudes().transpose());
        assert!((s.amplitudes().frobenius_norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn nmmn_components() {
        let s = nmmn_superposition(2, &[(0, 1, c(1.0, 0.0))]).unwrap();
        let (n1, n2) = negativity_components(&s);
        assert_eq!(n1, 0.0);
        assert!((n2 - 0.5).abs() < 1e-15);
        let (n1, n2) = negativity_components(&bell(2));
        assert!((n1 - 0.5).abs() < 1e-15);
        assert_eq!(n2, 0.0);
    }

    #[test]
    fn coherent_examples() {
        let zero = coherent_coeffs(c(0.0, 0.0), 5).unwrap();
        assert_eq!(zero[0], c(1.0, 0.0));
        assert!(zero[1..].iter().all(|z| *z == c(0.0, 0.0)));
        let half = coherent_coeffs(c(0.5, 0.0), 20).unwrap();
        assert!(((half[1] / half[0]).re - 0.5).abs() < 1e-12);
        let norm: f64 = half.iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-15);
        assert!(coherent_coeffs(c(10.0, 0.0), 20).is_err());
        assert!(coherent_coeffs(c(40.0, 0.0), 5).is_err());
    }

    #[test]
    fn symmetric_superposition_examples() {
        let e0 = [c(1.0, 0.0), c(0.0, 0.0)];
        let e1 = [c(0.0, 0.0), c(1.0, 0.0)];
        let s = symmetric_product_superposition(&e0, &e1).unwrap();
        assert!((ln_exact_pure(&s).unwrap().ln - 1.0).abs() < 1e-12);
        let same = symmetric_product_superposition(&e0, &e0).unwrap();
        assert_eq!(ln_approx(&same).negativity, 0.0);
        assert!(symmetric_product_superposition(&e0, &[c(1.0, 0.0)]).is_err());
        assert!(symmetric_product_superposition(&[c(0.0, 0.0); 2], &e0).is_err());
    }

    #[test]
    fn bell_density_corners() {
        let rho = pure_density(&bell(2));
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((rho.matrix()[(i, j)].re - 0.5).abs() < 1e-15);
        }
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let pt = partial_transpose(&pure_density(&bell(2)), 2).unwrap();
        let s = hermitian_eigenvalues(&pt).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (x, y) in s.values().iter().zip(expected) {
            assert!((x - y).abs() < 1e-14);
        }
        assert_eq!(pt, pure_partial_transpose(&bell(2)));
    }

    #[test]
    fn partial_transpose_rejects_bad_split() {
        assert!(partial_transpose_matrix(&ComplexMatrix::identity(6), 2).is_err());
        let diag = ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(partial_transpose_matrix(&diag, 2).unwrap(), diag);
    }

    #[test]
    fn exact_values() {
        let bell4 = pure_density(&bell(4));
        assert!((ln_exact(&bell4, 4).unwrap().ln - 2.0).abs() < 1e-12);
        let p = product(&[c(0.6, 0.0), c(0.0, 0.8)], &[c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(ln_exact_pure(&p).unwrap().ln, 0.0);
        let d = diagonal_state(&[c(0.9f64.sqrt(), 0.0), c(0.1f64.sqrt(), 0.0)]).unwrap();
        assert!((ln_exact_pure(&d).unwrap().ln - 1.6f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn approx_values() {
        let p = product(&[c(0.6, 0.1), c(0.3, 0.7)], &[c(0.2, -0.4), c(0.5, 0.5)]);
        assert!(ln_approx(&p).ln < 1e-15);
        for d in 1..6 {
            assert!((ln_approx(&bell(d)).ln - (d as f64).log2()).abs() < 1e-12);
            assert!((ln_variation(&bell(d)) - (d as f64).log2()).abs() < 1e-12);
        }
    }

    #[test]
    fn schmidt_and_entropy() {
        let s = schmidt_spectrum(&bell(3)).unwrap();
        for &x in s.sigmas() {
            assert!((x - 1.0 / 3.0).abs() < 1e-14);
        }
        assert!((linear_entropy(&bell(3)) - 2.0 / 3.0).abs() < 1e-14);
        let p = product(&[c(0.6, 0.0), c(0.8, 0.0)], &[c(0.0, 1.0), c(0.0, 0.0)]);
        assert!(ln_schmidt(&p).unwrap().abs() < 1e-12);
        assert!(linear_entropy(&p).abs() < 1e-14);
        assert!((schmidt_spectrum(&p).unwrap().sigmas()[0] - 1.0).abs() < 1e-14);
        assert!((ln_schmidt(&bell(5)).unwrap() - 5f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn two_qubit_examples() {
        let s = two_qubit_pt_spectrum(&bell(2)).unwrap();
        assert!((s.lambda1 - 0.5).abs() < 1e-15 && (s.lambda2 + 0.5).abs() < 1e-15);
        assert!((s.lambda_plus - 0.5).abs() < 1e-15 && (s.lambda_minus - 0.5).abs() < 1e-15);
        let p = product(&[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.0, 0.0), c(1.0, 0.0)]);
        let s = two_qubit_pt_spectrum(&p).unwrap();
        assert_eq!((s.lambda1, s.lambda_plus, s.lambda_minus), (0.0, 1.0, 0.0));
        assert!(two_qubit_pt_spectrum(&bell(3)).is_err());
    }

    #[test]
    fn report_examples() {
        let r = witness_report(&bell(2)).unwrap();
        assert!((r.ln_exact - 1.0).abs() < 1e-12 && (r.ln_approx - 1.0).abs() < 1e-12);
        assert!((r.linear_entropy - 0.5).abs() < 1e-14);
        assert!((r.ln_exact - (1.0 + 2.0 * r.negativity_exact).log2()).abs() < 1e-12);
        let p = product(&[c(1.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(-1.0, 0.0)]);
        let r = witness_report(&p).unwrap();
        assert!(r.ln_exact.abs() < 1e-12 && r.ln_approx.abs() < 1e-15 && r.linear_entropy.abs() < 1e-14);
    }

    #[test]
    fn clamp_negative_negativity() {
        assert_eq!(LogNegativity::from_negativity(-1e-14).ln, 0.0);
    }
}
