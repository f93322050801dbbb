//! Seeded random ensembles: Ginibre matrices, Haar unitaries and
//! orthogonals, Weyl-chamber spectra, random density matrices and the
//! amplitude-matrix classes used by the witness experiments.
//!
//! All samplers draw from an [`RngStream`]. A stream is ChaCha8 keyed by a
//! 64-bit seed, with ChaCha's 64-bit stream id used for splitting, so
//! `(seed, stream)` pins the output bit-for-bit on every platform.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, qr_phase_corrected, ComplexMatrix};

/// Version tag of the sampling scheme, recorded in experiment outputs.
pub const RNG_ALGORITHM: &str = "chacha8-splitmix-v1";

const MAX_QR_ATTEMPTS: usize = 3;

/// Deterministic random stream identified by `(seed, stream)`.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    /// Independent child stream for sample `index`; depends only on
    /// `(seed, stream, index)`, never on how much of `self` was consumed.
    pub fn split(&self, index: u64) -> RngStream {
        let child = splitmix64(self.stream ^ splitmix64(index.wrapping_add(1)));
        Self::with_stream(self.seed, child)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn standard_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// `(g1 + i g2) / sqrt(2)` with independent standard normals.
    pub fn complex_normal(&mut self) -> Complex64 {
        let re = self.standard_normal();
        let im = self.standard_normal();
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

fn require_dim(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidArgument("dimension must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Complex Ginibre matrix with `E|z|^2 = 1`.
pub fn ginibre(d: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    require_dim(d)?;
    Ok(ComplexMatrix::from_fn(d, d, |_, _| rng.complex_normal()))
}

/// Real Ginibre matrix with standard normal entries.
pub fn real_ginibre(d: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    require_dim(d)?;
    Ok(ComplexMatrix::from_fn(d, d, |_, _| Complex64::new(rng.standard_normal(), 0.0)))
}

fn haar_from(d: usize, rng: &mut RngStream, draw: fn(usize, &mut RngStream) -> Result<ComplexMatrix>) -> Result<ComplexMatrix> {
    let mut last = None;
    for _ in 0..MAX_QR_ATTEMPTS {
        match qr_phase_corrected(&draw(d, rng)?) {
            Ok((q, _)) => return Ok(q),
            Err(e @ Error::RankDeficient { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Haar-distributed unitary from the phase-corrected QR of a Ginibre matrix.
pub fn haar_unitary(d: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    haar_from(d, rng, ginibre)
}

/// Haar-distributed real orthogonal matrix (stored with zero imaginary parts).
pub fn haar_orthogonal(d: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    haar_from(d, rng, real_ginibre)
}

/// `|row|^2` of a fresh Haar unitary: a uniformly distributed point of the
/// probability simplex.
pub fn weyl_diagonal(d: usize, rng: &mut RngStream) -> Result<Vec<f64>> {
    let u = haar_unitary(d, rng)?;
    let row = rng.index(d);
    Ok(u.row(row).iter().map(|z| z.norm_sqr()).collect())
}

/// A row of a fresh Haar unitary: a uniformly random unit vector in `C^d`.
pub fn random_unit_vector(d: usize, rng: &mut RngStream) -> Result<Vec<Complex64>> {
    let u = haar_unitary(d, rng)?;
    let row = rng.index(d);
    Ok(u.row(row).to_vec())
}

/// `U diag(w) U^dagger`, symmetrized so the result is exactly Hermitian.
fn conjugate_diagonal(u: &ComplexMatrix, diag: &[Complex64]) -> Result<ComplexMatrix> {
    let n = u.rows();
    let scaled = ComplexMatrix::from_fn(n, n, |i, j| u[(i, j)] * diag[j]);
    scaled.matmul(&u.dagger())
}

/// Random density matrix `U diag(w) U^dagger` together with its spectrum `w`.
pub fn random_density_with_spectrum(d: usize, rng: &mut RngStream) -> Result<(DensityMatrix, Vec<f64>)> {
    let weights = weyl_diagonal(d, rng)?;
    let u = haar_unitary(d, rng)?;
    let diag: Vec<Complex64> = weights.iter().map(|&w| Complex64::new(w, 0.0)).collect();
    let rho = conjugate_diagonal(&u, &diag)?.hermitian_part()?;
    let tr = rho.trace()?.re;
    Ok((DensityMatrix::new(rho.scale(1.0 / tr), None)?, weights))
}

pub fn random_density_matrix(d: usize, rng: &mut RngStream) -> Result<DensityMatrix> {
    random_density_with_spectrum(d, rng).map(|(rho, _)| rho)
}

/// Random real density matrix `O diag(w) O^T` with Haar orthogonal `O`.
pub fn random_real_density_matrix(d: usize, rng: &mut RngStream) -> Result<DensityMatrix> {
    let weights = weyl_diagonal(d, rng)?;
    let o = haar_orthogonal(d, rng)?;
    let diag: Vec<Complex64> = weights.iter().map(|&w| Complex64::new(w, 0.0)).collect();
    let rho = conjugate_diagonal(&o, &diag)?.hermitian_part()?.map(|z| Complex64::new(z.re, 0.0));
    let tr = rho.trace()?.re;
    DensityMatrix::new(rho.scale(1.0 / tr), None)
}

/// Structural classes of amplitude matrices `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmplitudeClass {
    /// `U diag(w) U^dagger` with `w` on the simplex.
    PositiveHermitian,
    /// `(Z + Z^dagger) / 2` of a Ginibre `Z`.
    Hermitian,
    /// `U diag(u) U^dagger` with `u` a random unit vector: normal, complex spectrum.
    NormalComplexDiag,
    /// Ginibre `Z`.
    ArbitraryComplex,
    /// `O diag(w) O^T` with Haar orthogonal `O`.
    RealSymmetricPositive,
}

impl AmplitudeClass {
    pub const ALL: [AmplitudeClass; 5] = [
        AmplitudeClass::PositiveHermitian,
        AmplitudeClass::Hermitian,
        AmplitudeClass::NormalComplexDiag,
        AmplitudeClass::ArbitraryComplex,
        AmplitudeClass::RealSymmetricPositive,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            AmplitudeClass::PositiveHermitian => "positive-hermitian",
            AmplitudeClass::Hermitian => "hermitian",
            AmplitudeClass::NormalComplexDiag => "normal-complex-diag",
            AmplitudeClass::ArbitraryComplex => "arbitrary-complex",
            AmplitudeClass::RealSymmetricPositive => "real-symmetric-positive",
        }
    }
}

impl fmt::Display for AmplitudeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AmplitudeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        AmplitudeClass::ALL
            .into_iter()
            .find(|c| c.tag() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown amplitude class '{s}'")))
    }
}

/// Draws an unnormalized amplitude matrix of the given class.
pub fn sample_amplitudes(class: AmplitudeClass, d: usize, rng: &mut RngStream) -> Result<ComplexMatrix> {
    require_dim(d)?;
    let c = match class {
        AmplitudeClass::PositiveHermitian => {
            let w = weyl_diagonal(d, rng)?;
            let u = haar_unitary(d, rng)?;
            let diag: Vec<Complex64> = w.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            conjugate_diagonal(&u, &diag)?.hermitian_part()?
        }
        AmplitudeClass::NormalComplexDiag => {
            let row = random_unit_vector(d, rng)?;
            let u = haar_unitary(d, rng)?;
            conjugate_diagonal(&u, &row)?
        }
        AmplitudeClass::Hermitian => ginibre(d, rng)?.hermitian_part()?,
        AmplitudeClass::ArbitraryComplex => ginibre(d, rng)?,
        AmplitudeClass::RealSymmetricPositive => {
            let w = weyl_diagonal(d, rng)?;
            let o = haar_orthogonal(d, rng)?;
            let diag: Vec<Complex64> = w.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            let c = conjugate_diagonal(&o, &diag)?;
            ComplexMatrix::from_fn(d, d, |i, j| Complex64::new(0.5 * (c[(i, j)].re + c[(j, i)].re), 0.0))
        }
    };
    Ok(c)
}

/// Checks the defining property of `class` on `c` to within `tol` (relative to `max |c|`).
pub fn verify_class(class: AmplitudeClass, c: &ComplexMatrix, tol: f64) -> Result<bool> {
    let scale = c.max_abs().max(f64::MIN_POSITIVE);
    let ok = match class {
        AmplitudeClass::ArbitraryComplex => c.is_square(),
        AmplitudeClass::Hermitian => c.hermitian_deviation()? <= tol * scale,
        AmplitudeClass::PositiveHermitian => {
            c.hermitian_deviation()? <= tol * scale && hermitian_eigenvalues(c)?.min() >= -tol * scale
        }
        AmplitudeClass::RealSymmetricPositive => {
            c.max_imag() <= tol * scale
                && c.max_abs_diff(&c.transpose()) <= tol * scale
                && hermitian_eigenvalues(c)?.min() >= -tol * scale
        }
        AmplitudeClass::NormalComplexDiag => {
            let a = c.matmul(&c.dagger())?;
            let b = c.dagger().matmul(c)?;
            a.max_abs_diff(&b) <= tol * scale * scale
        }
    };
    Ok(ok)
}

/// `(base + eta sigma) / Tr[base + eta sigma]` with a fresh random density matrix `sigma`.
pub fn purity_targeted_density(base: &DensityMatrix, eta: f64, rng: &mut RngStream) -> Result<DensityMatrix> {
    if !(eta >= 0.0) || !eta.is_finite() {
        return Err(Error::InvalidArgument(format!("eta must be a finite non-negative number, got {eta}")));
    }
    if eta == 0.0 {
        return Ok(base.clone());
    }
    let sigma = random_density_matrix(base.dim(), rng)?;
    let sum = base.matrix() + &sigma.matrix().scale(eta);
    DensityMatrix::from_unnormalized(sum, base.split())
}

/// Deviation of a base state by `eta` times a random density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PurityKnob {
    eta: f64,
    base: DensityMatrix,
}

impl PurityKnob {
    pub fn new(base: DensityMatrix, eta: f64) -> Result<Self> {
        if !(eta >= 0.0) || !eta.is_finite() {
            return Err(Error::InvalidArgument(format!("eta must be a finite non-negative number, got {eta}")));
        }
        Ok(Self { eta, base })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn base(&self) -> &DensityMatrix {
        &self.base
    }

    pub fn sample(&self, rng: &mut RngStream) -> Result<DensityMatrix> {
        purity_targeted_density(&self.base, self.eta, rng)
    }
}

/// `C = rho / sqrt(Tr[rho^2])` with `rho = base / sqrt(Tr[base^2]) + eta sigma`.
pub fn purity_targeted_amplitudes(base: &ComplexMatrix, eta: f64, rng: &mut RngStream) -> Result<ComplexMatrix> {
    if !(eta >= 0.0) || !eta.is_finite() {
        return Err(Error::InvalidArgument(format!("eta must be a finite non-negative number, got {eta}")));
    }
    let d = base.require_square()?;
    let dev = base.hermitian_deviation()?;
    if dev > 1e-10 * base.max_abs() {
        return Err(Error::NotHermitian { deviation: dev, tolerance: 1e-10 * base.max_abs() });
    }
    let base_norm = base.frobenius_norm();
    if base_norm == 0.0 {
        return Err(Error::ZeroState);
    }
    let mut rho = base.scale(1.0 / base_norm);
    if eta > 0.0 {
        let sigma = random_density_matrix(d, rng)?;
        rho = &rho + &sigma.matrix().scale(eta);
    }
    let norm = rho.frobenius_norm();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::ZeroState);
    }
    Ok(rho.scale(1.0 / norm))
}

/// Fixed-width histogram over `[lo, hi]`; bins are half-open except the last.
/// Values outside the range are dropped.
pub fn histogram(values: &[f64], bins: usize, range: (f64, f64)) -> Result<Vec<(f64, usize)>> {
    let (lo, hi) = range;
    if bins == 0 || !(lo < hi) {
        return Err(Error::InvalidArgument(format!("need bins >= 1 and lo < hi, got {bins} over ({lo}, {hi})")));
    }
    let edge = |k: usize| lo + (hi - lo) * (k as f64) / (bins as f64);
    let mut counts = vec![0usize; bins];
    for &v in values {
        if !(v >= lo && v <= hi) {
            continue;
        }
        let mut k = (((v - lo) / (hi - lo)) * bins as f64).floor() as usize;
        k = k.min(bins - 1);
        // Settle rounding at the edges against the same edge formula used for centers.
        while k + 1 < bins && v >= edge(k + 1) {
            k += 1;
        }
        while k > 0 && v < edge(k) {
            k -= 1;
        }
        counts[k] += 1;
    }
    Ok(counts.into_iter().enumerate().map(|(k, n)| (0.5 * (edge(k) + edge(k + 1)), n)).collect())
}
