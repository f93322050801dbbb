use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Diagonal entries of `R` smaller than this times `||z||_F` count as rank deficiency.
pub const RANK_TOLERANCE: f64 = 1e-12;

/// Householder QR of a square matrix with the phase ambiguity removed.
///
/// `z = Q R` with `R` upper triangular and `R_ii` real and strictly positive,
/// obtained by rescaling with `Lambda_ii = R_ii / |R_ii|`. With this
/// normalization `Q` is unique, which is what makes QR of a Ginibre matrix
/// Haar distributed.
pub fn qr_phase_corrected(z: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let n = z.require_square()?;
    let norm = z.frobenius_norm();
    let mut r = z.clone();
    let mut q = ComplexMatrix::identity(n);

    for k in 0..n {
        let tail: f64 = (k + 1..n).map(|i| r[(i, k)].norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let xnorm = (x0.norm_sqr() + tail).sqrt();
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * xnorm;
        // v = x - alpha e_k, stored for rows k..n
        let mut v: Vec<Complex64> = (k..n).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // R <- (I - 2 v v^dagger / |v|^2) R
        for j in k..n {
            let dot: Complex64 = v.iter().enumerate().map(|(i, vi)| vi.conj() * r[(k + i, j)]).sum();
            let f = dot * (2.0 / vnorm2);
            for (i, vi) in v.iter().enumerate() {
                r[(k + i, j)] -= vi * f;
            }
        }
        // Q <- Q (I - 2 v v^dagger / |v|^2)
        for row in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(i, vi)| q[(row, k + i)] * vi).sum();
            let f = dot * (2.0 / vnorm2);
            for (i, vi) in v.iter().enumerate() {
                q[(row, k + i)] -= f * vi.conj();
            }
        }
        for i in k + 1..n {
            r[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }

    for k in 0..n {
        let rkk = r[(k, k)];
        let mag = rkk.norm();
        if mag <= RANK_TOLERANCE * norm || mag == 0.0 {
            return Err(Error::RankDeficient { index: k, value: mag });
        }
        let lambda = rkk / mag;
        // Q' = Q Lambda, R' = Lambda^* R
        for row in 0..n {
            q[(row, k)] *= lambda;
        }
        for col in k..n {
            r[(k, col)] *= lambda.conj();
        }
        r[(k, k)] = Complex64::new(mag, 0.0);
    }
    Ok((q, r))
}
