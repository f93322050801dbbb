//! Mixed bipartite states: the matrix-element witness and its symmetrized
//! form, Werner states with their closed forms, separable mixtures and
//! pure-state decompositions.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::pure::{ln_approx, ln_exact, ln_exact_pure, make_pure, LogNegativity, PureState};
use crate::random::{sample_amplitudes, weyl_diagonal, AmplitudeClass, RngStream};

/// Tolerance on mixture weights summing to one.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// Exact negativity of `rho` across its bipartite split.
pub fn ln_exact_mixed(rho: &DensityMatrix) -> Result<LogNegativity> {
    ln_exact(rho, rho.require_split()?)
}

/// `1/2 sum_{n != m} |rho[(n,n),(m,m)] - rho[(n,m),(m,n)]|`.
pub fn ln_approx_mixed(rho: &DensityMatrix) -> Result<LogNegativity> {
    let d = rho.require_split()?;
    let r = rho.matrix();
    let mut acc = 0.0;
    for n in 0..d {
        for m in 0..d {
            if n != m {
                acc += (r[(n * d + n, m * d + m)] - r[(n * d + m, m * d + n)]).norm();
            }
        }
    }
    Ok(LogNegativity::from_negativity(0.5 * acc))
}

/// Symmetrized witness
/// `1/2 sum_{n != m} |(rho[nn,mm] + rho[mm,nn]) / 2 - (rho[nm,mn] + rho[mn,nm]) / 2|`.
/// Vanishes on `sum_i p_i rho_a ⊗ rho_b` whenever each term has a real factor.
pub fn ln_approx_mixed_sym(rho: &DensityMatrix) -> Result<LogNegativity> {
    let d = rho.require_split()?;
    let r = rho.matrix();
    let mut acc = 0.0;
    for n in 0..d {
        for m in 0..d {
            if n != m {
                let (nn, mm, nm, mn) = (n * d + n, m * d + m, n * d + m, m * d + n);
                let diag = (r[(nn, mm)] + r[(mm, nn)]) * 0.5;
                let cross = (r[(nm, mn)] + r[(mn, nm)]) * 0.5;
                acc += (diag - cross).norm();
            }
        }
    }
    Ok(LogNegativity::from_negativity(0.5 * acc))
}

fn check_werner(d: usize, p: f64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("Werner states need d >= 2, got {d}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("Werner probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// `p |Bell><Bell| + (1 - p) I / d^2` with `|Bell> = sum_n |nn> / sqrt(d)`.
pub fn werner_state(d: usize, p: f64) -> Result<DensityMatrix> {
    check_werner(d, p)?;
    let dim = d * d;
    let bell = p / d as f64;
    let noise = (1.0 - p) / dim as f64;
    let m = ComplexMatrix::from_fn(dim, dim, |i, j| {
        let mut v = 0.0;
        if i % (d + 1) == 0 && j % (d + 1) == 0 {
            v += bell;
        }
        if i == j {
            v += noise;
        }
        Complex64::new(v, 0.0)
    });
    DensityMatrix::new(m, Some(d))
}

/// Closed forms for the `d x d` Werner state at mixing probability `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerAnalytics {
    pub d: usize,
    pub p: f64,
    /// The only eigenvalue of the partial transpose that can go negative.
    pub lambda_minus: f64,
    pub multiplicity: usize,
    pub negativity_exact: f64,
    pub ln_exact: f64,
    pub negativity_approx: f64,
    pub ln_approx: f64,
    pub purity: f64,
    /// Separability threshold `1 / (d + 1)`.
    pub p_star: f64,
    /// Purity at the threshold, `2 / (d (d + 1))`.
    pub mu_star: f64,
}

pub fn werner_analytics(d: usize, p: f64) -> Result<WernerAnalytics> {
    check_werner(d, p)?;
    let df = d as f64;
    let exact = LogNegativity::from_negativity(0.5 * (df - 1.0) / df * ((df + 1.0) * p - 1.0));
    let approx = LogNegativity::from_negativity(p * (df - 1.0) / 2.0);
    Ok(WernerAnalytics {
        d,
        p,
        lambda_minus: (1.0 - (df + 1.0) * p) / (df * df),
        multiplicity: d * (d - 1) / 2,
        negativity_exact: exact.negativity,
        ln_exact: exact.ln,
        negativity_approx: approx.negativity,
        ln_approx: approx.ln,
        purity: (1.0 + (df * df - 1.0) * p * p) / (df * df),
        p_star: 1.0 / (df + 1.0),
        mu_star: 2.0 / (df * (df + 1.0)),
    })
}

/// The two-component reading `(p, |Bell><Bell|), (1 - p, I / d^2)` of a Werner state.
pub fn werner_components(d: usize, p: f64) -> Result<Vec<(f64, DensityMatrix)>> {
    Ok(vec![(p, werner_state(d, 1.0)?), (1.0 - p, werner_state(d, 0.0)?)])
}

fn check_weights(weights: impl IntoIterator<Item = f64>) -> Result<()> {
    let mut sum = 0.0;
    for w in weights {
        if !(w >= 0.0) || !w.is_finite() {
            return Err(Error::InvalidArgument(format!("mixture weight {w} is negative or not finite")));
        }
        sum += w;
    }
    if (sum - 1.0).abs() > WEIGHT_TOLERANCE {
        return Err(Error::InvalidArgument(format!("mixture weights sum to {sum}, expected 1")));
    }
    Ok(())
}

/// `sum_i p_i rho_a ⊗ rho_b`.
pub fn separable_mixture(parts: &[(f64, DensityMatrix, DensityMatrix)]) -> Result<DensityMatrix> {
    let (_, a0, _) = parts.first().ok_or_else(|| Error::InvalidArgument("empty mixture".into()))?;
    let d = a0.dim();
    check_weights(parts.iter().map(|p| p.0))?;
    let mut acc = ComplexMatrix::zeros(d * d, d * d);
    for (w, a, b) in parts {
        if a.dim() != d || b.dim() != d {
            return Err(Error::DimensionMismatch(format!(
                "factor dimensions {} and {} do not match {d}",
                a.dim(),
                b.dim()
            )));
        }
        acc = &acc + &a.matrix().kron(b.matrix()).scale(*w);
    }
    DensityMatrix::new(acc, Some(d))
}

fn projector(v: [Complex64; 2]) -> DensityMatrix {
    DensityMatrix::from_parts_unchecked(ComplexMatrix::outer(&v, &v), None)
}

/// Product decomposition of the two-qubit Werner state for `p <= 1/3` using the
/// Z, X and Y eigenbases; the Y terms have two complex factors.
pub fn werner_y_decomposition(p: f64) -> Result<Vec<(f64, DensityMatrix, DensityMatrix)>> {
    if !(0.0..=1.0 / 3.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("product decomposition needs 0 <= p <= 1/3, got {p}")));
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (one, zero, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
    let z0 = projector([one, zero]);
    let z1 = projector([zero, one]);
    let xp = projector([one * h, one * h]);
    let xm = projector([one * h, -one * h]);
    let yp = projector([one * h, i * h]);
    let ym = projector([one * h, -i * h]);
    let mut parts = Vec::with_capacity(7);
    if p < 1.0 / 3.0 {
        let mixed = DensityMatrix::maximally_mixed(2, None)?;
        parts.push((1.0 - 3.0 * p, mixed.clone(), mixed));
    }
    let w = 0.5 * p;
    for (a, b) in [(&z0, &z0), (&z1, &z1), (&xp, &xp), (&xm, &xm), (&yp, &ym), (&ym, &yp)] {
        parts.push((w, a.clone(), b.clone()));
    }
    Ok(parts)
}

/// Weighted pure-state decomposition `rho = sum_i p_i |psi_i><psi_i|`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdEnsemble {
    weights: Vec<f64>,
    states: Vec<PureState>,
}

impl PsdEnsemble {
    pub fn new(weights: Vec<f64>, states: Vec<PureState>) -> Result<Self> {
        if weights.is_empty() || weights.len() != states.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} states",
                weights.len(),
                states.len()
            )));
        }
        check_weights(weights.iter().copied())?;
        let d = states[0].d();
        if states.iter().any(|s| s.d() != d) {
            return Err(Error::DimensionMismatch("ensemble states differ in dimension".into()));
        }
        Ok(Self { weights, states })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn d(&self) -> usize {
        self.states[0].d()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// `k` states of `class` with weights drawn uniformly from the simplex.
pub fn psd_sample(d: usize, k: usize, class: AmplitudeClass, rng: &mut RngStream) -> Result<PsdEnsemble> {
    if k == 0 {
        return Err(Error::InvalidArgument("ensemble needs at least one component".into()));
    }
    let raw = weyl_diagonal(k, rng)?;
    let total: f64 = raw.iter().sum();
    let weights = raw.into_iter().map(|w| w / total).collect();
    let states = (0..k)
        .map(|_| sample_amplitudes(class, d, rng).and_then(make_pure))
        .collect::<Result<Vec<_>>>()?;
    PsdEnsemble::new(weights, states)
}

pub fn psd_to_density(ens: &PsdEnsemble) -> Result<DensityMatrix> {
    let dim = ens.d() * ens.d();
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for (w, s) in ens.weights.iter().zip(&ens.states) {
        let v = s.to_vector();
        acc = &acc + &ComplexMatrix::outer(&v, &v).scale(*w);
    }
    DensityMatrix::new(acc, Some(ens.d()))
}

/// Per-component measure averaged over a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AverageMeasure {
    Exact,
    ApproxPure,
}

/// `sum_i p_i LN(psi_i)` for the chosen measure.
pub fn avg_ln(ens: &PsdEnsemble, measure: AverageMeasure) -> Result<f64> {
    let mut acc = 0.0;
    for (w, s) in ens.weights.iter().zip(&ens.states) {
        let ln = match measure {
            AverageMeasure::Exact => ln_exact_pure(s)?.ln,
            AverageMeasure::ApproxPure => ln_approx(s).ln,
        };
        acc += w * ln;
    }
    Ok(acc)
}

/// `sum_i p_i LN(rho_i)` over mixed components, with the matrix-element
/// witness standing in for the approximate measure.
pub fn avg_ln_mixed(parts: &[(f64, DensityMatrix)], measure: AverageMeasure) -> Result<f64> {
    check_weights(parts.iter().map(|p| p.0))?;
    let mut acc = 0.0;
    for (w, rho) in parts {
        let ln = match measure {
            AverageMeasure::Exact => ln_exact_mixed(rho)?.ln,
            AverageMeasure::ApproxPure => ln_approx_mixed(rho)?.ln,
        };
        acc += w * ln;
    }
    Ok(acc)
}
