//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use negwit_core::{
    avg_ln, diagonal_state, haar_orthogonal, haar_unitary, hermitian_eigenvalues, histogram, ln_approx,
    ln_approx_mixed, ln_approx_mixed_sym, ln_diagonal, ln_exact_mixed, ln_exact_pure, ln_schmidt, make_pure,
    nmmn_superposition, psd_sample, psd_to_density, pure_partial_transpose, purity_targeted_density,
    random_density_matrix, random_real_density_matrix, sample_amplitudes, separable_mixture,
    two_qubit_pt_spectrum, weyl_diagonal, werner_analytics, werner_state, werner_y_decomposition, AmplitudeClass,
    AverageMeasure, Complex64, ComplexMatrix, DensityMatrix, RngStream,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: negwit_core::Error) -> String {
    e.to_string()
}

/// Positive Hermitian amplitudes: the witness is exact and equals `-log2 Tr[rho^2]`.
fn positive_hermitian_exactness() -> Outcome {
    let mut worst_diff: f64 = 0.0;
    let mut worst_purity: f64 = 0.0;
    for (m, seed) in [(10usize, 101u64), (40, 102)] {
        let root = RngStream::new(seed);
        let errors = (0..200u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = root.split(i);
                let rho = sample_amplitudes(AmplitudeClass::PositiveHermitian, m + 1, &mut rng)?;
                let purity = rho.purity()?;
                let state = make_pure(rho)?;
                let exact = ln_exact_pure(&state)?.ln;
                Ok(((exact - ln_approx(&state).ln).abs(), (exact + purity.log2()).abs()))
            })
            .collect::<Result<Vec<(f64, f64)>, negwit_core::Error>>()
            .map_err(err)?;
        for (diff, purity) in errors {
            worst_diff = worst_diff.max(diff);
            worst_purity = worst_purity.max(purity);
        }
    }
    ensure(worst_diff <= 1e-8 && worst_purity <= 1e-8, || {
        format!("max |exact - approx| = {worst_diff:e}, max |exact + log2 purity| = {worst_purity:e}")
    })?;
    Ok(format!("max |exact - approx| = {worst_diff:.2e}, max |exact + log2 purity| = {worst_purity:.2e}"))
}

/// Arbitrary complex amplitudes: the witness never exceeds the exact value.
fn lower_bound_arbitrary() -> Outcome {
    let mut worst: f64 = f64::NEG_INFINITY;
    let mut count = 0;
    let mut runs: Vec<(usize, u64)> = (2..=8).map(|d| (d, 1000)).collect();
    runs.push((41, 100));
    for (d, n) in runs {
        let root = RngStream::new(200 + d as u64);
        let excesses = (0..n)
            .into_par_iter()
            .map(|i| {
                let state = make_pure(sample_amplitudes(AmplitudeClass::ArbitraryComplex, d, &mut root.split(i))?)?;
                Ok(ln_approx(&state).ln - ln_exact_pure(&state)?.ln)
            })
            .collect::<Result<Vec<f64>, negwit_core::Error>>()
            .map_err(err)?;
        count += excesses.len();
        worst = excesses.into_iter().fold(worst, f64::max);
    }
    ensure(worst <= 1e-9, || format!("max (approx - exact) = {worst:e}"))?;
    Ok(format!("{count} samples, max (approx - exact) = {worst:.2e}"))
}

/// Two qubits: closed-form partial-transpose spectrum and exact witness.
fn two_qubit_closed_form() -> Outcome {
    let root = RngStream::new(300);
    let (mut worst_eig, mut worst_ln): (f64, f64) = (0.0, 0.0);
    for i in 0..1000 {
        let c = sample_amplitudes(AmplitudeClass::ArbitraryComplex, 2, &mut root.split(i)).map_err(err)?;
        let state = make_pure(c).map_err(err)?;
        let closed = two_qubit_pt_spectrum(&state).map_err(err)?.sorted();
        let numeric = hermitian_eigenvalues(&pure_partial_transpose(&state)).map_err(err)?;
        for (a, b) in closed.iter().zip(numeric.values()) {
            worst_eig = worst_eig.max((a - b).abs());
        }
        worst_ln = worst_ln.max((ln_approx(&state).ln - ln_exact_pure(&state).map_err(err)?.ln).abs());
    }
    ensure(worst_eig <= 1e-10 && worst_ln <= 1e-10, || {
        format!("max eigenvalue error {worst_eig:e}, max |approx - exact| {worst_ln:e}")
    })?;
    Ok(format!("max eigenvalue error {worst_eig:.2e}, max |approx - exact| {worst_ln:.2e}"))
}

/// Diagonal-state and Schmidt closed forms against the partial-transpose spectrum.
fn diagonal_and_schmidt() -> Outcome {
    let d = 8;
    let root = RngStream::new(400);
    let (mut worst_diag, mut worst_schmidt): (f64, f64) = (0.0, 0.0);
    for i in 0..200 {
        let mut rng = root.split(i);
        let coeffs: Vec<Complex64> = (0..d).map(|_| rng.complex_normal()).collect();
        let exact = ln_exact_pure(&diagonal_state(&coeffs).map_err(err)?).map_err(err)?.ln;
        worst_diag = worst_diag.max((ln_diagonal(&coeffs).map_err(err)? - exact).abs());

        let general = make_pure(sample_amplitudes(AmplitudeClass::ArbitraryComplex, d, &mut rng).map_err(err)?)
            .map_err(err)?;
        let exact = ln_exact_pure(&general).map_err(err)?.ln;
        worst_schmidt = worst_schmidt.max((ln_schmidt(&general).map_err(err)? - exact).abs());
    }
    ensure(worst_diag <= 1e-8 && worst_schmidt <= 1e-8, || {
        format!("diagonal error {worst_diag:e}, Schmidt error {worst_schmidt:e}")
    })?;
    Ok(format!("diagonal error {worst_diag:.2e}, Schmidt error {worst_schmidt:.2e}"))
}

/// Symmetric two-mode states: unit log negativity for every single pair, and the
/// pair-sum formula for superpositions sharing a common mode.
fn nmmn_states() -> Outcome {
    let one = Complex64::new(1.0, 0.0);
    let mut worst_pair: f64 = 0.0;
    let mut pairs = 0;
    for d in 2..=6 {
        for n in 0..d {
            for m in 0..d {
                if n == m {
                    continue;
                }
                let s = nmmn_superposition(d, &[(n, m, one)]).map_err(err)?;
                worst_pair = worst_pair.max((ln_exact_pure(&s).map_err(err)?.ln - 1.0).abs());
                pairs += 1;
            }
        }
    }
    let root = RngStream::new(500);
    let mut worst_sum: f64 = 0.0;
    for i in 0..300 {
        let mut rng = root.split(i);
        let d = 3 + rng.index(4);
        let hub = rng.index(d);
        let mut terms = Vec::new();
        for other in (0..d).filter(|&o| o != hub) {
            if terms.is_empty() || rng.index(2) == 1 {
                terms.push((hub, other, rng.complex_normal()));
            }
        }
        let s = nmmn_superposition(d, &terms).map_err(err)?;
        let c = s.amplitudes();
        let mut pair_sum = 0.0;
        for n in 0..d {
            for m in 0..d {
                if n != m {
                    pair_sum += (c[(n, m)] * c[(m, n)]).norm();
                }
            }
        }
        let formula = (1.0 + pair_sum).log2();
        worst_sum = worst_sum.max((ln_exact_pure(&s).map_err(err)?.ln - formula).abs());
    }
    ensure(worst_pair <= 1e-10 && worst_sum <= 1e-8, || {
        format!("single-pair error {worst_pair:e}, superposition error {worst_sum:e}")
    })?;
    Ok(format!("{pairs} pairs, single-pair error {worst_pair:.2e}, 300 superpositions error {worst_sum:.2e}"))
}

/// Werner closed forms on a 21-point grid for d = 2..=12.
fn werner_closed_forms() -> Outcome {
    let grid: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
    let (mut worst_ln, mut worst_purity): (f64, f64) = (0.0, 0.0);
    for d in 2..=12 {
        let mut last_zero = f64::NEG_INFINITY;
        let mut first_positive = f64::INFINITY;
        for &p in &grid {
            let rho = werner_state(d, p).map_err(err)?;
            let a = werner_analytics(d, p).map_err(err)?;
            let exact = ln_exact_mixed(&rho).map_err(err)?.ln;
            let approx = ln_approx_mixed(&rho).map_err(err)?.ln;
            let sym = ln_approx_mixed_sym(&rho).map_err(err)?.ln;
            worst_ln = worst_ln.max((exact - a.ln_exact).abs()).max((approx - a.ln_approx).abs());
            worst_purity = worst_purity.max((rho.purity() - a.purity).abs());
            ensure(sym == approx, || format!("d={d} p={p}: symmetrized {sym} != plain {approx}"))?;
            if exact <= 1e-9 {
                last_zero = last_zero.max(p);
            } else {
                first_positive = first_positive.min(p);
            }
        }
        let p_star = 1.0 / (d as f64 + 1.0);
        ensure(last_zero <= p_star && p_star < first_positive && first_positive - last_zero <= 0.05 + 1e-12, || {
            format!("d={d}: zero crossing between {last_zero} and {first_positive}, threshold {p_star}")
        })?;
    }
    ensure(worst_ln <= 1e-8 && worst_purity <= 1e-12, || {
        format!("max LN error {worst_ln:e}, max purity error {worst_purity:e}")
    })?;
    Ok(format!("max LN error {worst_ln:.2e}, max purity error {worst_purity:.2e}, crossings bracket 1/(d+1)"))
}

/// Ordering `avg LN_a <= LN_e <= LN_a(rho)` on positive Hermitian decompositions.
fn mixed_ordering_chain() -> Outcome {
    let root = RngStream::new(700);
    let (mut worst_lower, mut worst_upper) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..200 {
        let ens = psd_sample(11, 5, AmplitudeClass::PositiveHermitian, &mut root.split(i)).map_err(err)?;
        let rho = psd_to_density(&ens).map_err(err)?;
        let avg = avg_ln(&ens, AverageMeasure::ApproxPure).map_err(err)?;
        let exact = ln_exact_mixed(&rho).map_err(err)?.ln;
        let approx = ln_approx_mixed(&rho).map_err(err)?.ln;
        worst_lower = worst_lower.max(avg - exact);
        worst_upper = worst_upper.max(exact - approx);
    }
    ensure(worst_lower <= 1e-9 && worst_upper <= 1e-9, || {
        format!("max (avg - exact) = {worst_lower:e}, max (exact - approx) = {worst_upper:e}")
    })?;
    Ok(format!("max (avg - exact) = {worst_lower:.2e}, max (exact - approx) = {worst_upper:.2e}"))
}

/// Real symmetric positive components: the mixed witness equals the exact value.
fn real_symmetric_saturation() -> Outcome {
    let root = RngStream::new(800);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let ens = psd_sample(11, 5, AmplitudeClass::RealSymmetricPositive, &mut root.split(i)).map_err(err)?;
        let rho = psd_to_density(&ens).map_err(err)?;
        let exact = ln_exact_mixed(&rho).map_err(err)?.ln;
        let approx = ln_approx_mixed(&rho).map_err(err)?.ln;
        worst = worst.max((approx - exact).abs());
    }
    ensure(worst <= 1e-8, || format!("max |approx - exact| = {worst:e}"))?;
    Ok(format!("max |approx - exact| = {worst:.2e}"))
}

/// The symmetrized witness vanishes on separable mixtures with a real factor per term,
/// and misses the Werner decomposition whose Y-basis terms are complex on both sides.
fn separability_detection() -> Outcome {
    let root = RngStream::new(900);
    let (mut worst_sym, mut worst_exact): (f64, f64) = (0.0, 0.0);
    for i in 0..500 {
        let mut rng = root.split(i);
        let d = 2 + rng.index(3);
        let terms = 1 + rng.index(4);
        let weights = weyl_diagonal(terms, &mut rng).map_err(err)?;
        let total: f64 = weights.iter().sum();
        let mut parts = Vec::with_capacity(terms);
        for w in weights {
            let real = random_real_density_matrix(d, &mut rng).map_err(err)?;
            let complex = random_density_matrix(d, &mut rng).map_err(err)?;
            let (a, b) = if rng.index(2) == 0 { (real, complex) } else { (complex, real) };
            parts.push((w / total, a, b));
        }
        let rho = separable_mixture(&parts).map_err(err)?;
        worst_sym = worst_sym.max(ln_approx_mixed_sym(&rho).map_err(err)?.ln);
        worst_exact = worst_exact.max(ln_exact_mixed(&rho).map_err(err)?.ln);
    }
    ensure(worst_sym <= 1e-10 && worst_exact <= 1e-8, || {
        format!("max symmetrized witness {worst_sym:e}, max exact {worst_exact:e}")
    })?;

    let p = 1.0 / 3.0;
    let rebuilt = separable_mixture(&werner_y_decomposition(p).map_err(err)?).map_err(err)?;
    let werner = werner_state(2, p).map_err(err)?;
    let rebuild_err = rebuilt.matrix().max_abs_diff(werner.matrix());
    let sym = ln_approx_mixed_sym(&werner).map_err(err)?.ln;
    let expected = (1.0 + 2.0 * werner_analytics(2, p).map_err(err)?.negativity_approx).log2();
    ensure(rebuild_err <= 1e-12, || format!("Y-basis decomposition misses Werner by {rebuild_err:e}"))?;
    ensure(sym > 0.0 && (sym - expected).abs() <= 1e-12, || {
        format!("symmetrized witness on Werner(2, 1/3) = {sym}, expected {expected}")
    })?;
    Ok(format!(
        "500 mixtures: sym <= {worst_sym:.2e}, exact <= {worst_exact:.2e}; Werner(2,1/3) rebuilt to {rebuild_err:.1e}, sym = {sym:.12} (log2(4/3))"
    ))
}

/// Sampler statistics and reproducibility.
fn sampler_statistics() -> Outcome {
    let root = RngStream::new(1000);
    let mut worst_unitarity: f64 = 0.0;
    for (j, d) in [1usize, 2, 8, 41].into_iter().enumerate() {
        for i in 0..25 {
            let mut rng = root.split((j * 100 + i) as u64);
            for u in [haar_unitary(d, &mut rng).map_err(err)?, haar_orthogonal(d, &mut rng).map_err(err)?] {
                let residual = u.dagger().matmul(&u).map_err(err)?.max_abs_diff(&ComplexMatrix::identity(d));
                worst_unitarity = worst_unitarity.max(residual);
            }
        }
    }
    ensure(worst_unitarity <= 1e-10, || format!("unitarity residual {worst_unitarity:e}"))?;

    let haar_root = RngStream::new(1001);
    let mean: f64 = (0..2000)
        .map(|i| haar_unitary(8, &mut haar_root.split(i)).map(|u| u[(0, 0)].norm_sqr()))
        .sum::<Result<f64, _>>()
        .map_err(err)?
        / 2000.0;
    ensure((mean - 0.125).abs() <= 0.0125, || format!("mean |U00|^2 = {mean}, expected 0.125 +- 10%"))?;

    let d = 11;
    let bell = make_pure(ComplexMatrix::identity(d)).map_err(err)?;
    let base = negwit_core::pure_density(&bell);
    let hist_root = RngStream::new(1002);
    let mean_purity = |j: u64, eta: f64| -> Result<(f64, Vec<f64>), negwit_core::Error> {
        let stream = hist_root.split(j);
        let purities = (0..100)
            .map(|i| purity_targeted_density(&base, eta, &mut stream.split(i)).map(|r| r.purity()))
            .collect::<Result<Vec<f64>, _>>()?;
        Ok((purities.iter().sum::<f64>() / purities.len() as f64, purities))
    };
    // Monotone over the range where the base still matters; far beyond it the
    // mean settles at the purity of the random part alone.
    let etas = [0.0, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0];
    let mut means = Vec::new();
    for (j, &eta) in etas.iter().enumerate() {
        let (mean, purities) = mean_purity(j as u64, eta).map_err(err)?;
        if eta == 0.0 {
            let h = histogram(&purities, 10, (0.0, 1.0)).map_err(err)?;
            ensure(h[9].1 == 100, || format!("eta = 0 histogram {h:?} not concentrated at purity 1"))?;
        }
        means.push(mean);
    }
    ensure(means.windows(2).all(|w| w[1] <= w[0]), || format!("mean purity not monotone in eta: {means:?}"))?;
    let (far, _) = mean_purity(etas.len() as u64, 1000.0).map_err(err)?;
    ensure((1.0 / 121.0..0.05).contains(&far), || format!("mean purity at eta = 1000 is {far}"))?;

    let fingerprint = |seed: u64| -> Result<Vec<u64>, negwit_core::Error> {
        let root = RngStream::new(seed);
        let mut bits = Vec::new();
        for class in AmplitudeClass::ALL {
            let c = sample_amplitudes(class, 5, &mut root.split(class as u64))?;
            bits.extend(c.as_slice().iter().flat_map(|z| [z.re.to_bits(), z.im.to_bits()]));
        }
        let rho: DensityMatrix = random_density_matrix(4, &mut root.split(99))?;
        bits.extend(rho.matrix().as_slice().iter().map(|z| z.re.to_bits()));
        Ok(bits)
    };
    let (a, b) = (fingerprint(7).map_err(err)?, fingerprint(7).map_err(err)?);
    ensure(a == b, || "seeded samplers are not bit-reproducible".into())?;
    ensure(a != fingerprint(8).map_err(err)?, || "different seeds gave identical samples".into())?;

    Ok(format!(
        "unitarity {worst_unitarity:.1e}, mean |U00|^2 = {mean:.4}, mean purity by eta {:?}, at eta 1000 {far:.4}, bit-reproducible",
        means.iter().map(|m| format!("{m:.3}")).collect::<Vec<_>>()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("positive Hermitian amplitudes: witness exact and equal to -log2 purity", positive_hermitian_exactness),
        ("arbitrary complex amplitudes: witness is a lower bound", lower_bound_arbitrary),
        ("two-qubit closed-form spectrum", two_qubit_closed_form),
        ("diagonal and Schmidt closed forms", diagonal_and_schmidt),
        ("symmetric two-mode states", nmmn_states),
        ("Werner closed forms", werner_closed_forms),
        ("mixed-state ordering chain", mixed_ordering_chain),
        ("saturation on real symmetric positive components", real_symmetric_saturation),
        ("separability detection by the symmetrized witness", separability_detection),
        ("sampler statistics and reproducibility", sampler_statistics),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
