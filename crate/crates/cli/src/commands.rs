//! One function per experiment, each producing a [`Table`]. Samples are
//! computed in parallel on split random streams and gathered in index order,
//! so output depends only on the configuration and seed.

use negwit_core::{
    amplitude_purity, coherent_coeffs, haar_unitary, histogram, ln_approx, ln_approx_mixed, ln_approx_mixed_sym,
    ln_exact_mixed, ln_exact_pure, make_pure, psd_sample, psd_to_density, pure_density, purity_targeted_amplitudes,
    purity_targeted_density, random_density_matrix, random_unit_vector, sample_amplitudes,
    symmetric_product_superposition, two_qubit_pt_spectrum, witness_report, AverageMeasure, Complex64,
    ComplexMatrix, DensityMatrix, RngStream,
};
use rayon::prelude::*;

use crate::config::{Base, Command, ExperimentConfig};
use crate::error::CliResult;
use crate::output::Table;

/// Runs `f` for every sample index in parallel, keeping index order.
fn per_sample<T: Send>(n: usize, f: impl Fn(usize) -> CliResult<T> + Sync + Send) -> CliResult<Vec<T>> {
    (0..n).into_par_iter().map(f).collect()
}

pub fn run(cfg: &ExperimentConfig) -> CliResult<Table> {
    match cfg.experiment {
        Command::PureSweep => pure_sweep(cfg),
        Command::Coherent => coherent(cfg),
        Command::RandomRows => random_rows(cfg),
        Command::EtaDeviation => eta_deviation(cfg),
        Command::TwoQubit => two_qubit(cfg),
        Command::Werner => werner(cfg),
        Command::Psd => psd(cfg),
        Command::PurityHist => purity_hist(cfg),
        Command::MixedRandom => mixed_random(cfg),
    }
}

pub fn pure_sweep(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let d = cfg.d();
    let reports = per_sample(cfg.samples, |i| {
        let c = sample_amplitudes(cfg.class, d, &mut root.split(i as u64))?;
        Ok(witness_report(&make_pure(c)?)?)
    })?;
    let mut table = Table::new(vec![
        "sample_index",
        "purity",
        "ln_exact",
        "ln_approx",
        "ln_variation",
        "linear_entropy",
        "diff_exact_minus_approx",
    ]);
    let mut le_below = 0;
    for (i, r) in reports.iter().enumerate() {
        if r.linear_entropy <= r.ln_exact {
            le_below += 1;
        }
        table.push(vec![
            i.into(),
            r.purity_of_c.into(),
            r.ln_exact.into(),
            r.ln_approx.into(),
            r.ln_variation.into(),
            r.linear_entropy.into(),
            (r.ln_exact - r.ln_approx).into(),
        ]);
    }
    table.notes.push(format!("class={} d={d}", cfg.class));
    table.notes.push(format!("linear_entropy_le_ln_exact_fraction={}", le_below as f64 / reports.len() as f64));
    Ok(table)
}

pub fn coherent(cfg: &ExperimentConfig) -> CliResult<Table> {
    let psi = coherent_coeffs(Complex64::new(cfg.beta1, 0.0), cfg.dim_m)?;
    let rows = per_sample(cfg.beta2_grid.len(), |j| {
        let beta2 = cfg.beta2_grid[j];
        let phi = coherent_coeffs(Complex64::new(beta2, 0.0), cfg.dim_m)?;
        let state = symmetric_product_superposition(&psi, &phi)?;
        let exact = ln_exact_pure(&state)?.ln;
        let approx = ln_approx(&state).ln;
        Ok(vec![beta2.into(), exact.into(), approx.into(), (exact - approx).into()])
    })?;
    let mut table = Table::new(vec!["beta2", "ln_exact", "ln_approx", "diff_exact_minus_approx"]);
    table.rows = rows;
    table.notes.push(format!("beta1={} M={}", cfg.beta1, cfg.dim_m));
    Ok(table)
}

pub fn random_rows(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let d = cfg.d();
    let rows = per_sample(cfg.samples, |i| {
        let mut rng = root.split(i as u64);
        let u = haar_unitary(d, &mut rng)?;
        let ra = rng.index(d);
        let (v, rb) = if cfg.same_unitary {
            let rb = if cfg.same_row {
                ra
            } else {
                (ra + 1 + rng.index(d - 1)) % d
            };
            (u.clone(), rb)
        } else {
            let v = haar_unitary(d, &mut rng)?;
            let rb = rng.index(d);
            (v, rb)
        };
        let (psi, phi) = (u.row(ra), v.row(rb));
        let overlap: Complex64 = psi.iter().zip(phi).map(|(a, b)| a.conj() * b).sum();
        let state = symmetric_product_superposition(psi, phi)?;
        let exact = ln_exact_pure(&state)?.ln;
        let approx = ln_approx(&state).ln;
        Ok(vec![
            i.into(),
            ra.into(),
            rb.into(),
            overlap.norm().into(),
            exact.into(),
            approx.into(),
            (exact - approx).into(),
        ])
    })?;
    let mut table = Table::new(vec![
        "sample_index",
        "row_a",
        "row_b",
        "overlap_abs",
        "ln_exact",
        "ln_approx",
        "diff_exact_minus_approx",
    ]);
    table.rows = rows;
    table.notes.push(format!("d={d} same_unitary={} same_row={}", cfg.same_unitary, cfg.same_row));
    Ok(table)
}

pub fn eta_deviation(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let d = cfg.d();
    let n = cfg.samples;
    // Every eta reuses the sample's stream, so the same projector and deviation
    // direction are scaled along the eta list.
    let rows = per_sample(cfg.eta.len() * n, |job| {
        let (j, i) = (job / n, job % n);
        let eta = cfg.eta[j];
        let mut rng = root.split(i as u64);
        let base = match cfg.base {
            Base::Projector => {
                let phi = random_unit_vector(d, &mut rng)?;
                ComplexMatrix::outer(&phi, &phi)
            }
            Base::Identity => ComplexMatrix::identity(d),
        };
        let state = make_pure(purity_targeted_amplitudes(&base, eta, &mut rng)?)?;
        let exact = ln_exact_pure(&state)?.ln;
        let approx = ln_approx(&state).ln;
        Ok(vec![
            eta.into(),
            i.into(),
            amplitude_purity(&state).into(),
            exact.into(),
            approx.into(),
            (exact - approx).into(),
        ])
    })?;
    let mut table =
        Table::new(vec!["eta", "sample_index", "purity", "ln_exact", "ln_approx", "diff_exact_minus_approx"]);
    table.rows = rows;
    let base = match cfg.base {
        Base::Projector => "projector",
        Base::Identity => "identity",
    };
    table.notes.push(format!("base={base} d={d}"));
    if cfg.base == Base::Identity {
        table.notes.push(format!(
            "note=at eta 0 the amplitudes are the Bell state with log negativity log2(d) = {}, which equals 1 only for d = 2",
            (d as f64).log2()
        ));
    }
    Ok(table)
}

pub fn two_qubit(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let rows = per_sample(cfg.samples, |i| {
        let state = make_pure(sample_amplitudes(cfg.class, 2, &mut root.split(i as u64))?)?;
        let exact = ln_exact_pure(&state)?.ln;
        let approx = ln_approx(&state).ln;
        let closed = two_qubit_pt_spectrum(&state)?.ln();
        let spread = exact.max(approx).max(closed) - exact.min(approx).min(closed);
        Ok(vec![i.into(), exact.into(), approx.into(), closed.into(), spread.into()])
    })?;
    let mut table = Table::new(vec!["sample_index", "ln_exact", "ln_approx", "ln_closed_form", "max_discrepancy"]);
    table.rows = rows;
    table.notes.push(format!("class={}", cfg.class));
    Ok(table)
}

pub fn werner(cfg: &ExperimentConfig) -> CliResult<Table> {
    let d = cfg.d();
    let log_d = (d as f64).log2();
    let rows = per_sample(cfg.p_grid.len(), |j| {
        let p = cfg.p_grid[j];
        let rho = negwit_core::werner_state(d, p)?;
        let a = negwit_core::werner_analytics(d, p)?;
        let parts = negwit_core::werner_components(d, p)?;
        Ok(vec![
            p.into(),
            a.ln_exact.into(),
            ln_exact_mixed(&rho)?.ln.into(),
            a.ln_approx.into(),
            ln_approx_mixed(&rho)?.ln.into(),
            ln_approx_mixed_sym(&rho)?.ln.into(),
            negwit_core::avg_ln_mixed(&parts, AverageMeasure::Exact)?.into(),
            negwit_core::avg_ln_mixed(&parts, AverageMeasure::ApproxPure)?.into(),
            (p * log_d).into(),
            a.purity.into(),
            rho.purity().into(),
            a.lambda_minus.into(),
            (p <= a.p_star).into(),
        ])
    })?;
    let mut table = Table::new(vec![
        "p",
        "ln_exact_analytic",
        "ln_exact_numeric",
        "ln_approx_analytic",
        "ln_approx_numeric",
        "ln_approx_sym_numeric",
        "avg_ln_exact",
        "avg_ln_approx",
        "avg_ln_analytic",
        "purity_analytic",
        "purity_numeric",
        "lambda_minus",
        "separable",
    ]);
    table.rows = rows;
    let a = negwit_core::werner_analytics(d, 0.0)?;
    table.notes.push(format!("d={d} p_star={} mu_star={}", a.p_star, a.mu_star));
    Ok(table)
}

pub fn psd(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let d = cfg.d();
    let rows = per_sample(cfg.samples, |i| {
        let ens = psd_sample(d, cfg.k, cfg.class, &mut root.split(i as u64))?;
        let rho = psd_to_density(&ens)?;
        Ok(vec![
            i.into(),
            rho.purity().into(),
            ln_exact_mixed(&rho)?.ln.into(),
            ln_approx_mixed(&rho)?.ln.into(),
            ln_approx_mixed_sym(&rho)?.ln.into(),
            negwit_core::avg_ln(&ens, AverageMeasure::ApproxPure)?.into(),
            negwit_core::avg_ln(&ens, AverageMeasure::Exact)?.into(),
        ])
    })?;
    let mut table = Table::new(vec![
        "sample_index",
        "purity",
        "ln_exact",
        "ln_approx",
        "ln_approx_sym",
        "avg_ln_approx",
        "avg_ln_exact",
    ]);
    table.rows = rows;
    table.notes.push(format!("class={} d={d} k={}", cfg.class, cfg.k));
    Ok(table)
}

pub fn purity_hist(cfg: &ExperimentConfig) -> CliResult<Table> {
    let d = cfg.d();
    let bell = make_pure(ComplexMatrix::identity(d))?;
    let base = pure_density(&bell);
    let root = RngStream::new(cfg.seed);
    let mut table = Table::new(vec!["eta", "bin_center", "count"]);
    let mut means = Vec::with_capacity(cfg.eta.len());
    for (j, &eta) in cfg.eta.iter().enumerate() {
        let stream = root.split(j as u64);
        let purities = per_sample(cfg.samples, |i| {
            Ok(purity_targeted_density(&base, eta, &mut stream.split(i as u64))?.purity())
        })?;
        means.push(purities.iter().sum::<f64>() / purities.len() as f64);
        for (center, count) in histogram(&purities, cfg.bins, (0.0, 1.0))? {
            table.push(vec![eta.into(), center.into(), count.into()]);
        }
    }
    table.notes.push(format!("d={d} samples_per_eta={}", cfg.samples));
    let rendered: Vec<String> = means.iter().map(|m| format!("{m:.16e}")).collect();
    table.notes.push(format!("mean_purity={}", rendered.join(";")));
    Ok(table)
}

pub fn mixed_random(cfg: &ExperimentConfig) -> CliResult<Table> {
    let root = RngStream::new(cfg.seed);
    let d = cfg.d();
    let rows = per_sample(cfg.samples, |i| {
        let rho = if cfg.inject_mixed && i == 0 {
            DensityMatrix::maximally_mixed(d * d, Some(d))?
        } else {
            random_density_matrix(d * d, &mut root.split(i as u64))?.with_split(d)?
        };
        let exact = ln_exact_mixed(&rho)?.ln;
        let approx = ln_approx_mixed(&rho)?.ln;
        Ok(vec![
            i.into(),
            rho.purity().into(),
            exact.into(),
            approx.into(),
            ln_approx_mixed_sym(&rho)?.ln.into(),
            (exact - approx).into(),
        ])
    })?;
    let mut table =
        Table::new(vec!["sample_index", "purity", "ln_exact", "ln_approx", "ln_approx_sym", "diff_exact_minus_approx"]);
    table.rows = rows;
    let diffs: Vec<f64> = table.rows.iter().map(|r| r[5].as_f64()).collect();
    table.notes.push(format!(
        "d={d} negative_diff_count={} positive_diff_count={}",
        diffs.iter().filter(|&&x| x < 0.0).count(),
        diffs.iter().filter(|&&x| x > 0.0).count()
    ));
    Ok(table)
}

/// Column to sort the companion file by, and whether descending.
pub fn sort_key(command: Command) -> Option<(&'static str, bool)> {
    match command {
        Command::Psd => Some(("purity", false)),
        Command::PureSweep | Command::RandomRows | Command::EtaDeviation | Command::TwoQubit | Command::MixedRandom => {
            Some(("ln_exact", true))
        }
        Command::Coherent | Command::Werner | Command::PurityHist => None,
    }
}

/// Commands whose sorted companion is written even without `--sorted`.
pub fn always_sorted(command: Command) -> bool {
    matches!(command, Command::PureSweep | Command::Psd)
}
