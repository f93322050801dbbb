//! Command-line flags, JSON experiment files and their merge into one resolved
//! configuration. Flags override the file; the file overrides built-in defaults.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use negwit_core::AmplitudeClass;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "negwit", version, about = "Seeded log negativity experiments written as CSV")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Exact vs approximate log negativity over random pure states of one amplitude class.
    PureSweep,
    /// Symmetrized superpositions of two truncated coherent states over a grid of the second amplitude.
    Coherent,
    /// Symmetrized superpositions of two random unitary rows.
    RandomRows,
    /// Amplitudes C proportional to a base matrix plus eta times a random density matrix.
    EtaDeviation,
    /// Two-qubit states: numeric, approximate and closed-form log negativity.
    TwoQubit,
    /// Werner states over a grid of mixing probabilities, closed form and numeric.
    Werner,
    /// Mixed states built from random pure-state decompositions.
    Psd,
    /// Purity histograms of the Bell projector deviated by eta times a random density matrix.
    PurityHist,
    /// Haar-random mixed states.
    MixedRandom,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::PureSweep => "pure-sweep",
            Command::Coherent => "coherent",
            Command::RandomRows => "random-rows",
            Command::EtaDeviation => "eta-deviation",
            Command::TwoQubit => "two-qubit",
            Command::Werner => "werner",
            Command::Psd => "psd",
            Command::PurityHist => "purity-hist",
            Command::MixedRandom => "mixed-random",
        }
    }

    /// Default subsystem cutoff `M` (dimension `M + 1`).
    fn default_m(&self) -> usize {
        match self {
            Command::PureSweep => 40,
            Command::Coherent | Command::RandomRows | Command::EtaDeviation => 20,
            Command::Psd | Command::PurityHist => 10,
            Command::TwoQubit | Command::Werner | Command::MixedRandom => 1,
        }
    }
}

/// Base matrix of the eta-deviation experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Base {
    /// A random rank-one projector: a product state at eta = 0.
    Projector,
    /// The identity: the maximally entangled state at eta = 0.
    Identity,
}

fn parse_class(s: &str) -> Result<AmplitudeClass, String> {
    AmplitudeClass::from_str(s).map_err(|e| e.to_string())
}

/// A comma-separated list of reals given as one command-line value.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatList(pub Vec<f64>);

fn parse_list(s: &str) -> Result<FloatList, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()
        .map(FloatList)
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// JSON experiment file; flags given on the command line take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output CSV path (default: <command>.csv).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Fock cutoff M; each subsystem has dimension M + 1.
    #[arg(long = "dim-M", global = true)]
    pub dim_m: Option<usize>,
    #[arg(long, global = true, value_parser = parse_class)]
    pub class: Option<AmplitudeClass>,
    /// Comma-separated eta values.
    #[arg(long, global = true, value_parser = parse_list)]
    pub eta: Option<FloatList>,
    /// Comma-separated Werner probabilities.
    #[arg(long = "p-grid", global = true, value_parser = parse_list)]
    pub p_grid: Option<FloatList>,
    /// Components per pure-state decomposition.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true)]
    pub bins: Option<usize>,
    /// Also write a sorted copy (by descending ln_exact; psd sorts by purity).
    #[arg(long, global = true)]
    pub sorted: bool,
    /// Overwrite existing output files.
    #[arg(long, global = true)]
    pub force: bool,
    /// Write a gnuplot script next to the CSV.
    #[arg(long = "emit-plotscript", global = true)]
    pub emit_plotscript: bool,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta1: Option<f64>,
    /// Comma-separated grid for the second coherent amplitude.
    #[arg(long = "beta2-grid", global = true, value_parser = parse_list, allow_hyphen_values = true)]
    pub beta2_grid: Option<FloatList>,
    #[arg(long, global = true, value_enum)]
    pub base: Option<Base>,
    /// Draw both rows from the same unitary.
    #[arg(long = "same-unitary", global = true)]
    pub same_unitary: bool,
    /// With --same-unitary, use the same row twice.
    #[arg(long = "same-row", global = true)]
    pub same_row: bool,
    /// Replace sample 0 by the maximally mixed state.
    #[arg(long = "inject-mixed", global = true)]
    pub inject_mixed: bool,
}

/// Contents of a `--config` JSON file. All fields are optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub experiment: Option<Command>,
    #[serde(alias = "M")]
    pub dim_m: Option<usize>,
    /// Subsystem dimension; alternative to `dim_m` (`d = M + 1`).
    pub d: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub class: Option<AmplitudeClass>,
    pub eta: Option<EtaSpec>,
    pub p_grid: Option<Vec<f64>>,
    pub k: Option<usize>,
    pub bins: Option<usize>,
    pub output_path: Option<PathBuf>,
    pub beta1: Option<f64>,
    pub beta2_grid: Option<Vec<f64>>,
    pub base: Option<Base>,
    pub same_unitary: Option<bool>,
    pub same_row: Option<bool>,
    pub inject_mixed: Option<bool>,
    pub sorted: Option<bool>,
    pub emit_plotscript: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum EtaSpec {
    One(f64),
    Many(Vec<f64>),
}

impl EtaSpec {
    fn into_vec(self) -> Vec<f64> {
        match self {
            EtaSpec::One(x) => vec![x],
            EtaSpec::Many(v) => v,
        }
    }
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }
}

/// Fully resolved experiment parameters. Serialized (without output options)
/// to fingerprint a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: Command,
    pub dim_m: usize,
    pub samples: usize,
    pub seed: u64,
    pub class: AmplitudeClass,
    pub eta: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub k: usize,
    pub bins: usize,
    pub beta1: f64,
    pub beta2_grid: Vec<f64>,
    pub base: Base,
    pub same_unitary: bool,
    pub same_row: bool,
    pub inject_mixed: bool,
    #[serde(skip)]
    pub output: OutputOptions,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputOptions {
    pub path: PathBuf,
    pub sorted: bool,
    pub force: bool,
    pub emit_plotscript: bool,
}

pub const DEFAULT_SEED: u64 = 0;

fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect()
}

impl ExperimentConfig {
    pub fn resolve(command: Command, flags: &Flags) -> CliResult<Self> {
        let file = match &flags.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        Self::merge(command, flags, file)
    }

    pub fn merge(command: Command, flags: &Flags, file: ConfigFile) -> CliResult<Self> {
        if let Some(exp) = file.experiment {
            if exp != command {
                return Err(CliError::Config(format!(
                    "config file is for '{}' but the command is '{}'",
                    exp.name(),
                    command.name()
                )));
            }
        }
        let file_m = match (file.dim_m, file.d) {
            (Some(m), Some(d)) if d != m + 1 => {
                return Err(CliError::Config(format!("config gives M = {m} and d = {d}; need d = M + 1")))
            }
            (Some(m), _) => Some(m),
            (None, Some(0)) => return Err(CliError::Config("d must be at least 1".into())),
            (None, Some(d)) => Some(d - 1),
            (None, None) => None,
        };
        let default_eta = match command {
            Command::PurityHist => vec![0.0, 0.01, 0.1, 1.0, 10.0, 100.0, 1000.0],
            _ => vec![0.0, 0.01, 0.1, 1.0, 10.0],
        };
        let default_samples = match command {
            Command::TwoQubit => 1000,
            _ => 100,
        };
        let default_class = match command {
            Command::PureSweep | Command::Psd => AmplitudeClass::PositiveHermitian,
            _ => AmplitudeClass::ArbitraryComplex,
        };
        let cfg = ExperimentConfig {
            experiment: command,
            dim_m: flags.dim_m.or(file_m).unwrap_or_else(|| command.default_m()),
            samples: flags.samples.or(file.samples).unwrap_or(default_samples),
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            class: flags.class.or(file.class).unwrap_or(default_class),
            eta: flags.eta.clone().map(|l| l.0).or(file.eta.map(EtaSpec::into_vec)).unwrap_or(default_eta),
            p_grid: flags.p_grid.clone().map(|l| l.0).or(file.p_grid).unwrap_or_else(|| grid(0.0, 1.0, 21)),
            k: flags.k.or(file.k).unwrap_or(5),
            bins: flags.bins.or(file.bins).unwrap_or(20),
            beta1: flags.beta1.or(file.beta1).unwrap_or(0.5),
            beta2_grid: flags.beta2_grid.clone().map(|l| l.0).or(file.beta2_grid).unwrap_or_else(|| grid(-2.0, 2.0, 41)),
            base: flags.base.or(file.base).unwrap_or(Base::Projector),
            same_unitary: flags.same_unitary || file.same_unitary.unwrap_or(false),
            same_row: flags.same_row || file.same_row.unwrap_or(false),
            inject_mixed: flags.inject_mixed || file.inject_mixed.unwrap_or(false),
            output: OutputOptions {
                path: flags
                    .out
                    .clone()
                    .or(file.output_path)
                    .unwrap_or_else(|| PathBuf::from(format!("{}.csv", command.name()))),
                sorted: flags.sorted || file.sorted.unwrap_or(false),
                force: flags.force,
                emit_plotscript: flags.emit_plotscript || file.emit_plotscript.unwrap_or(false),
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> CliResult<()> {
        let bad = |msg: String| Err(CliError::Config(msg));
        if self.samples == 0 {
            return bad("samples must be at least 1".into());
        }
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.bins == 0 {
            return bad("bins must be at least 1".into());
        }
        if self.eta.is_empty() || self.eta.iter().any(|e| !(e.is_finite() && *e >= 0.0)) {
            return bad(format!("eta values must be finite and non-negative, got {:?}", self.eta));
        }
        if self.p_grid.is_empty() || self.p_grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return bad(format!("p-grid values must lie in [0, 1], got {:?}", self.p_grid));
        }
        if !self.beta1.is_finite() || self.beta2_grid.is_empty() || self.beta2_grid.iter().any(|b| !b.is_finite()) {
            return bad("coherent amplitudes must be finite and the grid non-empty".into());
        }
        match self.experiment {
            Command::RandomRows if self.dim_m == 0 => bad("random-rows needs M >= 1".into()),
            Command::Werner if self.dim_m == 0 => bad("Werner states need M >= 1".into()),
            _ => Ok(()),
        }
    }

    /// Subsystem dimension `M + 1`.
    pub fn d(&self) -> usize {
        self.dim_m + 1
    }

    /// SHA-256 of the canonical JSON of the experiment parameters.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        Sha256::digest(json.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}
