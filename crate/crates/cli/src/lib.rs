//! Experiment harness behind the `negwit` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::PathBuf;

pub use config::{Cli, Command, ExperimentConfig, Flags};
pub use error::{CliError, CliResult};

/// Files written by one run, main CSV first.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub files: Vec<PathBuf>,
}

/// Resolves the configuration, runs the experiment and writes its files.
pub fn execute(cli: &Cli) -> CliResult<RunOutput> {
    let cfg = ExperimentConfig::resolve(cli.command, &cli.flags)?;
    run_config(&cfg)
}

pub fn run_config(cfg: &ExperimentConfig) -> CliResult<RunOutput> {
    let table = commands::run(cfg)?;
    let opts = &cfg.output;
    let mut pending = vec![(opts.path.clone(), table.render(cfg))];
    if opts.sorted || commands::always_sorted(cfg.experiment) {
        if let Some((column, descending)) = commands::sort_key(cfg.experiment) {
            let sorted = table.sorted_by(column, descending).expect("sort column exists");
            pending.push((output::companion_path(&opts.path, "sorted", "csv"), sorted.render(cfg)));
        }
    }
    if opts.emit_plotscript {
        pending.push((output::companion_path(&opts.path, "", "gp"), output::plot_script(&table, &opts.path)));
    }
    // Check every target before writing any, so a collision leaves no partial output.
    if !opts.force {
        if let Some((path, _)) = pending.iter().find(|(p, _)| p.exists()) {
            return Err(CliError::io(
                path,
                std::io::Error::new(std::io::ErrorKind::AlreadyExists, "output exists; pass --force to overwrite"),
            ));
        }
    }
    for (path, contents) in &pending {
        output::write_file(path, contents, opts.force)?;
    }
    Ok(RunOutput { files: pending.into_iter().map(|(p, _)| p).collect() })
}
