//! CSV tables: a comment line with provenance, a header row, then data rows.
//! Floats are written with 17 significant digits so files round-trip exactly.

use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use crate::config::ExperimentConfig;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            Cell::Int(v) => write!(out, "{v}"),
            Cell::Float(v) => write!(out, "{v:.16e}"),
            Cell::Bool(v) => write!(out, "{v}"),
        }
        .expect("writing to a String cannot fail");
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Cell::Int(v) => *v as f64,
            Cell::Float(v) => *v,
            Cell::Bool(v) => f64::from(u8::from(*v)),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Extra `# key=value` comment lines after the provenance line.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Copy with rows ordered by `column`, descending when `descending` is set.
    /// Ties keep their original order.
    pub fn sorted_by(&self, column: &str, descending: bool) -> Option<Table> {
        let idx = self.column(column)?;
        let mut sorted = self.clone();
        sorted.rows.sort_by(|a, b| {
            let ord = a[idx].as_f64().total_cmp(&b[idx].as_f64());
            if descending {
                ord.reverse()
            } else {
                ord
            }
        });
        sorted.notes.push(format!("sorted_by={column} {}", if descending { "descending" } else { "ascending" }));
        Some(sorted)
    }

    pub fn render(&self, cfg: &ExperimentConfig) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "# negwit {} version={} core={} rng={} seed={} config_sha256={}",
            cfg.experiment.name(),
            env!("CARGO_PKG_VERSION"),
            negwit_core::VERSION,
            negwit_core::random::RNG_ALGORITHM,
            cfg.seed,
            cfg.hash()
        )
        .unwrap();
        for note in &self.notes {
            writeln!(out, "# {note}").unwrap();
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.render(&mut out);
            }
            out.push('\n');
        }
        out
    }
}

/// Path of the sorted companion file: `runs/x.csv` becomes `runs/x.sorted.csv`.
pub fn companion_path(path: &Path, tag: &str, extension: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = if tag.is_empty() { format!("{stem}.{extension}") } else { format!("{stem}.{tag}.{extension}") };
    path.with_file_name(name)
}

/// Writes `contents`, refusing to replace an existing file unless `force` is set.
pub fn write_file(path: &Path, contents: &str, force: bool) -> CliResult<()> {
    let mut opts = OpenOptions::new();
    opts.write(true);
    if force {
        opts.create(true).truncate(true);
    } else {
        opts.create_new(true);
    }
    let mut file = opts.open(path).map_err(|e| CliError::io(path, e))?;
    file.write_all(contents.as_bytes()).map_err(|e| CliError::io(path, e))
}

/// Gnuplot script plotting every column against the first.
pub fn plot_script(table: &Table, csv: &Path) -> String {
    let name = csv.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let mut out = String::new();
    writeln!(out, "set datafile separator ','").unwrap();
    writeln!(out, "set datafile commentschars '#'").unwrap();
    writeln!(out, "set key autotitle columnhead").unwrap();
    writeln!(out, "set xlabel '{}'", table.columns[0]).unwrap();
    writeln!(out, "plot for [i=2:{}] '{name}' using 1:i with linespoints", table.columns.len()).unwrap();
    out
}
