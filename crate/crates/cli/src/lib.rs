//! Command-line surface of the fuzzy clustering toolkit.
//!
//! Every command computes all of its outputs in memory first and only then
//! writes them, so a failing command leaves no partial files behind.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde::Serialize;

use tfclust::io::{self, ConfigFile, CrispTable, Dataset};
use tfclust::sim::{self, ReplicationRecord};
use tfclust::transform::{inverse_transform_vector, transform_vector};
use tfclust::{QuadraticForm3, RunConfig};

mod plots;

/// File names written by `simulate` and read back by `report`.
pub const RAW_FILE: &str = "raw.csv";
pub const SCENARIO_FILE: &str = "scenarios.csv";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const FAILURE_FILE: &str = "failures.csv";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] tfclust::Error),
    #[error("cannot write {path}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("JSON encoding failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("plot rendering failed: {0}")]
    Plot(String),
    #[error("{failed} of {total} replications failed")]
    ReplicationsFailed { failed: usize, total: usize },
    #[error("no replication records in {0}")]
    EmptyRaw(PathBuf),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "tfclust",
    version,
    about = "Fuzzy clustering of triangular fuzzy data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cluster a dataset and write prototypes, memberships, weights and a run summary.
    Cluster {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Map a dataset to its crisp transform, or a crisp file back with --inverse.
    Transform {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        inverse: bool,
    },
    /// Run the scenario grid of a configuration file.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write one row per replication.
        #[arg(long)]
        raw: bool,
        /// Also render SVG plots of each scenario's first replication.
        #[arg(long)]
        plots: bool,
    },
    /// Re-aggregate the raw replication file of a simulate output directory.
    Report {
        #[arg(long)]
        raw: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Files to write, held until every output has been produced.
#[derive(Debug, Default)]
struct Staged {
    files: Vec<(PathBuf, Vec<u8>)>,
}

impl Staged {
    fn add(&mut self, path: PathBuf, bytes: Vec<u8>) {
        self.files.push((path, bytes));
    }

    fn commit(self) -> Result<()> {
        for (path, bytes) in self.files {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|source| CliError::Io {
                    path: parent.to_path_buf(),
                    source,
                })?;
            }
            fs::write(&path, bytes).map_err(|source| CliError::Io { path, source })?;
        }
        Ok(())
    }
}

pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Cluster { data, config, out } => cmd_cluster(&data, &config, &out),
        Command::Transform { data, out, inverse } => {
            if inverse {
                cmd_inverse_transform(&data, &out)
            } else {
                cmd_transform(&data, &out)
            }
        }
        Command::Simulate {
            config,
            out,
            raw,
            plots,
        } => cmd_simulate(&config, &out, raw, plots),
        Command::Report { raw, out } => cmd_report(&raw, &out),
    }
}

/// Run summary written as `summary.json` by `cluster`.
#[derive(Debug, Serialize)]
pub struct RunSummary {
    pub engine: String,
    pub clusters: usize,
    pub n: usize,
    pub features: usize,
    pub iterations: usize,
    pub converged: bool,
    pub final_objective: f64,
    pub objective_trace: Vec<f64>,
    pub config: ConfigEcho,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Serialize)]
pub struct ConfigEcho {
    pub m: f64,
    pub q: f64,
    pub omega: f64,
    pub epsilon: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub fixed_weights: bool,
}

impl From<&RunConfig> for ConfigEcho {
    fn from(c: &RunConfig) -> Self {
        Self {
            m: c.fuzzifier,
            q: c.weight_exponent,
            omega: c.weight_budget,
            epsilon: c.tolerance,
            max_iter: c.max_iter,
            seed: c.seed,
            fixed_weights: c.fixed_weights,
        }
    }
}

pub fn cmd_cluster(data: &Path, config: &Path, out: &Path) -> Result<()> {
    let ds = io::read_dataset(data)?;
    let cfg = ConfigFile::read(config)?.run_config()?;
    log::info!(
        "clustering {} data with {} features into {} clusters ({})",
        ds.data.len(),
        ds.feature_names.len(),
        cfg.clusters,
        cfg.engine
    );
    let result = tfclust::run(&ds.data, &cfg, None)?;
    if !result.converged {
        log::warn!("no convergence within {} iterations", cfg.max_iter);
    }

    let mut staged = Staged::default();

    let prototypes = Dataset::new(ds.feature_names.clone(), result.prototypes.clone())?;
    let mut buf = Vec::new();
    io::write_dataset_to(&mut buf, &prototypes)?;
    staged.add(out.join("prototypes.csv"), buf);

    let header: Vec<String> = (1..=cfg.clusters).map(|i| format!("u{i}")).collect();
    let rows: Vec<Vec<f64>> = (0..ds.data.len())
        .map(|k| result.memberships.column(k))
        .collect();
    let mut buf = Vec::new();
    io::write_matrix_to(&mut buf, &header, &rows)?;
    staged.add(out.join("memberships.csv"), buf);

    let rows: Vec<Vec<f64>> = result.weights.values().iter().map(|w| vec![*w]).collect();
    let mut buf = Vec::new();
    io::write_matrix_to(&mut buf, &["weight".to_string()], &rows)?;
    staged.add(out.join("weights.csv"), buf);

    let summary = RunSummary {
        engine: cfg.engine.to_string(),
        clusters: cfg.clusters,
        n: ds.data.len(),
        features: ds.feature_names.len(),
        iterations: result.iterations,
        converged: result.converged,
        final_objective: result.final_objective(),
        objective_trace: result.objective_trace.clone(),
        config: ConfigEcho::from(&cfg),
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs()),
    };
    let mut json = serde_json::to_vec_pretty(&summary)?;
    json.push(b'\n');
    staged.add(out.join("summary.json"), json);

    staged.commit()
}

pub fn cmd_transform(data: &Path, out: &Path) -> Result<()> {
    let ds = io::read_dataset(data)?;
    let t = QuadraticForm3::shared();
    let table = CrispTable {
        feature_names: ds.feature_names,
        rows: ds.data.iter().map(|x| transform_vector(x, t)).collect(),
        labels: ds.labels,
        label_name: ds.label_name,
    };
    let mut buf = Vec::new();
    io::write_crisp_to(&mut buf, &table)?;
    let mut staged = Staged::default();
    staged.add(out.to_path_buf(), buf);
    staged.commit()
}

/// Spreads this close to zero after the inverse map are rounding noise.
const SPREAD_NOISE: f64 = 1e-12;

pub fn cmd_inverse_transform(data: &Path, out: &Path) -> Result<()> {
    let table = io::read_crisp(data)?;
    let t = QuadraticForm3::shared();
    let mut vectors = Vec::with_capacity(table.rows.len());
    for (k, row) in table.rows.iter().enumerate() {
        let mut flat = inverse_transform_vector(row, t)?.into_flat();
        let scale = flat.iter().fold(1.0_f64, |a, v| a.max(v.abs()));
        for (j, v) in flat.iter_mut().enumerate().filter(|(j, _)| j % 3 != 0) {
            if *v < 0.0 {
                if -*v > SPREAD_NOISE * scale {
                    return Err(tfclust::Error::Row {
                        path: data.to_path_buf(),
                        row: k + 2,
                        message: format!(
                            "inverse transform gives negative spread {v} for feature {}",
                            table.feature_names[j / 3]
                        ),
                    }
                    .into());
                }
                *v = 0.0;
            }
        }
        vectors.push(tfclust::FuzzyVector::from_flat(flat)?);
    }
    let ds = Dataset {
        feature_names: table.feature_names,
        data: vectors,
        labels: table.labels,
        label_name: table.label_name,
    };
    let mut buf = Vec::new();
    io::write_dataset_to(&mut buf, &ds)?;
    let mut staged = Staged::default();
    staged.add(out.to_path_buf(), buf);
    staged.commit()
}

#[derive(Debug, Serialize)]
struct FailureRow {
    scenario: usize,
    replication: usize,
    error: String,
}

pub fn cmd_simulate(config: &Path, out: &Path, raw: bool, plots: bool) -> Result<()> {
    let specs = ConfigFile::read(config)?.scenarios()?;
    let total: usize = specs.iter().map(|s| s.replications).sum();
    log::info!("running {} scenarios, {total} replications", specs.len());
    let grid = sim::run_scenario_grid(&specs);

    let mut staged = Staged::default();
    let mut buf = Vec::new();
    io::write_records_to(&mut buf, &sim::scenario_table(&grid.records))?;
    staged.add(out.join(SCENARIO_FILE), buf);
    let mut buf = Vec::new();
    io::write_records_to(&mut buf, &sim::marginal_table(&grid.records))?;
    staged.add(out.join(SUMMARY_FILE), buf);
    if raw {
        let mut buf = Vec::new();
        io::write_records_to(&mut buf, &grid.records)?;
        staged.add(out.join(RAW_FILE), buf);
    }
    if !grid.failures.is_empty() {
        let rows: Vec<FailureRow> = grid
            .failures
            .iter()
            .map(|f| {
                log::error!("{}", error_chain(&f.error));
                FailureRow {
                    scenario: f.scenario,
                    replication: f.replication,
                    error: error_chain(&f.error),
                }
            })
            .collect();
        let mut buf = Vec::new();
        io::write_records_to(&mut buf, &rows)?;
        staged.add(out.join(FAILURE_FILE), buf);
    }
    if plots {
        for (s, spec) in specs.iter().enumerate() {
            if !grid
                .records
                .iter()
                .any(|r| r.scenario == s && r.replication == 0)
            {
                continue;
            }
            let rep = sim::run_replication(spec, 0)?;
            for (name, svg) in plots::render_replication(spec, &rep)? {
                staged.add(
                    out.join("plots").join(format!("scenario{s:03}_{name}.svg")),
                    svg,
                );
            }
        }
    }
    staged.commit()?;

    if grid.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::ReplicationsFailed {
            failed: grid.failures.len(),
            total,
        })
    }
}

pub fn cmd_report(raw: &Path, out: &Path) -> Result<()> {
    let path = if raw.is_dir() {
        raw.join(RAW_FILE)
    } else {
        raw.to_path_buf()
    };
    let records: Vec<ReplicationRecord> = io::read_records(&path)?;
    if records.is_empty() {
        return Err(CliError::EmptyRaw(path));
    }
    let mut buf = Vec::new();
    io::write_records_to(&mut buf, &sim::marginal_table(&records))?;
    let mut staged = Staged::default();
    staged.add(out.to_path_buf(), buf);
    staged.commit()
}

/// The error message followed by its sources, separated by `: `.
pub fn error_chain(e: &dyn std::error::Error) -> String {
    let mut msg = e.to_string();
    let mut source = e.source();
    while let Some(s) = source {
        msg.push_str(": ");
        msg.push_str(&s.to_string());
        source = s.source();
    }
    msg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_subcommand() {
        let cli = Cli::try_parse_from([
            "tfclust",
            "transform",
            "--data",
            "a.csv",
            "--out",
            "b.csv",
            "--inverse",
        ])
        .unwrap();
        assert!(matches!(
            cli.command,
            Command::Transform { inverse: true, .. }
        ));
        let cli = Cli::try_parse_from(["tfclust", "simulate", "--config", "c.toml", "--out", "o"])
            .unwrap();
        assert!(matches!(
            cli.command,
            Command::Simulate {
                raw: false,
                plots: false,
                ..
            }
        ));
        assert!(Cli::try_parse_from(["tfclust", "cluster", "--data", "a.csv"]).is_err());
        assert!(Cli::try_parse_from(["tfclust", "report", "--raw", "d"]).is_err());
    }

    #[test]
    fn error_chain_joins_sources() {
        let inner = tfclust::Error::Config("bad m".into());
        let outer = tfclust::Error::Scenario {
            scenario: "#0".into(),
            source: Box::new(inner),
        };
        let msg = error_chain(&CliError::from(outer));
        assert_eq!(msg, "scenario #0 failed: invalid configuration: bad m");
    }

    #[test]
    fn staged_files_appear_only_on_commit() {
        let dir = std::env::temp_dir().join(format!("tfclust-staged-{}", std::process::id()));
        let mut staged = Staged::default();
        staged.add(dir.join("nested").join("a.txt"), b"a".to_vec());
        assert!(!dir.exists());
        staged.commit().unwrap();
        assert_eq!(fs::read(dir.join("nested").join("a.txt")).unwrap(), b"a");
        fs::remove_dir_all(dir).unwrap();
    }
}
