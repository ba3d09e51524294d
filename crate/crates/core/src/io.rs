//! Dataset CSV files and TOML run configuration.
//!
//! A dataset file has a header naming three columns per feature,
//! `<name>_c,<name>_l,<name>_r`, optionally followed by one integer label
//! column, and one row per datum. Values are written with 17 significant
//! digits so every `f64` survives a write/read round trip.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::cluster::{Engine, RunConfig};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyVector;
use crate::sim::{derive_seed, Case, ScenarioSpec};

const SUFFIXES: [&str; 3] = ["_c", "_l", "_r"];
const CRISP_SUFFIXES: [&str; 3] = ["_t1", "_t2", "_t3"];

/// Formats with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// A fuzzy dataset with its feature names and optional labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub feature_names: Vec<String>,
    pub data: Vec<FuzzyVector>,
    pub labels: Option<Vec<i64>>,
    /// Header of the label column, when present.
    pub label_name: Option<String>,
}

impl Dataset {
    pub fn new(feature_names: Vec<String>, data: Vec<FuzzyVector>) -> Result<Self> {
        if let Some(x) = data.iter().find(|x| x.dim() != feature_names.len()) {
            return Err(Error::DimensionMismatch {
                expected: feature_names.len(),
                found: x.dim(),
            });
        }
        Ok(Self {
            feature_names,
            data,
            labels: None,
            label_name: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.data.len() {
            return Err(Error::DimensionMismatch {
                expected: self.data.len(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        self.label_name = Some("label".into());
        Ok(self)
    }

    /// Names `x1, x2, …` for `p` features.
    pub fn default_names(p: usize) -> Vec<String> {
        (1..=p).map(|j| format!("x{j}")).collect()
    }
}

/// Reads and validates a dataset file.
pub fn read_dataset(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    parse_dataset(open(path)?, path)
}

/// Parses dataset CSV; `path` only labels error messages.
pub fn parse_dataset(reader: impl Read, path: &Path) -> Result<Dataset> {
    let table = read_table(reader, path)?;
    let (names, has_label) = split_header(&table.header, &SUFFIXES, path)?;
    let p = names.len();

    let mut data = Vec::with_capacity(table.rows.len());
    let mut labels = has_label.then(Vec::new);
    for (idx, row) in table.rows.iter().enumerate() {
        let line = idx + 2;
        let row_err = |message: String| Error::Row {
            path: path.to_path_buf(),
            row: line,
            message,
        };
        let values = parse_numbers(&row[..3 * p], &table.header, line, path)?;
        for j in 0..p {
            for (offset, side) in [(1, "left"), (2, "right")] {
                let v = values[3 * j + offset];
                if v < 0.0 {
                    return Err(row_err(format!(
                        "negative {side} spread {v} in column {}",
                        table.header[3 * j + offset]
                    )));
                }
            }
        }
        data.push(FuzzyVector::from_flat(values)?);
        if let Some(labels) = labels.as_mut() {
            let raw = row[3 * p].trim();
            let label = raw
                .parse::<i64>()
                .map_err(|_| row_err(format!("label {raw:?} is not an integer")))?;
            labels.push(label);
        }
    }
    Ok(Dataset {
        feature_names: names,
        data,
        labels,
        label_name: has_label.then(|| table.header[3 * p].clone()),
    })
}

/// Writes a dataset file.
pub fn write_dataset(path: impl AsRef<Path>, ds: &Dataset) -> Result<()> {
    let mut file = File::create(path.as_ref())?;
    write_dataset_to(&mut file, ds)?;
    file.flush()?;
    Ok(())
}

pub fn write_dataset_to(writer: impl Write, ds: &Dataset) -> Result<()> {
    let rows = ds
        .data
        .iter()
        .map(|x| x.as_flat().to_vec())
        .collect::<Vec<_>>();
    write_triples(writer, &ds.feature_names, &SUFFIXES, &rows, ds)
}

/// Crisp `3p`-column file of transformed data.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispTable {
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Option<Vec<i64>>,
    pub label_name: Option<String>,
}

/// Writes transformed rows with headers `<name>_t1,<name>_t2,<name>_t3`,
/// carrying the dataset's labels along.
pub fn write_crisp(path: impl AsRef<Path>, table: &CrispTable) -> Result<()> {
    let mut file = File::create(path.as_ref())?;
    write_crisp_to(&mut file, table)?;
    file.flush()?;
    Ok(())
}

pub fn write_crisp_to(writer: impl Write, table: &CrispTable) -> Result<()> {
    let carrier = Dataset {
        feature_names: table.feature_names.clone(),
        data: Vec::new(),
        labels: table.labels.clone(),
        label_name: table.label_name.clone(),
    };
    write_triples(
        writer,
        &table.feature_names,
        &CRISP_SUFFIXES,
        &table.rows,
        &carrier,
    )
}

/// Reads a crisp file. Columns come in triples; a lone trailing column is
/// read as integer labels. Triple names lose their `_t1/_t2/_t3` suffix
/// when present.
pub fn read_crisp(path: impl AsRef<Path>) -> Result<CrispTable> {
    let path = path.as_ref();
    let table = read_table(open(path)?, path)?;
    let width = table.header.len();
    let has_label = width % 3 == 1;
    let p = width / 3;
    if p == 0 || width % 3 == 2 {
        return Err(Error::Format {
            path: path.to_path_buf(),
            message: format!("expected 3p or 3p+1 columns, found {width}"),
        });
    }
    let names = (0..p)
        .map(|j| {
            let h = &table.header[3 * j];
            h.strip_suffix(CRISP_SUFFIXES[0]).unwrap_or(h).to_string()
        })
        .collect();
    let mut rows = Vec::with_capacity(table.rows.len());
    let mut labels = has_label.then(Vec::new);
    for (idx, row) in table.rows.iter().enumerate() {
        rows.push(parse_numbers(&row[..3 * p], &table.header, idx + 2, path)?);
        if let Some(labels) = labels.as_mut() {
            let raw = row[3 * p].trim();
            labels.push(raw.parse::<i64>().map_err(|_| Error::Row {
                path: path.to_path_buf(),
                row: idx + 2,
                message: format!("label {raw:?} is not an integer"),
            })?);
        }
    }
    Ok(CrispTable {
        feature_names: names,
        rows,
        labels,
        label_name: has_label.then(|| table.header[3 * p].clone()),
    })
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| Error::Open {
        path: path.to_path_buf(),
        source,
    })
}

struct RawTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

fn read_table(reader: impl Read, path: &Path) -> Result<RawTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header.is_empty() || header.iter().all(String::is_empty) {
        return Err(Error::Format {
            path: path.to_path_buf(),
            message: "missing header row".into(),
        });
    }
    let mut rows = Vec::new();
    for (idx, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Row {
            path: path.to_path_buf(),
            row: idx + 2,
            message: match e.kind() {
                csv::ErrorKind::UnequalLengths {
                    expected_len, len, ..
                } => {
                    format!("expected {expected_len} fields as in the header, found {len}")
                }
                _ => e.to_string(),
            },
        })?;
        rows.push(rec.iter().map(str::to_string).collect());
    }
    Ok(RawTable { header, rows })
}

fn split_header(
    header: &[String],
    suffixes: &[&str; 3],
    path: &Path,
) -> Result<(Vec<String>, bool)> {
    let width = header.len();
    let has_label = width % 3 == 1;
    let p = width / 3;
    let fail = |message: String| Error::Format {
        path: path.to_path_buf(),
        message,
    };
    if p == 0 || width % 3 == 2 {
        return Err(fail(format!("expected 3p or 3p+1 columns, found {width}")));
    }
    let mut names = Vec::with_capacity(p);
    for j in 0..p {
        let name = header[3 * j].strip_suffix(suffixes[0]).ok_or_else(|| {
            fail(format!(
                "column {:?} should end in {}",
                header[3 * j],
                suffixes[0]
            ))
        })?;
        for (offset, suffix) in suffixes.iter().enumerate().skip(1) {
            let expected = format!("{name}{suffix}");
            if header[3 * j + offset] != expected {
                return Err(fail(format!(
                    "column {:?} should be {expected:?}",
                    header[3 * j + offset]
                )));
            }
        }
        names.push(name.to_string());
    }
    Ok((names, has_label))
}

fn parse_numbers(
    fields: &[String],
    header: &[String],
    line: usize,
    path: &Path,
) -> Result<Vec<f64>> {
    fields
        .iter()
        .enumerate()
        .map(|(col, raw)| {
            let v = raw.parse::<f64>().map_err(|_| Error::Row {
                path: path.to_path_buf(),
                row: line,
                message: format!("column {}: {raw:?} is not a number", header[col]),
            })?;
            if !v.is_finite() {
                return Err(Error::Row {
                    path: path.to_path_buf(),
                    row: line,
                    message: format!("column {}: value {raw} is not finite", header[col]),
                });
            }
            Ok(v)
        })
        .collect()
}

fn write_triples(
    writer: impl Write,
    names: &[String],
    suffixes: &[&str; 3],
    rows: &[Vec<f64>],
    labels_from: &Dataset,
) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    let mut header: Vec<String> = names
        .iter()
        .flat_map(|n| suffixes.iter().map(move |s| format!("{n}{s}")))
        .collect();
    if let Some(labels) = &labels_from.labels {
        if labels.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                found: labels.len(),
            });
        }
        header.push(
            labels_from
                .label_name
                .clone()
                .unwrap_or_else(|| "label".into()),
        );
    }
    wtr.write_record(&header)?;
    for (k, row) in rows.iter().enumerate() {
        if row.len() != 3 * names.len() {
            return Err(Error::DimensionMismatch {
                expected: 3 * names.len(),
                found: row.len(),
            });
        }
        let mut record: Vec<String> = row.iter().map(|v| fmt_f64(*v)).collect();
        if let Some(labels) = &labels_from.labels {
            record.push(labels[k].to_string());
        }
        wtr.write_record(&record)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Writes a matrix of numbers under the given header.
pub fn write_matrix(path: impl AsRef<Path>, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let mut file = File::create(path.as_ref())?;
    write_matrix_to(&mut file, header, rows)?;
    file.flush()?;
    Ok(())
}

pub fn write_matrix_to(writer: impl Write, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(header)?;
    for row in rows {
        if row.len() != header.len() {
            return Err(Error::DimensionMismatch {
                expected: header.len(),
                found: row.len(),
            });
        }
        wtr.write_record(row.iter().map(|v| fmt_f64(*v)))?;
    }
    wtr.flush()?;
    Ok(())
}

/// Writes serializable records as CSV.
pub fn write_records<T: Serialize>(path: impl AsRef<Path>, records: &[T]) -> Result<()> {
    let mut file = File::create(path.as_ref())?;
    write_records_to(&mut file, records)?;
    file.flush()?;
    Ok(())
}

pub fn write_records_to<T: Serialize>(writer: impl Write, records: &[T]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Reads CSV written by [`write_records`].
pub fn read_records<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<Vec<T>> {
    let path = path.as_ref();
    let mut rdr = csv::Reader::from_reader(open(path)?);
    rdr.deserialize()
        .enumerate()
        .map(|(idx, r)| {
            r.map_err(|e| Error::Row {
                path: path.to_path_buf(),
                row: idx + 2,
                message: e.to_string(),
            })
        })
        .collect()
}

/// A scalar or a list of scalars; lists expand into grid axes.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    fn values(&self) -> Vec<T> {
        match self {
            OneOrMany::One(v) => vec![v.clone()],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

/// A TOML number that may be written as an integer.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Float(f64),
}

impl Number {
    pub fn as_f64(self) -> f64 {
        match self {
            Number::Int(i) => i as f64,
            Number::Float(f) => f,
        }
    }
}

/// Configuration file.
///
/// Top-level keys configure `cluster` runs and act as defaults for every
/// `[[scenario]]` block of `simulate`. Unknown keys are rejected.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub engine: Option<Engine>,
    pub clusters: Option<usize>,
    pub m: Option<Number>,
    pub q: Option<Number>,
    pub omega: Option<Number>,
    pub epsilon: Option<Number>,
    pub max_iter: Option<usize>,
    pub seed: Option<u64>,
    pub fixed_weights: Option<bool>,
    pub replications: Option<usize>,
    #[serde(default)]
    pub scenario: Vec<ScenarioBlock>,
}

/// One `[[scenario]]` block; list values expand into a Cartesian grid.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioBlock {
    pub case: Option<OneOrMany<Case>>,
    pub outliers: Option<bool>,
    pub n: Option<OneOrMany<usize>>,
    #[serde(alias = "features")]
    pub k: Option<OneOrMany<usize>>,
    pub theta: Option<OneOrMany<Number>>,
    pub h: Option<OneOrMany<Number>>,
    pub m: Option<OneOrMany<Number>>,
    pub q: Option<OneOrMany<Number>>,
    pub omega: Option<OneOrMany<Number>>,
    pub replications: Option<usize>,
    pub n_includes_outliers: Option<bool>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut text = String::new();
        open(path)?.read_to_string(&mut text)?;
        Self::parse(&text, path)
    }

    /// Run configuration for `cluster`; absent keys fall back to defaults
    /// (`q = 1`, `ω = 200`), each logged.
    pub fn run_config(&self) -> Result<RunConfig> {
        let d = RunConfig::default();
        let cfg = RunConfig {
            clusters: or_default("clusters", self.clusters, d.clusters),
            fuzzifier: or_default("m", self.m.map(Number::as_f64), d.fuzzifier),
            weight_exponent: or_default("q", self.q.map(Number::as_f64), d.weight_exponent),
            weight_budget: or_default("omega", self.omega.map(Number::as_f64), d.weight_budget),
            tolerance: or_default("epsilon", self.epsilon.map(Number::as_f64), d.tolerance),
            max_iter: or_default("max_iter", self.max_iter, d.max_iter),
            seed: or_default("seed", self.seed, d.seed),
            engine: or_default("engine", self.engine, d.engine),
            fixed_weights: self.fixed_weights.unwrap_or(false),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Expands every scenario block into concrete specs.
    ///
    /// Scenario `i` (in expansion order) gets seed `derive_seed(seed, i)`.
    /// Without an explicit `q`, clean scenarios use 1 and contaminated ones 2.
    pub fn scenarios(&self) -> Result<Vec<ScenarioSpec>> {
        if self.scenario.is_empty() {
            return Err(Error::Config(
                "no [[scenario]] blocks in configuration".into(),
            ));
        }
        let master = or_default("seed", self.seed, 0);
        let engine = or_default("engine", self.engine, Engine::Approach1);
        let tolerance = self.epsilon.map_or(1e-6, Number::as_f64);
        let max_iter = self.max_iter.unwrap_or(300);
        let f = |v: &Option<OneOrMany<Number>>,
                 top: Option<Number>,
                 name: &str,
                 default: Option<f64>| {
            match (v, top) {
                (Some(v), _) => Ok(v.values().into_iter().map(Number::as_f64).collect()),
                (None, Some(t)) => Ok(vec![t.as_f64()]),
                (None, None) => match default {
                    Some(d) => {
                        log::info!("scenario key `{name}` not set, using {d}");
                        Ok(vec![d])
                    }
                    None => Err(Error::Config(format!("scenario key `{name}` is required"))),
                },
            }
        };

        let mut specs = Vec::new();
        for (b, block) in self.scenario.iter().enumerate() {
            let outliers = block.outliers.unwrap_or(false);
            let cases =
                block.case.as_ref().map(OneOrMany::values).ok_or_else(|| {
                    Error::Config(format!("scenario block {b}: `case` is required"))
                })?;
            let ns = block
                .n
                .as_ref()
                .map(OneOrMany::values)
                .ok_or_else(|| Error::Config(format!("scenario block {b}: `n` is required")))?;
            let ks = block
                .k
                .as_ref()
                .map(OneOrMany::values)
                .ok_or_else(|| Error::Config(format!("scenario block {b}: `k` is required")))?;
            let thetas = f(&block.theta, None, "theta", Some(1.5))?;
            let hs = f(&block.h, None, "h", Some(1.0))?;
            let ms = f(&block.m, self.m, "m", Some(2.0))?;
            let qs = f(
                &block.q,
                self.q,
                "q",
                Some(if outliers { 2.0 } else { 1.0 }),
            )?;
            let omegas = f(&block.omega, self.omega, "omega", Some(200.0))?;
            let replications = block.replications.or(self.replications).unwrap_or(1);

            for &case in &cases {
                for &n in &ns {
                    for &k in &ks {
                        for &theta in &thetas {
                            for &h in &hs {
                                for &m in &ms {
                                    for &q in &qs {
                                        for &omega in &omegas {
                                            let index = specs.len() as u64;
                                            let spec = ScenarioSpec {
                                                case,
                                                outliers,
                                                n,
                                                features: k,
                                                theta,
                                                h,
                                                fuzzifier: m,
                                                weight_exponent: q,
                                                weight_budget: omega,
                                                replications,
                                                seed: derive_seed(master, index),
                                                n_includes_outliers: block
                                                    .n_includes_outliers
                                                    .unwrap_or(false),
                                                engine,
                                                tolerance,
                                                max_iter,
                                            };
                                            spec.validate().map_err(|e| {
                                                Error::Config(format!("scenario block {b}: {e}"))
                                            })?;
                                            specs.push(spec);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(specs)
    }
}

fn or_default<T: std::fmt::Debug>(name: &str, v: Option<T>, default: T) -> T {
    v.unwrap_or_else(|| {
        log::info!("config key `{name}` not set, using default {default:?}");
        default
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Dataset> {
        parse_dataset(text.as_bytes(), Path::new("mem.csv"))
    }

    #[test]
    fn reads_crisp_rows() {
        let ds = parse("x_c,x_l,x_r\n1,0,0\n4,0,0\n").unwrap();
        assert_eq!(ds.feature_names, vec!["x"]);
        assert_eq!(ds.data.len(), 2);
        assert_eq!(ds.data[1].as_flat(), &[4.0, 0.0, 0.0]);
        assert!(ds.labels.is_none());
    }

    #[test]
    fn reads_trailing_labels() {
        let ds = parse("a_c,a_l,a_r,b_c,b_l,b_r,group\n1,0,0,2,1,1,0\n4,0,0,3,1,2,1\n").unwrap();
        assert_eq!(ds.feature_names, vec!["a", "b"]);
        assert_eq!(ds.labels, Some(vec![0, 1]));
        assert_eq!(ds.label_name.as_deref(), Some("group"));
    }

    #[test]
    fn reports_row_of_bad_input() {
        let err = parse("x_c,x_l,x_r\n1,0,0\n4,-1,0\n").unwrap_err();
        match err {
            Error::Row { row, message, .. } => {
                assert_eq!(row, 3);
                assert!(message.contains("x_l"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse("x_c,x_l,x_r\n1,0\n").unwrap_err(),
            Error::Row { row: 2, .. }
        ));
        assert!(matches!(
            parse("x_c,x_l,x_r\n1,abc,0\n").unwrap_err(),
            Error::Row { row: 2, .. }
        ));
        assert!(matches!(
            parse("x_c,x_l,x_r\nnan,0,0\n").unwrap_err(),
            Error::Row { .. }
        ));
        assert!(matches!(
            parse("x_c,x_l,x_r,g\n1,0,0,zz\n").unwrap_err(),
            Error::Row { .. }
        ));
    }

    #[test]
    fn rejects_bad_headers() {
        assert!(matches!(
            parse("x_c,x_l\n1,0\n").unwrap_err(),
            Error::Format { .. }
        ));
        assert!(matches!(
            parse("x_c,y_l,x_r\n1,0,0\n").unwrap_err(),
            Error::Format { .. }
        ));
        assert!(matches!(
            parse("x,x_l,x_r\n1,0,0\n").unwrap_err(),
            Error::Format { .. }
        ));
    }

    #[test]
    fn seventeen_digit_format_round_trips() {
        for v in [
            0.1,
            1.0 / 3.0,
            -2.5e-300,
            123_456_789.123_456_79,
            f64::MAX,
            5e-324,
        ] {
            assert_eq!(fmt_f64(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn config_defaults_and_unknown_keys() {
        let cfg = ConfigFile::parse(
            "clusters = 3\nm = 2\nengine = \"approach2\"\n",
            Path::new("c.toml"),
        )
        .unwrap()
        .run_config()
        .unwrap();
        assert_eq!(cfg.clusters, 3);
        assert_eq!(cfg.fuzzifier, 2.0);
        assert_eq!(cfg.engine, Engine::Approach2);
        assert_eq!(cfg.weight_exponent, 1.0);
        assert_eq!(cfg.weight_budget, 200.0);
        assert!(ConfigFile::parse("clusterz = 3\n", Path::new("c.toml")).is_err());
        assert!(ConfigFile::parse("m = 0.5\n", Path::new("c.toml"))
            .unwrap()
            .run_config()
            .is_err());
    }

    #[test]
    fn scenario_blocks_expand_to_grid() {
        let text = r#"
            seed = 5
            [[scenario]]
            case = ["alpha", "beta"]
            n = [10, 50]
            k = 2
            theta = [1.5, 0.75]
            replications = 3

            [[scenario]]
            case = "alpha"
            outliers = true
            n = 100
            k = [2, 8]
        "#;
        let specs = ConfigFile::parse(text, Path::new("s.toml"))
            .unwrap()
            .scenarios()
            .unwrap();
        assert_eq!(specs.len(), 2 * 2 * 2 + 2);
        assert!(specs[..8]
            .iter()
            .all(|s| s.weight_exponent == 1.0 && s.replications == 3));
        assert!(specs[8..]
            .iter()
            .all(|s| s.weight_exponent == 2.0 && s.outliers));
        assert_eq!(specs[0].seed, derive_seed(5, 0));
        assert_ne!(specs[0].seed, specs[1].seed);

        let missing = "[[scenario]]\ncase = \"alpha\"\nk = 2\n";
        assert!(ConfigFile::parse(missing, Path::new("s.toml"))
            .unwrap()
            .scenarios()
            .is_err());
        assert!(ConfigFile::parse("seed = 1\n", Path::new("s.toml"))
            .unwrap()
            .scenarios()
            .is_err());
        let unknown = "[[scenario]]\ncase = \"alpha\"\nn = 10\nk = 2\nbogus = 1\n";
        assert!(ConfigFile::parse(unknown, Path::new("s.toml")).is_err());
    }
}
