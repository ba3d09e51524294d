use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use tfclust::io::{self, Dataset};
use tfclust::{vector_distance_sq, FuzzyVector};

fn tfclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfclust"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn random_dataset(n: usize, p: usize, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n)
        .map(|_| {
            let flat = (0..p)
                .flat_map(|_| {
                    [
                        rng.random_range(-10.0..10.0),
                        rng.random_range(0.0..5.0),
                        rng.random_range(0.0..5.0),
                    ]
                })
                .collect();
            FuzzyVector::from_flat(flat).unwrap()
        })
        .collect();
    Dataset::new(Dataset::default_names(p), data).unwrap()
}

fn two_groups(seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..40)
        .map(|k| {
            let shift = if k < 20 { 0.0 } else { 4.0 };
            let flat = (0..2)
                .flat_map(|_| {
                    [
                        shift + rng.random_range(0.0..1.0),
                        rng.random_range(0.2..1.0),
                        rng.random_range(0.2..1.0),
                    ]
                })
                .collect();
            FuzzyVector::from_flat(flat).unwrap()
        })
        .collect();
    Dataset::new(Dataset::default_names(2), data).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn read_matrix(path: &Path) -> Vec<Vec<f64>> {
    let mut rdr = csv::Reader::from_path(path).unwrap();
    rdr.records()
        .map(|r| r.unwrap().iter().map(|v| v.parse().unwrap()).collect())
        .collect()
}

fn summary(path: &Path) -> serde_json::Value {
    serde_json::from_slice(&fs::read(path).unwrap()).unwrap()
}

#[test]
fn transform_then_inverse_recovers_input() {
    let dir = TempDir::new().unwrap();
    let ds = random_dataset(60, 3, 1)
        .with_labels((0..60).map(|k| k % 3).collect())
        .unwrap();
    let data = dir.path().join("data.csv");
    io::write_dataset(&data, &ds).unwrap();
    let crisp = dir.path().join("crisp.csv");
    let back = dir.path().join("back.csv");

    assert!(
        tfclust(&["transform", "--data", s(&data), "--out", s(&crisp)])
            .status
            .success()
    );
    let out = tfclust(&[
        "transform",
        "--inverse",
        "--data",
        s(&crisp),
        "--out",
        s(&back),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let recovered = io::read_dataset(&back).unwrap();
    assert_eq!(recovered.feature_names, ds.feature_names);
    assert_eq!(recovered.labels, ds.labels);
    for (a, b) in ds.data.iter().zip(&recovered.data) {
        for (x, y) in a.as_flat().iter().zip(b.as_flat()) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}

#[test]
fn transformed_distances_are_euclidean() {
    let dir = TempDir::new().unwrap();
    let ds = random_dataset(200, 2, 2);
    let data = dir.path().join("data.csv");
    io::write_dataset(&data, &ds).unwrap();
    let crisp = dir.path().join("crisp.csv");
    assert!(
        tfclust(&["transform", "--data", s(&data), "--out", s(&crisp)])
            .status
            .success()
    );

    let table = io::read_crisp(&crisp).unwrap();
    assert_eq!(table.rows[0].len(), 6);
    for pair in 0..100 {
        let (i, j) = (2 * pair, 2 * pair + 1);
        let euclid: f64 = table.rows[i]
            .iter()
            .zip(&table.rows[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        let fuzzy = vector_distance_sq(&ds.data[i], &ds.data[j]).unwrap().sqrt();
        assert!(
            (euclid - fuzzy).abs() < 1e-9,
            "pair {pair}: {euclid} vs {fuzzy}"
        );
    }
}

#[test]
fn zero_dataset_transforms_to_zero() {
    let dir = TempDir::new().unwrap();
    let data = write(dir.path(), "zero.csv", "a_c,a_l,a_r\n0,0,0\n0,0,0\n");
    let crisp = dir.path().join("crisp.csv");
    assert!(
        tfclust(&["transform", "--data", s(&data), "--out", s(&crisp)])
            .status
            .success()
    );
    let table = io::read_crisp(&crisp).unwrap();
    assert!(table.rows.iter().flatten().all(|v| *v == 0.0));
}

#[test]
fn single_cluster_prototype_is_weighted_mean() {
    let dir = TempDir::new().unwrap();
    let ds = random_dataset(25, 2, 3);
    let data = dir.path().join("data.csv");
    io::write_dataset(&data, &ds).unwrap();
    let config = write(dir.path(), "c.toml", "clusters = 1\nq = 1\nseed = 4\n");
    let out = dir.path().join("out");
    let res = tfclust(&[
        "cluster",
        "--data",
        s(&data),
        "--config",
        s(&config),
        "--out",
        s(&out),
    ]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );

    let weights: Vec<f64> = read_matrix(&out.join("weights.csv"))
        .into_iter()
        .map(|r| r[0])
        .collect();
    let proto = io::read_dataset(out.join("prototypes.csv")).unwrap();
    assert_eq!(proto.data.len(), 1);
    let total: f64 = weights.iter().map(|w| 1.0 / w).sum();
    for j in 0..6 {
        let mean: f64 = ds
            .data
            .iter()
            .zip(&weights)
            .map(|(x, w)| x.as_flat()[j] / w)
            .sum::<f64>()
            / total;
        assert!((proto.data[0].as_flat()[j] - mean).abs() < 1e-9);
    }
    let u = read_matrix(&out.join("memberships.csv"));
    assert!(u.iter().all(|r| r == &[1.0]));
    let sum = summary(&out.join("summary.json"));
    assert_eq!(sum["clusters"], 1);
    assert!(sum["objective_trace"].as_array().unwrap().len() >= 2);
}

#[test]
fn engines_report_matching_objectives() {
    let dir = TempDir::new().unwrap();
    let data = dir.path().join("data.csv");
    io::write_dataset(&data, &two_groups(5)).unwrap();
    let mut objectives = Vec::new();
    for engine in ["approach1", "approach2"] {
        let config = write(
            dir.path(),
            &format!("{engine}.toml"),
            &format!("engine = \"{engine}\"\nclusters = 2\nseed = 11\nepsilon = 1e-10\n"),
        );
        let out = dir.path().join(engine);
        let res = tfclust(&[
            "cluster",
            "--data",
            s(&data),
            "--config",
            s(&config),
            "--out",
            s(&out),
        ]);
        assert!(res.status.success());
        let sum = summary(&out.join("summary.json"));
        assert_eq!(sum["engine"], engine);
        objectives.push(sum["final_objective"].as_f64().unwrap());
    }
    assert!(
        (objectives[0] - objectives[1]).abs() < 1e-6,
        "{objectives:?}"
    );
}

#[test]
fn failures_leave_no_partial_outputs() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "c.toml", "clusters = 2\n");
    let out = dir.path().join("out");
    let missing = dir.path().join("missing.csv");
    let res = tfclust(&[
        "cluster",
        "--data",
        s(&missing),
        "--config",
        s(&config),
        "--out",
        s(&out),
    ]);
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("missing.csv"));
    assert!(!out.exists());

    let data = dir.path().join("data.csv");
    io::write_dataset(&data, &random_dataset(10, 1, 6)).unwrap();
    let bad = write(dir.path(), "bad.toml", "clusters = 2\nfuzzifier = 2\n");
    let res = tfclust(&[
        "cluster",
        "--data",
        s(&data),
        "--config",
        s(&bad),
        "--out",
        s(&out),
    ]);
    assert!(!res.status.success());
    assert!(!out.exists());

    // more clusters than data fails inside the run itself
    let many = write(dir.path(), "many.toml", "clusters = 10\n");
    let res = tfclust(&[
        "cluster",
        "--data",
        s(&data),
        "--config",
        s(&many),
        "--out",
        s(&out),
    ]);
    assert!(!res.status.success());
    assert!(!out.exists());
}

#[test]
fn malformed_rows_are_reported_with_position() {
    let dir = TempDir::new().unwrap();
    let data = write(dir.path(), "d.csv", "x_c,x_l,x_r\n1,0,0\n2,0.5,-1\n");
    let out = dir.path().join("t.csv");
    let res = tfclust(&["transform", "--data", s(&data), "--out", s(&out)]);
    assert!(!res.status.success());
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains("row 3") && err.contains("x_r"), "{err}");
    assert!(!out.exists());

    let data = write(dir.path(), "e.csv", "x_c,x_l,x_r\n1,0,0,7\n");
    let res = tfclust(&["transform", "--data", s(&data), "--out", s(&out)]);
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("row 2"));
}

const GRID: &str = r#"
seed = 42
[[scenario]]
case = ["alpha", "beta"]
n = 20
k = 2
replications = 3

[[scenario]]
case = "alpha"
outliers = true
n = 30
k = 2
replications = 2
"#;

#[test]
fn simulate_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "grid.toml", GRID);
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let res = tfclust(&["simulate", "--config", s(&config), "--out", s(out), "--raw"]);
        assert!(
            res.status.success(),
            "{}",
            String::from_utf8_lossy(&res.stderr)
        );
    }
    for name in ["raw.csv", "scenarios.csv", "summary.csv"] {
        let (x, y) = (
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
        );
        assert!(!x.is_empty());
        assert_eq!(x, y, "{name} differs");
    }
    let raw = fs::read_to_string(a.join("raw.csv")).unwrap();
    assert_eq!(raw.lines().count(), 1 + 3 + 3 + 2);
}

#[test]
fn simulate_respects_thread_setting() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "grid.toml", GRID);
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let out = dir.path().join(format!("t{threads}"));
        let res = Command::new(env!("CARGO_BIN_EXE_tfclust"))
            .args([
                "simulate",
                "--config",
                s(&config),
                "--out",
                s(&out),
                "--raw",
            ])
            .env("TFCLUST_THREADS", threads)
            .output()
            .unwrap();
        assert!(res.status.success());
        outputs.push(fs::read(out.join("raw.csv")).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn report_reaggregates_raw_output() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "grid.toml", GRID);
    let out = dir.path().join("sim");
    assert!(tfclust(&[
        "simulate",
        "--config",
        s(&config),
        "--out",
        s(&out),
        "--raw"
    ])
    .status
    .success());
    let report = dir.path().join("report.csv");
    let res = tfclust(&["report", "--raw", s(&out), "--out", s(&report)]);
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    assert_eq!(
        fs::read(&report).unwrap(),
        fs::read(out.join("summary.csv")).unwrap()
    );

    let empty = dir.path().join("empty");
    fs::create_dir(&empty).unwrap();
    assert!(
        !tfclust(&["report", "--raw", s(&empty), "--out", s(&report)])
            .status
            .success()
    );
}

#[test]
fn simulate_continues_past_failures_and_exits_nonzero() {
    let dir = TempDir::new().unwrap();
    // two data cannot be split into two clusters: the run itself rejects n <= c
    let config = write(
        dir.path(),
        "grid.toml",
        "seed = 1\n[[scenario]]\ncase = \"alpha\"\nn = [2, 20]\nk = 1\nreplications = 2\n",
    );
    let out = dir.path().join("sim");
    let res = tfclust(&[
        "simulate",
        "--config",
        s(&config),
        "--out",
        s(&out),
        "--raw",
    ]);
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("2 of 4 replications failed"));
    let raw = fs::read_to_string(out.join("raw.csv")).unwrap();
    assert_eq!(raw.lines().count(), 3);
    let failures = fs::read_to_string(out.join("failures.csv")).unwrap();
    assert_eq!(failures.lines().count(), 3);
}

#[test]
fn simulate_plots_are_svg() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "grid.toml",
        "seed = 3\n[[scenario]]\ncase = \"beta\"\noutliers = true\nn = 40\nk = 2\n",
    );
    let out = dir.path().join("sim");
    assert!(tfclust(&[
        "simulate",
        "--config",
        s(&config),
        "--out",
        s(&out),
        "--plots"
    ])
    .status
    .success());
    for name in ["memberships", "weights", "prototypes"] {
        let svg =
            fs::read_to_string(out.join("plots").join(format!("scenario000_{name}.svg"))).unwrap();
        assert!(svg.contains("<svg") && svg.contains("</svg>"), "{name}");
    }
    assert!(!out.join("raw.csv").exists());
}

#[test]
fn simulate_single_clean_scenario_table() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "grid.toml",
        "seed = 9\n[[scenario]]\ncase = \"alpha\"\nn = 50\nk = 2\nreplications = 1\n",
    );
    let out = dir.path().join("sim");
    assert!(
        tfclust(&["simulate", "--config", s(&config), "--out", s(&out)])
            .status
            .success()
    );
    let table = fs::read_to_string(out.join("scenarios.csv")).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("parameter,value,replications,pct_u050"));
    assert!(lines[1].contains(",1,"));
}
