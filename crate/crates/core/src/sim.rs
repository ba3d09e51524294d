//! Synthetic two-pattern benchmarks and their evaluation.
//!
//! Every scenario produces two equal groups of inliers that differ either by
//! their centers ([`Case::Alpha`]) or by their spreads ([`Case::Beta`]),
//! optionally contaminated with outliers. A run is scored by the share of
//! inliers whose membership in their (permutation-matched) true cluster
//! exceeds 0.5, 0.75 and 0.9, by the squared error of the prototypes against
//! the population means of the generating distributions, and by how much
//! larger the outliers' weights are than the inliers'.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cluster::{self, ClusterResult, Engine, MembershipMatrix, RunConfig};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyVector;

/// Membership thresholds for the well-classified percentages.
pub const THRESHOLDS: [f64; 3] = [0.5, 0.75, 0.9];

/// Environment variable capping the number of parallel replications.
pub const THREADS_ENV: &str = "TFCLUST_THREADS";

const OUTLIER_CENTER_MEAN: f64 = -2.0;
const OUTLIER_SPREAD_MEAN: f64 = 5.0;
const OUTLIER_VARIANCE: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    /// Groups differ by their centers.
    Alpha,
    /// Groups differ by their spreads.
    Beta,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Alpha => "alpha",
            Case::Beta => "beta",
        })
    }
}

/// One cell of a simulation grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub case: Case,
    pub outliers: bool,
    /// Number of inliers, or of all data when `n_includes_outliers` is set.
    pub n: usize,
    /// Number of fuzzy features per datum.
    pub features: usize,
    /// Offset of the second group's generating interval.
    pub theta: f64,
    /// Every sampled spread is multiplied by `h`.
    pub h: f64,
    pub fuzzifier: f64,
    pub weight_exponent: f64,
    pub weight_budget: f64,
    pub replications: usize,
    pub seed: u64,
    /// Read `n` as inliers plus outliers (`n/10` of them) instead of inliers only.
    pub n_includes_outliers: bool,
    pub engine: Engine,
    pub tolerance: f64,
    pub max_iter: usize,
}

impl ScenarioSpec {
    /// Clean-data defaults: `θ = 1.5`, `h = 1`, `m = 2`, `q = 1`, `ω = 200`.
    pub fn clean(case: Case, n: usize, features: usize) -> Self {
        Self {
            case,
            outliers: false,
            n,
            features,
            theta: 1.5,
            h: 1.0,
            fuzzifier: 2.0,
            weight_exponent: 1.0,
            weight_budget: 200.0,
            replications: 1,
            seed: 0,
            n_includes_outliers: false,
            engine: Engine::Approach1,
            tolerance: 1e-6,
            max_iter: 300,
        }
    }

    /// Contaminated-data defaults: as [`ScenarioSpec::clean`] but `q = 2`.
    pub fn with_outliers(case: Case, n: usize, features: usize) -> Self {
        Self {
            outliers: true,
            weight_exponent: 2.0,
            ..Self::clean(case, n, features)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.features == 0 {
            return bad("features must be at least 1".into());
        }
        let inliers = self.inlier_count();
        if inliers < 2 || !inliers.is_multiple_of(2) {
            return bad(format!("inlier count must be even and >= 2, got {inliers}"));
        }
        if self.outliers && self.outlier_count() == 0 {
            return bad(format!("n = {} yields no outliers (n/10 = 0)", self.n));
        }
        if !(self.theta > 0.0 && self.theta.is_finite()) {
            return bad(format!("theta must be finite and > 0, got {}", self.theta));
        }
        if !(self.h > 0.0 && self.h.is_finite()) {
            return bad(format!("h must be finite and > 0, got {}", self.h));
        }
        if self.replications == 0 {
            return bad("replications must be at least 1".into());
        }
        self.run_config(0).validate()
    }

    pub fn outlier_count(&self) -> usize {
        if self.outliers {
            self.n / 10
        } else {
            0
        }
    }

    pub fn inlier_count(&self) -> usize {
        if self.outliers && self.n_includes_outliers {
            self.n - self.outlier_count()
        } else {
            self.n
        }
    }

    /// Two-cluster run configuration with the given initialization seed.
    pub fn run_config(&self, seed: u64) -> RunConfig {
        RunConfig {
            clusters: 2,
            fuzzifier: self.fuzzifier,
            weight_exponent: self.weight_exponent,
            weight_budget: self.weight_budget,
            tolerance: self.tolerance,
            max_iter: self.max_iter,
            seed,
            engine: self.engine,
            fixed_weights: false,
        }
    }

    /// Short human-readable identification.
    pub fn label(&self) -> String {
        format!(
            "case={} outliers={} n={} k={} theta={} h={} m={} q={} omega={}",
            self.case,
            self.outliers,
            self.n,
            self.features,
            self.theta,
            self.h,
            self.fuzzifier,
            self.weight_exponent,
            self.weight_budget
        )
    }
}

/// Generated data with ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub data: Vec<FuzzyVector>,
    /// Generating group of each datum. Outliers carry the group they sit
    /// nearest to by construction: 0 in case α (centers pulled below both
    /// groups), 1 in case β (spreads above both groups).
    pub labels: Vec<usize>,
    pub outlier_flags: Vec<bool>,
}

impl LabeledDataset {
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn outlier_count(&self) -> usize {
        self.outlier_flags.iter().filter(|f| **f).count()
    }
}

/// Generates the clean two-group dataset of a scenario.
pub fn generate_clean(spec: &ScenarioSpec) -> Result<LabeledDataset> {
    if spec.outliers {
        return Err(Error::Config(
            "generate_clean called on an outlier scenario".into(),
        ));
    }
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = empty_dataset(spec);
    push_inliers(spec, &mut rng, &mut out);
    Ok(out)
}

/// Generates inliers plus `⌊n/10⌋` flagged outliers.
///
/// Case α outliers have `N(−2, 2)` centers and `U[0, 1]` spreads; case β
/// outliers have `U[0, 1]` centers and `N(5, 2)` spreads, redrawn until
/// non-negative. The second parameter of `N` is the variance.
pub fn generate_outliers(spec: &ScenarioSpec) -> Result<LabeledDataset> {
    if !spec.outliers {
        return Err(Error::Config(
            "generate_outliers called on a clean scenario".into(),
        ));
    }
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = empty_dataset(spec);
    push_inliers(spec, &mut rng, &mut out);

    let sd = OUTLIER_VARIANCE.sqrt();
    let center_dist = Normal::new(OUTLIER_CENTER_MEAN, sd).expect("valid normal");
    let spread_dist = Normal::new(OUTLIER_SPREAD_MEAN, sd).expect("valid normal");
    for _ in 0..spec.outlier_count() {
        let mut flat = Vec::with_capacity(3 * spec.features);
        for _ in 0..spec.features {
            match spec.case {
                Case::Alpha => {
                    flat.push(center_dist.sample(&mut rng));
                    flat.push(spec.h * rng.random::<f64>());
                    flat.push(spec.h * rng.random::<f64>());
                }
                Case::Beta => {
                    flat.push(rng.random::<f64>());
                    flat.push(spec.h * non_negative(&spread_dist, &mut rng));
                    flat.push(spec.h * non_negative(&spread_dist, &mut rng));
                }
            }
        }
        out.data.push(FuzzyVector::from_flat(flat)?);
        out.labels.push(match spec.case {
            Case::Alpha => 0,
            Case::Beta => 1,
        });
        out.outlier_flags.push(true);
    }
    Ok(out)
}

/// Dispatches on `spec.outliers`.
pub fn generate(spec: &ScenarioSpec) -> Result<LabeledDataset> {
    if spec.outliers {
        generate_outliers(spec)
    } else {
        generate_clean(spec)
    }
}

fn empty_dataset(spec: &ScenarioSpec) -> LabeledDataset {
    let total = spec.inlier_count() + spec.outlier_count();
    LabeledDataset {
        data: Vec::with_capacity(total),
        labels: Vec::with_capacity(total),
        outlier_flags: Vec::with_capacity(total),
    }
}

fn push_inliers(spec: &ScenarioSpec, rng: &mut ChaCha8Rng, out: &mut LabeledDataset) {
    let half = spec.inlier_count() / 2;
    for group in 0..2 {
        let shift = if group == 0 { 0.0 } else { spec.theta };
        for _ in 0..half {
            let mut flat = Vec::with_capacity(3 * spec.features);
            for _ in 0..spec.features {
                let (c, l, r) = match spec.case {
                    Case::Alpha => (
                        shift + rng.random::<f64>(),
                        rng.random::<f64>(),
                        rng.random::<f64>(),
                    ),
                    Case::Beta => (
                        rng.random::<f64>(),
                        shift + rng.random::<f64>(),
                        shift + rng.random::<f64>(),
                    ),
                };
                flat.extend([c, spec.h * l, spec.h * r]);
            }
            out.data
                .push(FuzzyVector::from_flat(flat).expect("3p entries"));
            out.labels.push(group);
            out.outlier_flags.push(false);
        }
    }
}

fn non_negative(dist: &Normal<f64>, rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let v = dist.sample(rng);
        if v >= 0.0 {
            return v;
        }
    }
}

/// Population means of the generating distributions, one prototype per group.
pub fn ideal_prototypes(spec: &ScenarioSpec) -> Vec<FuzzyVector> {
    (0..2)
        .map(|group| {
            let shift = if group == 0 { 0.0 } else { spec.theta };
            let (c, s) = match spec.case {
                Case::Alpha => (0.5 + shift, 0.5 * spec.h),
                Case::Beta => (0.5, (0.5 + shift) * spec.h),
            };
            FuzzyVector::from_flat([c, s, s].repeat(spec.features)).expect("3p entries")
        })
        .collect()
}

/// Well-classified percentages at [`THRESHOLDS`] and the cluster matching.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub pct: [f64; 3],
    /// `matching[label]` is the cluster assigned to that true group.
    pub matching: Vec<usize>,
}

/// Label-to-cluster assignment maximizing the number of inliers whose
/// largest membership is in their matched cluster. Remaining ties go to the
/// larger total matched membership, then to the first permutation.
pub fn match_clusters(u: &MembershipMatrix, truth: &LabeledDataset) -> Result<Vec<usize>> {
    check_truth(u, truth)?;
    let c = u.clusters();
    let groups = truth.labels.iter().max().map_or(0, |m| m + 1);
    if groups > c {
        return Err(Error::InvalidData(format!(
            "{groups} true groups but only {c} clusters"
        )));
    }
    let inliers: Vec<usize> = (0..truth.len())
        .filter(|&k| !truth.outlier_flags[k])
        .collect();
    let argmax: Vec<usize> = (0..u.n()).map(|k| u.argmax(k)).collect();

    let mut best: Option<(usize, f64, Vec<usize>)> = None;
    for perm in (0..c).permutations(groups) {
        let hits = inliers
            .iter()
            .filter(|&&k| argmax[k] == perm[truth.labels[k]])
            .count();
        let mass: f64 = inliers
            .iter()
            .map(|&k| u.get(perm[truth.labels[k]], k))
            .sum();
        let better = match &best {
            None => true,
            Some((h, m, _)) => hits > *h || (hits == *h && mass > *m),
        };
        if better {
            best = Some((hits, mass, perm));
        }
    }
    Ok(best.map(|b| b.2).unwrap_or_default())
}

/// Percentage of inliers whose membership in their matched cluster is
/// strictly above each threshold. Outliers are not scored.
pub fn evaluate_classification(
    result: &ClusterResult,
    truth: &LabeledDataset,
) -> Result<ClassificationReport> {
    let u = &result.memberships;
    let matching = match_clusters(u, truth)?;
    let inliers: Vec<usize> = (0..truth.len())
        .filter(|&k| !truth.outlier_flags[k])
        .collect();
    if inliers.is_empty() {
        return Err(Error::InvalidData("no inliers to evaluate".into()));
    }
    let pct = THRESHOLDS.map(|t| {
        let hits = inliers
            .iter()
            .filter(|&&k| u.get(matching[truth.labels[k]], k) > t)
            .count();
        100.0 * hits as f64 / inliers.len() as f64
    });
    Ok(ClassificationReport { pct, matching })
}

/// Prototype squared errors against [`ideal_prototypes`], averaged over
/// clusters and features, separately for centers, left and right spreads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MseReport {
    pub centers: f64,
    pub left: f64,
    pub right: f64,
}

pub fn evaluate_mse(
    result: &ClusterResult,
    spec: &ScenarioSpec,
    matching: &[usize],
) -> Result<MseReport> {
    let ideal = ideal_prototypes(spec);
    if matching.len() != ideal.len() {
        return Err(Error::DimensionMismatch {
            expected: ideal.len(),
            found: matching.len(),
        });
    }
    let mut sums = [0.0; 3];
    let mut count = 0usize;
    for (group, target) in ideal.iter().enumerate() {
        let proto = result.prototypes.get(matching[group]).ok_or_else(|| {
            Error::InvalidData(format!("no prototype for cluster {}", matching[group]))
        })?;
        if proto.dim() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: proto.dim(),
            });
        }
        for (p, t) in proto.components().zip(target.components()) {
            sums[0] += (p.center - t.center).powi(2);
            sums[1] += (p.left - t.left).powi(2);
            sums[2] += (p.right - t.right).powi(2);
            count += 1;
        }
    }
    let n = count as f64;
    Ok(MseReport {
        centers: sums[0] / n,
        left: sums[1] / n,
        right: sums[2] / n,
    })
}

/// Median outlier weight over median inlier weight.
pub fn outlier_stats(result: &ClusterResult, truth: &LabeledDataset) -> Result<f64> {
    let w = result.weights.values();
    if w.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            found: w.len(),
        });
    }
    let pick = |outlier: bool| -> Vec<f64> {
        w.iter()
            .zip(&truth.outlier_flags)
            .filter(|(_, flag)| **flag == outlier)
            .map(|(v, _)| *v)
            .collect()
    };
    let (out, inl) = (pick(true), pick(false));
    if out.is_empty() {
        return Err(Error::InvalidData("dataset has no outliers".into()));
    }
    if inl.is_empty() {
        return Err(Error::InvalidData("dataset has no inliers".into()));
    }
    Ok(median(out) / median(inl))
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn check_truth(u: &MembershipMatrix, truth: &LabeledDataset) -> Result<()> {
    if truth.labels.len() != truth.data.len() || truth.outlier_flags.len() != truth.data.len() {
        return Err(Error::InvalidData(
            "ground truth columns differ in length".into(),
        ));
    }
    if u.n() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            found: u.n(),
        });
    }
    Ok(())
}

/// All metrics for one clustering run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub pct_u050: f64,
    pub pct_u075: f64,
    pub pct_u090: f64,
    pub mse_centers: f64,
    pub mse_left: f64,
    pub mse_right: f64,
    /// Present only when the dataset has outliers.
    pub outlier_weight_ratio: Option<f64>,
}

impl EvalReport {
    pub fn pct(&self) -> [f64; 3] {
        [self.pct_u050, self.pct_u075, self.pct_u090]
    }
}

pub fn evaluate(
    result: &ClusterResult,
    truth: &LabeledDataset,
    spec: &ScenarioSpec,
) -> Result<EvalReport> {
    let class = evaluate_classification(result, truth)?;
    let mse = evaluate_mse(result, spec, &class.matching)?;
    let ratio = if truth.outlier_count() > 0 {
        Some(outlier_stats(result, truth)?)
    } else {
        None
    };
    Ok(EvalReport {
        pct_u050: class.pct[0],
        pct_u075: class.pct[1],
        pct_u090: class.pct[2],
        mse_centers: mse.centers,
        mse_left: mse.left,
        mse_right: mse.right,
        outlier_weight_ratio: ratio,
    })
}

/// SplitMix64 finalizer over `master + (index + 1)·γ`: independent,
/// reproducible child seeds.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One fully evaluated replication.
#[derive(Debug, Clone)]
pub struct Replication {
    pub spec: ScenarioSpec,
    pub dataset: LabeledDataset,
    pub result: ClusterResult,
    pub report: EvalReport,
}

/// Runs replication `index` of a scenario.
///
/// The data seed is `derive_seed(spec.seed, index)`; the initial partition
/// uses a second seed derived from that one.
pub fn run_replication(spec: &ScenarioSpec, index: usize) -> Result<Replication> {
    let data_seed = derive_seed(spec.seed, index as u64);
    let rep_spec = ScenarioSpec {
        seed: data_seed,
        ..spec.clone()
    };
    let dataset = generate(&rep_spec)?;
    let cfg = spec.run_config(derive_seed(data_seed, u64::MAX));
    let result = cluster::run(&dataset.data, &cfg, None)?;
    let report = evaluate(&result, &dataset, spec)?;
    Ok(Replication {
        spec: rep_spec,
        dataset,
        result,
        report,
    })
}

/// One raw output row: scenario parameters, replication identity, metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicationRecord {
    pub scenario: usize,
    pub case: Case,
    pub outliers: bool,
    pub n: usize,
    pub k: usize,
    pub theta: f64,
    pub h: f64,
    pub m: f64,
    pub q: f64,
    pub omega: f64,
    pub engine: Engine,
    pub replication: usize,
    pub seed: u64,
    pub iterations: usize,
    pub converged: bool,
    pub pct_u050: f64,
    pub pct_u075: f64,
    pub pct_u090: f64,
    pub mse_centers: f64,
    pub mse_left: f64,
    pub mse_right: f64,
    pub outlier_weight_ratio: Option<f64>,
}

impl ReplicationRecord {
    fn new(scenario: usize, spec: &ScenarioSpec, index: usize, rep: &Replication) -> Self {
        let r = &rep.report;
        Self {
            scenario,
            case: spec.case,
            outliers: spec.outliers,
            n: spec.n,
            k: spec.features,
            theta: spec.theta,
            h: spec.h,
            m: spec.fuzzifier,
            q: spec.weight_exponent,
            omega: spec.weight_budget,
            engine: spec.engine,
            replication: index,
            seed: rep.spec.seed,
            iterations: rep.result.iterations,
            converged: rep.result.converged,
            pct_u050: r.pct_u050,
            pct_u075: r.pct_u075,
            pct_u090: r.pct_u090,
            mse_centers: r.mse_centers,
            mse_left: r.mse_left,
            mse_right: r.mse_right,
            outlier_weight_ratio: r.outlier_weight_ratio,
        }
    }

    pub fn report(&self) -> EvalReport {
        EvalReport {
            pct_u050: self.pct_u050,
            pct_u075: self.pct_u075,
            pct_u090: self.pct_u090,
            mse_centers: self.mse_centers,
            mse_left: self.mse_left,
            mse_right: self.mse_right,
            outlier_weight_ratio: self.outlier_weight_ratio,
        }
    }
}

/// A scenario replication that failed.
#[derive(Debug)]
pub struct ScenarioFailure {
    pub scenario: usize,
    pub replication: usize,
    pub error: Error,
}

/// Raw records in `(scenario, replication)` order, plus failures.
#[derive(Debug, Default)]
pub struct GridOutput {
    pub records: Vec<ReplicationRecord>,
    pub failures: Vec<ScenarioFailure>,
}

/// Runs every replication of every scenario.
///
/// Replications run in parallel on a pool sized by [`THREADS_ENV`] (all
/// cores when unset). Output order does not depend on scheduling. A failing
/// replication is recorded and the grid carries on.
pub fn run_scenario_grid(specs: &[ScenarioSpec]) -> GridOutput {
    let jobs: Vec<(usize, usize)> = specs
        .iter()
        .enumerate()
        .flat_map(|(s, spec)| (0..spec.replications).map(move |r| (s, r)))
        .collect();

    let work = || {
        jobs.par_iter()
            .map(|&(s, r)| {
                let spec = &specs[s];
                spec.validate()
                    .and_then(|_| run_replication(spec, r))
                    .map(|rep| ReplicationRecord::new(s, spec, r, &rep))
                    .map_err(|e| ScenarioFailure {
                        scenario: s,
                        replication: r,
                        error: Error::Scenario {
                            scenario: format!("#{s} ({}) replication {r}", spec.label()),
                            source: Box::new(e),
                        },
                    })
            })
            .collect::<Vec<_>>()
    };
    let outcomes = match thread_pool() {
        Some(pool) => pool.install(work),
        None => work(),
    };

    let mut out = GridOutput::default();
    for o in outcomes {
        match o {
            Ok(rec) => out.records.push(rec),
            Err(f) => out.failures.push(f),
        }
    }
    out
}

fn thread_pool() -> Option<rayon::ThreadPool> {
    let threads = std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .ok()
}

/// Mean metrics over a set of replication records.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub parameter: String,
    pub value: String,
    pub replications: usize,
    pub pct_u050: f64,
    pub pct_u075: f64,
    pub pct_u090: f64,
    pub mse_centers: f64,
    pub mse_left: f64,
    pub mse_right: f64,
    pub outlier_weight_ratio: Option<f64>,
}

fn summarize<'a>(
    parameter: &str,
    value: String,
    records: impl IntoIterator<Item = &'a ReplicationRecord>,
) -> SummaryRow {
    let mut sums = [0.0; 6];
    let (mut count, mut ratio_sum, mut ratio_count) = (0usize, 0.0, 0usize);
    for r in records {
        for (s, v) in sums.iter_mut().zip([
            r.pct_u050,
            r.pct_u075,
            r.pct_u090,
            r.mse_centers,
            r.mse_left,
            r.mse_right,
        ]) {
            *s += v;
        }
        if let Some(x) = r.outlier_weight_ratio {
            ratio_sum += x;
            ratio_count += 1;
        }
        count += 1;
    }
    let mean = |s: f64| s / count as f64;
    SummaryRow {
        parameter: parameter.to_string(),
        value,
        replications: count,
        pct_u050: mean(sums[0]),
        pct_u075: mean(sums[1]),
        pct_u090: mean(sums[2]),
        mse_centers: mean(sums[3]),
        mse_left: mean(sums[4]),
        mse_right: mean(sums[5]),
        outlier_weight_ratio: (ratio_count > 0).then(|| ratio_sum / ratio_count as f64),
    }
}

/// One row per scenario, averaging its replications.
pub fn scenario_table(records: &[ReplicationRecord]) -> Vec<SummaryRow> {
    let mut by_scenario: BTreeMap<usize, Vec<&ReplicationRecord>> = BTreeMap::new();
    for r in records {
        by_scenario.entry(r.scenario).or_default().push(r);
    }
    by_scenario
        .into_iter()
        .map(|(s, rs)| summarize("scenario", s.to_string(), rs))
        .collect()
}

/// Marginal table: for each parameter and each of its values, the mean over
/// every record with that value. The last row averages everything.
pub fn marginal_table(records: &[ReplicationRecord]) -> Vec<SummaryRow> {
    type Key = fn(&ReplicationRecord) -> String;
    let params: [(&str, Key); 7] = [
        ("n", |r| r.n.to_string()),
        ("k", |r| r.k.to_string()),
        ("case", |r| r.case.to_string()),
        ("m", |r| r.m.to_string()),
        ("h", |r| r.h.to_string()),
        ("theta", |r| r.theta.to_string()),
        ("outliers", |r| r.outliers.to_string()),
    ];
    let mut rows = Vec::new();
    for (name, key) in params {
        // first-appearance order keeps numeric parameters in grid order
        let values: Vec<String> = records.iter().map(key).unique().collect();
        for v in values {
            rows.push(summarize(
                name,
                v.clone(),
                records.iter().filter(|r| key(r) == v),
            ));
        }
    }
    if !records.is_empty() {
        rows.push(summarize("all", "all".into(), records));
    }
    rows
}
