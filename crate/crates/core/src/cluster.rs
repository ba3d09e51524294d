//! Outlier-weighted fuzzy c-means on triangular fuzzy data.
//!
//! Each datum `k` carries a weight `ω_k` (the weights sum to a fixed budget
//! `ω`) and the objective is
//!
//! ```text
//! J = Σᵢ Σₖ u_ikᵐ · ω_k^{-q} · d²(vᵢ, xₖ)
//! ```
//!
//! Data far from every prototype end up with a large `ω_k` and so pull less
//! on the prototypes. Two engines minimize `J`:
//!
//! * [`Engine::Approach1`] works on the fuzzy data directly, using the
//!   closed-form triangular distance.
//! * [`Engine::Approach2`] maps every `(c, l, r)` triple through the square
//!   root of the distance's quadratic form, runs the same iteration with the
//!   Euclidean distance and maps the prototypes back at the end.
//!
//! Both engines share the iteration: prototypes, then weights, then
//! memberships, repeated until the largest membership change drops below the
//! tolerance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::distance::{euclidean_sq, flat_distance_sq};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyVector;
use crate::transform::{inverse_transform_vector, transform_flat, QuadraticForm3};

/// Column sums of a membership matrix must match 1 this closely.
const COLUMN_SUM_TOL: f64 = 1e-9;
/// Weight floor, relative to the budget `ω`.
const WEIGHT_FLOOR_REL: f64 = 1e-12;
/// A cluster whose total prototype weight `Σₖ u_ikᵐ ω_k^{-q}` falls below
/// this is degenerate.
const DEGENERATE_WEIGHT: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Direct iteration on fuzzy data.
    #[default]
    Approach1,
    /// Iteration on transformed crisp data.
    Approach2,
}

impl Engine {
    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Approach1 => "approach1",
            Engine::Approach2 => "approach2",
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "approach1" => Ok(Engine::Approach1),
            "approach2" => Ok(Engine::Approach2),
            other => Err(Error::Config(format!(
                "unknown engine {other:?}, expected approach1 or approach2"
            ))),
        }
    }
}

/// Hyperparameters of one clustering run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Number of clusters `c`.
    pub clusters: usize,
    /// Fuzzifier `m > 1`.
    pub fuzzifier: f64,
    /// Weight exponent `q > 0`.
    pub weight_exponent: f64,
    /// Weight budget `ω > 0`.
    pub weight_budget: f64,
    /// Stop once the max-abs membership change is below this.
    pub tolerance: f64,
    pub max_iter: usize,
    /// Seed for the random initial partition.
    pub seed: u64,
    pub engine: Engine,
    /// Keep every weight at `ω/n` instead of updating it. Turns the run into
    /// plain fuzzy c-means with a constant scale factor on the objective.
    pub fixed_weights: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            clusters: 2,
            fuzzifier: 2.0,
            weight_exponent: 1.0,
            weight_budget: 200.0,
            tolerance: 1e-6,
            max_iter: 300,
            seed: 0,
            engine: Engine::Approach1,
            fixed_weights: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.clusters == 0 {
            return Err(Error::Config("clusters must be at least 1".into()));
        }
        if !(self.fuzzifier > 1.0 && self.fuzzifier.is_finite()) {
            return Err(Error::Config(format!(
                "fuzzifier m must be finite and > 1, got {}",
                self.fuzzifier
            )));
        }
        for (name, v) in [
            ("weight exponent q", self.weight_exponent),
            ("weight budget omega", self.weight_budget),
            ("tolerance epsilon", self.tolerance),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        if self.max_iter == 0 {
            return Err(Error::Config("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

/// `c × n` membership degrees; column `k` holds datum `k`'s memberships.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipMatrix {
    clusters: usize,
    n: usize,
    /// Row-major, `values[i * n + k] = u_ik`.
    values: Vec<f64>,
}

impl MembershipMatrix {
    /// Checks entries lie in `[0, 1]` and each column sums to 1.
    pub fn new(clusters: usize, n: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != clusters * n {
            return Err(Error::DimensionMismatch {
                expected: clusters * n,
                found: values.len(),
            });
        }
        let m = Self {
            clusters,
            n,
            values,
        };
        for k in 0..n {
            let mut sum = 0.0;
            for i in 0..clusters {
                let u = m.get(i, k);
                if !(0.0..=1.0).contains(&u) {
                    return Err(Error::InvalidData(format!(
                        "membership u[{i}][{k}] = {u} outside [0, 1]"
                    )));
                }
                sum += u;
            }
            if (sum - 1.0).abs() > COLUMN_SUM_TOL {
                return Err(Error::InvalidData(format!(
                    "memberships of datum {k} sum to {sum}, not 1"
                )));
            }
        }
        Ok(m)
    }

    /// Builds from one row per cluster.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidData(
                "membership rows differ in length".into(),
            ));
        }
        Self::new(rows.len(), n, rows.concat())
    }

    pub fn clusters(&self) -> usize {
        self.clusters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, cluster: usize, datum: usize) -> f64 {
        self.values[cluster * self.n + datum]
    }

    pub fn row(&self, cluster: usize) -> &[f64] {
        &self.values[cluster * self.n..(cluster + 1) * self.n]
    }

    pub fn column(&self, datum: usize) -> Vec<f64> {
        (0..self.clusters).map(|i| self.get(i, datum)).collect()
    }

    /// Cluster with the largest membership; lowest index wins ties.
    pub fn argmax(&self, datum: usize) -> usize {
        let mut best = 0;
        for i in 1..self.clusters {
            if self.get(i, datum) > self.get(best, datum) {
                best = i;
            }
        }
        best
    }

    pub fn max_abs_diff(&self, other: &MembershipMatrix) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Reorders the data (columns): column `k` of the result is column
    /// `perm[k]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        let mut values = Vec::with_capacity(self.values.len());
        for i in 0..self.clusters {
            values.extend(perm.iter().map(|&k| self.get(i, k)));
        }
        Self {
            clusters: self.clusters,
            n: self.n,
            values,
        }
    }
}

/// Per-datum outlier weights `ω_k`, summing to the budget `ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Wraps explicit weights; each must be finite and positive.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((k, w)) = values
            .iter()
            .enumerate()
            .find(|(_, w)| !(**w > 0.0 && w.is_finite()))
        {
            return Err(Error::InvalidData(format!(
                "weight {k} is {w}, must be finite and > 0"
            )));
        }
        Ok(Self(values))
    }

    /// Every datum gets `ω/n`.
    pub fn uniform(n: usize, budget: f64) -> Self {
        Self(vec![budget / n as f64; n])
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// Output of [`run`].
#[derive(Debug, Clone)]
pub struct ClusterResult {
    pub prototypes: Vec<FuzzyVector>,
    pub memberships: MembershipMatrix,
    pub weights: WeightVector,
    /// Objective after every sweep. The last entry is the objective of the
    /// returned state, after the closing prototype update.
    pub objective_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl ClusterResult {
    pub fn final_objective(&self) -> f64 {
        self.objective_trace.last().copied().unwrap_or(f64::NAN)
    }
}

/// `c × n` squared distances, row-major.
struct Distances {
    clusters: usize,
    n: usize,
    values: Vec<f64>,
}

impl Distances {
    fn compute(
        prototypes: &[Vec<f64>],
        points: &[Vec<f64>],
        metric: fn(&[f64], &[f64]) -> f64,
    ) -> Self {
        let mut values = Vec::with_capacity(prototypes.len() * points.len());
        for v in prototypes {
            // rounding can leave a tiny negative value for the fuzzy form
            values.extend(points.iter().map(|x| metric(v, x).max(0.0)));
        }
        Self {
            clusters: prototypes.len(),
            n: points.len(),
            values,
        }
    }

    #[inline]
    fn get(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.n + k]
    }
}

/// Objective `Σᵢ Σₖ u_ikᵐ ω_k^{-q} d²(vᵢ, xₖ)` of a state.
pub fn objective(
    data: &[FuzzyVector],
    prototypes: &[FuzzyVector],
    memberships: &MembershipMatrix,
    weights: &WeightVector,
    cfg: &RunConfig,
) -> Result<f64> {
    let points = flatten_checked(data)?;
    let protos = flatten_prototypes(prototypes, dim_of(data))?;
    check_shapes(protos.len(), points.len(), memberships, Some(weights))?;
    let dist = Distances::compute(&protos, &points, flat_distance_sq);
    Ok(objective_from(&dist, memberships, weights, cfg))
}

fn objective_from(
    dist: &Distances,
    memberships: &MembershipMatrix,
    weights: &WeightVector,
    cfg: &RunConfig,
) -> f64 {
    let influence: Vec<f64> = weights
        .values()
        .iter()
        .map(|w| w.powf(-cfg.weight_exponent))
        .collect();
    let mut total = 0.0;
    for i in 0..dist.clusters {
        for (k, inf) in influence.iter().enumerate() {
            total += memberships.get(i, k).powf(cfg.fuzzifier) * inf * dist.get(i, k);
        }
    }
    total
}

/// Membership update `u_ik = 1 / Σ_r (d²_ik / d²_rk)^{1/(m−1)}`.
///
/// A datum sitting exactly on one or more prototypes splits its membership
/// evenly among them.
pub fn update_memberships(
    data: &[FuzzyVector],
    prototypes: &[FuzzyVector],
    cfg: &RunConfig,
) -> Result<MembershipMatrix> {
    let points = flatten_checked(data)?;
    let protos = flatten_prototypes(prototypes, dim_of(data))?;
    let dist = Distances::compute(&protos, &points, flat_distance_sq);
    Ok(memberships_from_distances(&dist, cfg.fuzzifier))
}

fn memberships_from_distances(dist: &Distances, fuzzifier: f64) -> MembershipMatrix {
    let (c, n) = (dist.clusters, dist.n);
    let exponent = 1.0 / (fuzzifier - 1.0);
    let mut values = vec![0.0; c * n];
    let mut column = vec![0.0; c];
    for k in 0..n {
        let zeros = (0..c).filter(|&i| dist.get(i, k) <= 0.0).count();
        if zeros > 0 {
            let share = 1.0 / zeros as f64;
            for i in 0..c {
                values[i * n + k] = if dist.get(i, k) <= 0.0 { share } else { 0.0 };
            }
            continue;
        }
        // scale by the nearest distance so every ratio lies in (0, 1]
        let nearest = (0..c).map(|i| dist.get(i, k)).fold(f64::INFINITY, f64::min);
        for (i, slot) in column.iter_mut().enumerate() {
            *slot = (nearest / dist.get(i, k)).powf(exponent);
        }
        let total: f64 = column.iter().sum();
        for (i, slot) in column.iter().enumerate() {
            values[i * n + k] = slot / total;
        }
    }
    MembershipMatrix {
        clusters: c,
        n,
        values,
    }
}

/// Weight update `ω_k ∝ (Σᵢ u_ikᵐ d²_ik)^{1/(q+1)}`, scaled to sum to `ω`.
///
/// If every aggregate is zero the weights fall back to `ω/n`. Weights are
/// floored at `1e-12·ω`, the rest rescaled so the budget still holds.
pub fn update_weights(
    data: &[FuzzyVector],
    prototypes: &[FuzzyVector],
    memberships: &MembershipMatrix,
    cfg: &RunConfig,
) -> Result<WeightVector> {
    let points = flatten_checked(data)?;
    let protos = flatten_prototypes(prototypes, dim_of(data))?;
    check_shapes(protos.len(), points.len(), memberships, None)?;
    let dist = Distances::compute(&protos, &points, flat_distance_sq);
    Ok(weights_from_distances(&dist, memberships, cfg))
}

fn weights_from_distances(
    dist: &Distances,
    memberships: &MembershipMatrix,
    cfg: &RunConfig,
) -> WeightVector {
    let aggregates: Vec<f64> = (0..dist.n)
        .map(|k| {
            (0..dist.clusters)
                .map(|i| memberships.get(i, k).powf(cfg.fuzzifier) * dist.get(i, k))
                .sum()
        })
        .collect();
    weights_from_aggregates(&aggregates, cfg.weight_exponent, cfg.weight_budget)
}

/// Budget-constrained minimizer of `Σₖ A_k ω_k^{-q}`, with the floor applied.
pub fn weights_from_aggregates(aggregates: &[f64], exponent: f64, budget: f64) -> WeightVector {
    let n = aggregates.len();
    let root: Vec<f64> = aggregates
        .iter()
        .map(|a| a.max(0.0).powf(1.0 / (exponent + 1.0)))
        .collect();
    let total: f64 = root.iter().sum();
    if !(total > 0.0 && total.is_finite()) {
        return WeightVector::uniform(n, budget);
    }

    let floor = WEIGHT_FLOOR_REL * budget;
    let mut floored = vec![false; n];
    loop {
        let free_mass: f64 = root
            .iter()
            .zip(&floored)
            .filter(|(_, f)| !**f)
            .map(|(r, _)| r)
            .sum();
        let n_floored = floored.iter().filter(|f| **f).count();
        let available = budget - n_floored as f64 * floor;
        let mut changed = false;
        for (r, f) in root.iter().zip(floored.iter_mut()) {
            if !*f && r / free_mass * available < floor {
                *f = true;
                changed = true;
            }
        }
        if !changed {
            let values = root
                .iter()
                .zip(&floored)
                .map(|(r, f)| if *f { floor } else { r / free_mass * available })
                .collect();
            return WeightVector(values);
        }
    }
}

/// Prototype update on fuzzy data.
///
/// Setting the gradient of the objective with respect to `(c, l, r)` of
/// `v_ij` to zero gives three coupled linear equations whose matrix is
/// `2Q·Σₖ w_ik`, with `w_ik = u_ikᵐ ω_k^{-q}`. `Q` is positive definite, so
/// the unique solution is the `w_ik`-weighted mean of the data, taken
/// component-wise.
pub fn update_prototypes_approach1(
    data: &[FuzzyVector],
    memberships: &MembershipMatrix,
    weights: &WeightVector,
    cfg: &RunConfig,
) -> Result<Vec<FuzzyVector>> {
    let points = flatten_checked(data)?;
    check_shapes(
        memberships.clusters(),
        points.len(),
        memberships,
        Some(weights),
    )?;
    weighted_means(&points, memberships, weights, cfg, 0)?
        .into_iter()
        .map(FuzzyVector::from_flat)
        .collect()
}

/// Prototype update on transformed crisp data: the `w_ik`-weighted mean.
pub fn update_prototypes_approach2(
    transformed: &[Vec<f64>],
    memberships: &MembershipMatrix,
    weights: &WeightVector,
    cfg: &RunConfig,
) -> Result<Vec<Vec<f64>>> {
    check_uniform_len(transformed)?;
    check_shapes(
        memberships.clusters(),
        transformed.len(),
        memberships,
        Some(weights),
    )?;
    weighted_means(transformed, memberships, weights, cfg, 0)
}

fn weighted_means(
    points: &[Vec<f64>],
    memberships: &MembershipMatrix,
    weights: &WeightVector,
    cfg: &RunConfig,
    iteration: usize,
) -> Result<Vec<Vec<f64>>> {
    let len = points.first().map_or(0, Vec::len);
    let influence: Vec<f64> = weights
        .values()
        .iter()
        .map(|w| w.powf(-cfg.weight_exponent))
        .collect();
    (0..memberships.clusters())
        .map(|i| {
            let mut acc = vec![0.0; len];
            let mut total = 0.0;
            for (k, x) in points.iter().enumerate() {
                let w = memberships.get(i, k).powf(cfg.fuzzifier) * influence[k];
                total += w;
                for (a, v) in acc.iter_mut().zip(x) {
                    *a += w * v;
                }
            }
            if total.is_nan() || total <= DEGENERATE_WEIGHT {
                return Err(Error::DegenerateCluster {
                    cluster: i,
                    iteration,
                    total_weight: total,
                });
            }
            acc.iter_mut().for_each(|a| *a /= total);
            Ok(acc)
        })
        .collect()
}

/// Random initial partition and uniform weights.
///
/// Each column of `U⁰` is `c` i.i.d. uniforms on `(0, 1]` normalized to sum
/// to 1. Deterministic in `cfg.seed`.
pub fn initialize(n: usize, cfg: &RunConfig) -> (MembershipMatrix, WeightVector) {
    let c = cfg.clusters.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut values = vec![0.0; c * n];
    let mut column = vec![0.0; c];
    for k in 0..n {
        for slot in column.iter_mut() {
            *slot = 1.0 - rng.random::<f64>();
        }
        let total: f64 = column.iter().sum();
        for (i, slot) in column.iter().enumerate() {
            values[i * n + k] = slot / total;
        }
    }
    let u = MembershipMatrix {
        clusters: c,
        n,
        values,
    };
    (u, WeightVector::uniform(n, cfg.weight_budget))
}

/// Runs the alternating optimization.
///
/// Each sweep updates prototypes from the current memberships and weights,
/// then the weights, then the memberships. The run stops once the largest
/// membership change is below `cfg.tolerance` or after `cfg.max_iter`
/// sweeps. A final prototype update against the returned memberships and
/// weights closes the run.
pub fn run(
    data: &[FuzzyVector],
    cfg: &RunConfig,
    init: Option<&MembershipMatrix>,
) -> Result<ClusterResult> {
    cfg.validate()?;
    let points = flatten_checked(data)?;
    for (k, x) in data.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::InvalidData(format!(
                "datum {k} contains NaN or infinity"
            )));
        }
        x.validate()
            .map_err(|e| Error::InvalidData(format!("datum {k}: {e}")))?;
    }
    let n = points.len();
    if n <= cfg.clusters {
        return Err(Error::InvalidData(format!(
            "need more data than clusters, got n={n} with c={}",
            cfg.clusters
        )));
    }

    let (u0, w0) = match init {
        Some(u) => {
            if u.clusters() != cfg.clusters || u.n() != n {
                return Err(Error::InvalidData(format!(
                    "initial partition is {}x{}, expected {}x{n}",
                    u.clusters(),
                    u.n(),
                    cfg.clusters
                )));
            }
            (u.clone(), WeightVector::uniform(n, cfg.weight_budget))
        }
        None => initialize(n, cfg),
    };

    match cfg.engine {
        Engine::Approach1 => {
            let mut out = iterate(&points, u0, w0, cfg, flat_distance_sq)?;
            let prototypes = std::mem::take(&mut out.prototypes)
                .into_iter()
                .map(FuzzyVector::from_flat)
                .collect::<Result<_>>()?;
            Ok(out.finish(prototypes))
        }
        Engine::Approach2 => {
            let t = QuadraticForm3::shared();
            let transformed: Vec<Vec<f64>> = points.iter().map(|x| transform_flat(x, t)).collect();
            let out = iterate(&transformed, u0, w0, cfg, euclidean_sq)?;
            let prototypes = out
                .prototypes
                .iter()
                .map(|v| inverse_transform_vector(v, t))
                .collect::<Result<_>>()?;
            Ok(out.finish(prototypes))
        }
    }
}

struct IterationOutput {
    prototypes: Vec<Vec<f64>>,
    memberships: MembershipMatrix,
    weights: WeightVector,
    trace: Vec<f64>,
    iterations: usize,
    converged: bool,
}

impl IterationOutput {
    fn finish(self, prototypes: Vec<FuzzyVector>) -> ClusterResult {
        ClusterResult {
            prototypes,
            memberships: self.memberships,
            weights: self.weights,
            objective_trace: self.trace,
            iterations: self.iterations,
            converged: self.converged,
        }
    }
}

fn iterate(
    points: &[Vec<f64>],
    mut u: MembershipMatrix,
    mut w: WeightVector,
    cfg: &RunConfig,
    metric: fn(&[f64], &[f64]) -> f64,
) -> Result<IterationOutput> {
    let mut trace = Vec::new();
    let mut converged = false;
    let mut iterations = 0;

    for it in 1..=cfg.max_iter {
        iterations = it;
        let protos = weighted_means(points, &u, &w, cfg, it)?;
        let dist = Distances::compute(&protos, points, metric);
        if !cfg.fixed_weights {
            w = weights_from_distances(&dist, &u, cfg);
        }
        let next = memberships_from_distances(&dist, cfg.fuzzifier);
        trace.push(objective_from(&dist, &next, &w, cfg));
        let delta = next.max_abs_diff(&u);
        u = next;
        log::trace!("sweep {it}: objective {:e}, delta {delta:e}", trace[it - 1]);
        if delta < cfg.tolerance {
            converged = true;
            break;
        }
    }

    let prototypes = weighted_means(points, &u, &w, cfg, iterations + 1)?;
    let dist = Distances::compute(&prototypes, points, metric);
    trace.push(objective_from(&dist, &u, &w, cfg));

    Ok(IterationOutput {
        prototypes,
        memberships: u,
        weights: w,
        trace,
        iterations,
        converged,
    })
}

fn dim_of(data: &[FuzzyVector]) -> usize {
    data.first().map_or(0, FuzzyVector::dim)
}

/// Flat copies of the data, all of one dimension.
fn flatten_checked(data: &[FuzzyVector]) -> Result<Vec<Vec<f64>>> {
    if data.is_empty() {
        return Err(Error::InvalidData("dataset is empty".into()));
    }
    let dim = dim_of(data);
    data.iter()
        .map(|x| {
            if x.dim() != dim {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: x.dim(),
                })
            } else {
                Ok(x.as_flat().to_vec())
            }
        })
        .collect()
}

fn flatten_prototypes(prototypes: &[FuzzyVector], dim: usize) -> Result<Vec<Vec<f64>>> {
    prototypes
        .iter()
        .map(|v| {
            if v.dim() != dim {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                })
            } else {
                Ok(v.as_flat().to_vec())
            }
        })
        .collect()
}

fn check_uniform_len(points: &[Vec<f64>]) -> Result<()> {
    let len = points.first().map_or(0, Vec::len);
    if points.is_empty() || len == 0 {
        return Err(Error::InvalidData("dataset is empty".into()));
    }
    match points.iter().find(|x| x.len() != len) {
        Some(x) => Err(Error::DimensionMismatch {
            expected: len,
            found: x.len(),
        }),
        None => Ok(()),
    }
}

fn check_shapes(
    clusters: usize,
    n: usize,
    memberships: &MembershipMatrix,
    weights: Option<&WeightVector>,
) -> Result<()> {
    if memberships.clusters() != clusters {
        return Err(Error::DimensionMismatch {
            expected: clusters,
            found: memberships.clusters(),
        });
    }
    if memberships.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: memberships.n(),
        });
    }
    if let Some(w) = weights {
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.len(),
            });
        }
    }
    Ok(())
}
