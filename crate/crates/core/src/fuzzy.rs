//! Intervals, triangular fuzzy numbers and vectors of them.

use crate::error::{Error, Result};

/// A closed real interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: f64,
    upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::Domain(format!(
                "interval bounds must be finite, got [{lower}, {upper}]"
            )));
        }
        if lower > upper {
            return Err(Error::Domain(format!(
                "interval lower bound {lower} exceeds upper bound {upper}"
            )));
        }
        Ok(Self { lower, upper })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn radius(&self) -> f64 {
        0.5 * (self.upper - self.lower)
    }

    /// Linear parameterization `t ↦ lower + t (upper − lower)` for `t ∈ [0, 1]`.
    ///
    /// This is also the quantile function of the uniform distribution on the
    /// interval.
    pub fn at(&self, t: f64) -> f64 {
        self.lower + t * (self.upper - self.lower)
    }
}

/// A triangular fuzzy number `(center, left spread, right spread)`.
///
/// Membership is 1 at `center` and falls linearly to 0 at `center − left`
/// and `center + right`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzyNumber {
    pub center: f64,
    pub left: f64,
    pub right: f64,
}

impl TriangularFuzzyNumber {
    /// Checked constructor: all parts finite, spreads non-negative.
    pub fn new(center: f64, left: f64, right: f64) -> Result<Self> {
        let tfn = Self {
            center,
            left,
            right,
        };
        tfn.validate()?;
        Ok(tfn)
    }

    /// Builds a number without validating spreads.
    ///
    /// Prototypes and inverse-transformed vectors go through here; rounding
    /// can leave a spread at `-1e-17` when every input spread was zero.
    pub const fn from_raw(center: f64, left: f64, right: f64) -> Self {
        Self {
            center,
            left,
            right,
        }
    }

    /// A crisp number: both spreads zero.
    pub const fn crisp(center: f64) -> Self {
        Self::from_raw(center, 0.0, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.center.is_finite() && self.left.is_finite() && self.right.is_finite()) {
            return Err(Error::Domain(format!("non-finite fuzzy number {self:?}")));
        }
        if self.left < 0.0 || self.right < 0.0 {
            return Err(Error::Domain(format!(
                "spreads must be non-negative, got left={} right={}",
                self.left, self.right
            )));
        }
        Ok(())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.center, self.left, self.right]
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        Self::from_raw(v[0], v[1], v[2])
    }

    /// The α-cut `[c − (1−α) l, c + (1−α) r]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        alpha_cut(self, alpha)
    }
}

/// α-cut of a triangular fuzzy number. Fails when `alpha ∉ [0, 1]`.
pub fn alpha_cut(a: &TriangularFuzzyNumber, alpha: f64) -> Result<Interval> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let s = 1.0 - alpha;
    Interval::new(a.center - s * a.left, a.center + s * a.right)
}

/// A `p`-dimensional vector of triangular fuzzy numbers.
///
/// Stored flat as `[c₁, l₁, r₁, …, c_p, l_p, r_p]`, which is also the
/// `3p`-dimensional real view used by the clustering engines.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyVector {
    flat: Vec<f64>,
}

impl FuzzyVector {
    pub fn new(components: Vec<TriangularFuzzyNumber>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidData("fuzzy vector must have p >= 1".into()));
        }
        let flat = components.iter().flat_map(|t| t.as_array()).collect();
        Ok(Self { flat })
    }

    /// Un-flattens a `3p` real vector. Spreads are not checked.
    pub fn from_flat(flat: Vec<f64>) -> Result<Self> {
        if flat.is_empty() || !flat.len().is_multiple_of(3) {
            return Err(Error::InvalidData(format!(
                "flat length {} is not a positive multiple of 3",
                flat.len()
            )));
        }
        Ok(Self { flat })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            flat: vec![0.0; 3 * dim.max(1)],
        }
    }

    /// Number of fuzzy components `p`.
    pub fn dim(&self) -> usize {
        self.flat.len() / 3
    }

    pub fn component(&self, j: usize) -> TriangularFuzzyNumber {
        let b = &self.flat[3 * j..3 * j + 3];
        TriangularFuzzyNumber::from_raw(b[0], b[1], b[2])
    }

    pub fn components(&self) -> impl ExactSizeIterator<Item = TriangularFuzzyNumber> + '_ {
        self.flat
            .chunks_exact(3)
            .map(|b| TriangularFuzzyNumber::from_raw(b[0], b[1], b[2]))
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.flat
    }

    pub fn into_flat(self) -> Vec<f64> {
        self.flat
    }

    pub fn is_finite(&self) -> bool {
        self.flat.iter().all(|v| v.is_finite())
    }

    pub fn min_spread(&self) -> f64 {
        self.flat
            .chunks_exact(3)
            .flat_map(|b| [b[1], b[2]])
            .fold(f64::INFINITY, f64::min)
    }

    /// Every component finite with non-negative spreads.
    pub fn validate(&self) -> Result<()> {
        self.components().try_for_each(|t| t.validate())
    }
}

impl From<TriangularFuzzyNumber> for FuzzyVector {
    fn from(t: TriangularFuzzyNumber) -> Self {
        Self {
            flat: t.as_array().to_vec(),
        }
    }
}
