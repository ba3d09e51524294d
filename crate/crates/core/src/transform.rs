//! Euclidean reduction of the triangular distance.
//!
//! For a difference `z = (c, l, r)` the triangular distance is `zᵀ Q z` with a
//! fixed positive-definite `Q`. Its symmetric square root `T` maps each
//! `(c, l, r)` triple to a crisp 3-vector where the distance becomes the
//! plain Euclidean one, so crisp clustering code applies unchanged.

#![allow(clippy::needless_range_loop)]

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyVector;

pub type Mat3 = [[f64; 3]; 3];

/// The quadratic form of the triangular distance.
pub const Q: Mat3 = [
    [1.0, -0.25, 0.25],
    [-0.25, 1.0 / 9.0, -1.0 / 18.0],
    [0.25, -1.0 / 18.0, 1.0 / 9.0],
];

/// `Q`, its spectrum, its symmetric square root `T` and `T⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm3 {
    pub q: Mat3,
    /// Sorted descending.
    pub eigenvalues: [f64; 3],
    /// Columns are orthonormal eigenvectors, in the order of `eigenvalues`.
    pub eigenvectors: Mat3,
    pub sqrt: Mat3,
    pub inv_sqrt: Mat3,
}

impl QuadraticForm3 {
    /// Process-wide instance, built on first use.
    pub fn shared() -> &'static QuadraticForm3 {
        static SHARED: OnceLock<QuadraticForm3> = OnceLock::new();
        SHARED.get_or_init(|| build_transform().expect("Q is symmetric positive definite"))
    }

    /// `T x` for one `(c, l, r)` triple.
    pub fn apply(&self, x: [f64; 3]) -> [f64; 3] {
        mat_vec(&self.sqrt, x)
    }

    /// `T⁻¹ y` for one transformed triple.
    pub fn apply_inverse(&self, y: [f64; 3]) -> [f64; 3] {
        mat_vec(&self.inv_sqrt, y)
    }
}

/// Builds `Q`, its eigen-decomposition `Q = U Λ Uᵀ`, `T = U Λ^{1/2} Uᵀ` and
/// `T⁻¹ = U Λ^{-1/2} Uᵀ`.
pub fn build_transform() -> Result<QuadraticForm3> {
    let (values, vectors) = symmetric_eigen(&Q)?;
    if values.iter().any(|&v| v <= 0.0) {
        return Err(Error::EigenSolve);
    }
    let sqrt = spectral_function(&values, &vectors, f64::sqrt);
    let inv_sqrt = spectral_function(&values, &vectors, |v| 1.0 / v.sqrt());
    Ok(QuadraticForm3 {
        q: Q,
        eigenvalues: values,
        eigenvectors: vectors,
        sqrt,
        inv_sqrt,
    })
}

/// Applies `T` to every `(c, l, r)` triple of `x`.
pub fn transform_vector(x: &FuzzyVector, t: &QuadraticForm3) -> Vec<f64> {
    transform_flat(x.as_flat(), t)
}

pub(crate) fn transform_flat(flat: &[f64], t: &QuadraticForm3) -> Vec<f64> {
    flat.chunks_exact(3)
        .flat_map(|b| t.apply([b[0], b[1], b[2]]))
        .collect()
}

/// Applies `T⁻¹` blockwise. Fails unless the length is a positive multiple of 3.
pub fn inverse_transform_vector(xhat: &[f64], t: &QuadraticForm3) -> Result<FuzzyVector> {
    if xhat.is_empty() || !xhat.len().is_multiple_of(3) {
        return Err(Error::InvalidData(format!(
            "transformed vector length {} is not a positive multiple of 3",
            xhat.len()
        )));
    }
    let flat = xhat
        .chunks_exact(3)
        .flat_map(|b| t.apply_inverse([b[0], b[1], b[2]]))
        .collect();
    FuzzyVector::from_flat(flat)
}

fn mat_vec(m: &Mat3, x: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
        m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
        m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
    ]
}

/// `U f(Λ) Uᵀ`, symmetrized.
fn spectral_function(values: &[f64; 3], vectors: &Mat3, f: impl Fn(f64) -> f64) -> Mat3 {
    let fv = values.map(f);
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in i..3 {
            let s: f64 = (0..3).map(|k| vectors[i][k] * fv[k] * vectors[j][k]).sum();
            out[i][j] = s;
            out[j][i] = s;
        }
    }
    out
}

/// Cyclic Jacobi eigen-solver for a symmetric 3×3 matrix.
///
/// Returns eigenvalues sorted descending and the matching eigenvectors as
/// columns.
pub fn symmetric_eigen(m: &Mat3) -> Result<([f64; 3], Mat3)> {
    let mut a = *m;
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let scale: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    if !scale.is_finite() {
        return Err(Error::EigenSolve);
    }

    let mut converged = false;
    for _sweep in 0..64 {
        if a[0][1] == 0.0 && a[0][2] == 0.0 && a[1][2] == 0.0 {
            converged = true;
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if a[p][q].abs() <= 1e-20 * scale {
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            // A ← Jᵀ A J with the rotation acting on rows/cols p, q
            for k in 0..3 {
                let akp = a[k][p];
                let akq = a[k][q];
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let apk = a[p][k];
                let aqk = a[q][k];
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
            for row in v.iter_mut() {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    if !converged {
        return Err(Error::EigenSolve);
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.map(|i| a[i][i]);
    let mut vectors = [[0.0; 3]; 3];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..3 {
            vectors[row][col] = v[row][src];
        }
    }
    Ok((values, vectors))
}
