//! Squared distances between intervals and triangular fuzzy numbers.
//!
//! The main kernel is [`tri_wasserstein_sq`]: the α-cut integral of the
//! squared L2-Wasserstein distance between uniform distributions on the
//! cuts, which has a closed form for triangular numbers. The other
//! distances are kept as comparison baselines.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyVector, Interval, TriangularFuzzyNumber};

/// `(m₁ − m₂)² + (δ₁ − δ₂)²/3`: the squared L2-Wasserstein distance between
/// uniform distributions on the two intervals.
pub fn interval_wasserstein_sq(i1: &Interval, i2: &Interval) -> f64 {
    let dm = i1.midpoint() - i2.midpoint();
    let dr = i1.radius() - i2.radius();
    dm * dm + dr * dr / 3.0
}

/// Tran-Duckstein interval distance, `(m₁ − m₂)² + (δ₁² + δ₂²)/3`.
///
/// Not reflexive: an interval sits at `2δ²/3` from itself.
pub fn tran_duckstein_sq(i1: &Interval, i2: &Interval) -> f64 {
    let dm = i1.midpoint() - i2.midpoint();
    let (r1, r2) = (i1.radius(), i2.radius());
    dm * dm + (r1 * r1 + r2 * r2) / 3.0
}

/// Yang-Ko squared distance with the triangular shape parameters
/// `λ = ρ = ∫₀¹ (1 − t) dt = 1/2`.
pub fn yang_ko_sq(a1: &TriangularFuzzyNumber, a2: &TriangularFuzzyNumber) -> f64 {
    const SHAPE: f64 = 0.5;
    let dc = a1.center - a2.center;
    let dl = (a1.center - SHAPE * a1.left) - (a2.center - SHAPE * a2.left);
    let dr = (a1.center + SHAPE * a1.right) - (a2.center + SHAPE * a2.right);
    dc * dc + dl * dl + dr * dr
}

/// Closed-form squared Wasserstein-based distance between triangular numbers.
///
/// With `c = c₁−c₂`, `l = l₁−l₂`, `r = r₁−r₂`:
/// `c² + (l² + r² − l r)/9 − c (l − r)/2`.
pub fn tri_wasserstein_sq(a1: &TriangularFuzzyNumber, a2: &TriangularFuzzyNumber) -> f64 {
    diff_wasserstein_sq(
        a1.center - a2.center,
        a1.left - a2.left,
        a1.right - a2.right,
    )
}

#[inline]
pub(crate) fn diff_wasserstein_sq(c: f64, l: f64, r: f64) -> f64 {
    c * c + (l * l + r * r - l * r) / 9.0 - 0.5 * c * (l - r)
}

/// Composite-trapezoid integration of [`interval_wasserstein_sq`] over the
/// α-cuts of both numbers on a uniform grid of `steps` sub-intervals.
///
/// The integrand is quadratic in α so the error shrinks as `steps⁻²`.
pub fn tri_wasserstein_sq_oracle(
    a1: &TriangularFuzzyNumber,
    a2: &TriangularFuzzyNumber,
    steps: usize,
) -> Result<f64> {
    if steps < 2 {
        return Err(Error::Domain(format!(
            "oracle needs at least 2 steps, got {steps}"
        )));
    }
    let h = 1.0 / steps as f64;
    let mut acc = 0.0;
    for k in 0..=steps {
        let alpha = if k == steps { 1.0 } else { k as f64 * h };
        let f = interval_wasserstein_sq(&a1.alpha_cut(alpha)?, &a2.alpha_cut(alpha)?);
        acc += if k == 0 || k == steps { 0.5 * f } else { f };
    }
    Ok(acc * h)
}

/// Sum of component-wise [`tri_wasserstein_sq`].
pub fn vector_distance_sq(x: &FuzzyVector, y: &FuzzyVector) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(flat_distance_sq(x.as_flat(), y.as_flat()))
}

/// [`vector_distance_sq`] on flat `3p` slices of equal length.
pub(crate) fn flat_distance_sq(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.chunks_exact(3)
        .zip(y.chunks_exact(3))
        .map(|(a, b)| diff_wasserstein_sq(a[0] - b[0], a[1] - b[1], a[2] - b[2]))
        .sum()
}

/// Squared Euclidean distance.
pub(crate) fn euclidean_sq(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tfn(c: f64, l: f64, r: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(c, l, r).unwrap()
    }

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    /// Midpoint rule on ∫₀¹ (I₁(t) − I₂(t))² dt.
    fn integrate_parameterized(i1: &Interval, i2: &Interval, n: usize) -> f64 {
        let h = 1.0 / n as f64;
        (0..n)
            .map(|k| {
                let t = (k as f64 + 0.5) * h;
                let d = i1.at(t) - i2.at(t);
                d * d
            })
            .sum::<f64>()
            * h
    }

    /// Midpoint rule on the double integral defining the Tran-Duckstein distance.
    fn integrate_tran_duckstein(i1: &Interval, i2: &Interval, n: usize) -> f64 {
        let h = 1.0 / n as f64;
        let (a, b, u, v) = (i1.lower(), i1.upper(), i2.lower(), i2.upper());
        let mut acc = 0.0;
        for i in 0..n {
            let x = -0.5 + (i as f64 + 0.5) * h;
            for j in 0..n {
                let y = -0.5 + (j as f64 + 0.5) * h;
                let d = (0.5 * (a + b) + x * (b - a)) - (0.5 * (u + v) + y * (v - u));
                acc += d * d;
            }
        }
        acc * h * h
    }

    #[test]
    fn interval_wasserstein_examples() {
        assert_eq!(interval_wasserstein_sq(&iv(0.0, 2.0), &iv(0.0, 2.0)), 0.0);
        let p = interval_wasserstein_sq(&iv(3.0, 3.0), &iv(-1.5, -1.5));
        assert_eq!(p, 4.5 * 4.5);
        // quadrature oracle gives 13/3
        let oracle = integrate_parameterized(&iv(0.0, 2.0), &iv(1.0, 5.0), 200_000);
        assert!((oracle - 13.0 / 3.0).abs() < 1e-9);
        let got = interval_wasserstein_sq(&iv(0.0, 2.0), &iv(1.0, 5.0));
        assert!((got - 13.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn tran_duckstein_examples() {
        let oracle = integrate_tran_duckstein(&iv(0.0, 2.0), &iv(1.0, 5.0), 1000);
        assert!((oracle - 17.0 / 3.0).abs() < 1e-5);
        let got = tran_duckstein_sq(&iv(0.0, 2.0), &iv(1.0, 5.0));
        assert!((got - 17.0 / 3.0).abs() < 1e-14);
        assert_eq!(tran_duckstein_sq(&iv(2.0, 2.0), &iv(-1.0, -1.0)), 9.0);
        let same = tran_duckstein_sq(&iv(0.0, 2.0), &iv(0.0, 2.0));
        assert!((same - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn yang_ko_examples() {
        let a = tfn(0.3, 1.2, 0.7);
        assert_eq!(yang_ko_sq(&a, &a), 0.0);
        assert_eq!(yang_ko_sq(&tfn(0.0, 0.0, 0.0), &tfn(1.0, 0.0, 0.0)), 3.0);

        // shape parameter: ∫₀¹ L⁻¹(t) dt with L⁻¹(t) = 1 − t
        let n = 100_000;
        let h = 1.0 / n as f64;
        let lambda: f64 = (0..n).map(|k| 1.0 - (k as f64 + 0.5) * h).sum::<f64>() * h;
        assert!((lambda - 0.5).abs() < 1e-12);
        // only the left spread differs: the middle term is (λ·Δl)²
        let d = yang_ko_sq(&tfn(0.0, 2.0, 0.0), &tfn(0.0, 0.0, 0.0));
        assert!((d - (lambda * 2.0).powi(2)).abs() < 1e-12);
    }

    #[test]
    fn tri_wasserstein_examples() {
        let a = tfn(-3.0, 0.4, 2.0);
        assert_eq!(tri_wasserstein_sq(&a, &a), 0.0);
        assert_eq!(
            tri_wasserstein_sq(&tfn(1.0, 0.0, 0.0), &tfn(4.0, 0.0, 0.0)),
            9.0
        );
        let d = tri_wasserstein_sq(&tfn(0.0, 1.0, 1.0), &tfn(1.0, 2.0, 3.0));
        assert!((d - 11.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn oracle_examples() {
        let a = tfn(0.0, 1.0, 1.0);
        assert_eq!(tri_wasserstein_sq_oracle(&a, &a, 7).unwrap(), 0.0);
        let v = tri_wasserstein_sq_oracle(&a, &tfn(1.0, 2.0, 3.0), 10_000).unwrap();
        assert!((v - 11.0 / 6.0).abs() / (11.0 / 6.0) < 1e-6);
        let v = tri_wasserstein_sq_oracle(&a, &tfn(1.0, 2.0, 2.0), 10_000).unwrap();
        assert!((v - 10.0 / 9.0).abs() / (10.0 / 9.0) < 1e-6);
        assert!(tri_wasserstein_sq_oracle(&a, &a, 1).is_err());
    }

    #[test]
    fn oracle_error_shrinks_quadratically() {
        let (a, b) = (tfn(0.0, 1.0, 1.0), tfn(1.0, 2.0, 3.0));
        let exact = tri_wasserstein_sq(&a, &b);
        let e1 = (tri_wasserstein_sq_oracle(&a, &b, 100).unwrap() - exact).abs();
        let e2 = (tri_wasserstein_sq_oracle(&a, &b, 200).unwrap() - exact).abs();
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
    }

    #[test]
    fn vector_distance_examples() {
        let x = FuzzyVector::new(vec![tfn(0.0, 1.0, 1.0), tfn(0.0, 1.0, 1.0)]).unwrap();
        let y = FuzzyVector::new(vec![tfn(1.0, 2.0, 3.0), tfn(1.0, 2.0, 2.0)]).unwrap();
        assert_eq!(vector_distance_sq(&x, &x).unwrap(), 0.0);
        let d = vector_distance_sq(&x, &y).unwrap();
        assert!((d - 53.0 / 18.0).abs() < 1e-14);

        let z = FuzzyVector::new(vec![tfn(1.0, 2.0, 3.0), tfn(0.0, 1.0, 1.0)]).unwrap();
        let single = tri_wasserstein_sq(&tfn(0.0, 1.0, 1.0), &tfn(1.0, 2.0, 3.0));
        assert_eq!(vector_distance_sq(&x, &z).unwrap(), single);

        let short = FuzzyVector::from(tfn(0.0, 0.0, 0.0));
        assert!(matches!(
            vector_distance_sq(&x, &short),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }
}
