//! Real root of a depressed cubic `x^3 + p x + q = 0`.
//!
//! Only the single-real-root case is handled: the discriminant
//! `-4 p^3 - 27 q^2` must be negative. The root comes from Cardano's formula
//! arranged so that the two cube roots never cancel, followed by one Newton
//! step.

use crate::error::{Error, Result};

/// `-4 p^3 - 27 q^2`. Negative iff the cubic has exactly one real root.
pub fn depressed_cubic_discriminant(p: f64, q: f64) -> f64 {
    -4.0 * p * p * p - 27.0 * q * q
}

/// Value of `x^3 + p x + q`.
pub fn depressed_cubic_residual(p: f64, q: f64, x: f64) -> f64 {
    x * x * x + p * x + q
}

/// The unique real root of `x^3 + p x + q` when the discriminant is negative.
///
/// `q == 0` with `p > 0` returns exactly zero.
pub fn solve_depressed_cubic(p: f64, q: f64) -> Result<f64> {
    if !(p.is_finite() && q.is_finite()) {
        return Err(Error::Domain(format!(
            "cubic coefficients must be finite, got p = {p}, q = {q}"
        )));
    }
    let disc = depressed_cubic_discriminant(p, q);
    if !(disc < 0.0) {
        return Err(Error::Domain(format!(
            "cubic has more than one real root (discriminant {disc})"
        )));
    }
    if q == 0.0 {
        // disc < 0 with q = 0 forces p > 0: x (x^2 + p) = 0
        return Ok(0.0);
    }
    // q^2/4 + p^3/27 = -disc / 108 > 0
    let half_q = 0.5 * q;
    let s = (half_q * half_q + p * p * p / 27.0).sqrt();
    // same sign as -q, so no cancellation inside the cube root
    let u = (-half_q - s.copysign(half_q)).cbrt();
    let mut x = u - p / (3.0 * u);

    let f = depressed_cubic_residual(p, q, x);
    let df = 3.0 * x * x + p;
    if df != 0.0 {
        let polished = x - f / df;
        if depressed_cubic_residual(p, q, polished).abs() <= f.abs() {
            x = polished;
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bisect(p: f64, q: f64, mut lo: f64, mut hi: f64) -> f64 {
        let f = |x: f64| x * x * x + p * x + q;
        let flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) < 0.0) == (flo < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn zero_constant_term_is_exact() {
        assert_eq!(solve_depressed_cubic(0.64, 0.0).unwrap(), 0.0);
        assert_eq!(solve_depressed_cubic(1e-8, 0.0).unwrap(), 0.0);
        assert_eq!(solve_depressed_cubic(1.0, -0.0).unwrap(), 0.0);
    }

    #[test]
    fn matches_bisection() {
        // x^3 + 0.86 x + 0.012
        let x = solve_depressed_cubic(0.86, 0.012).unwrap();
        let b = bisect(0.86, 0.012, -1.0, 0.0);
        assert!((x - b).abs() < 1e-16);
        assert!((x + 0.013_950_331_513_465_5).abs() < 1e-15);
    }

    #[test]
    fn negative_p_with_one_root() {
        // x^3 - 3x + 5: disc = 108 - 675 < 0
        let x = solve_depressed_cubic(-3.0, 5.0).unwrap();
        assert!(depressed_cubic_residual(-3.0, 5.0, x).abs() < 1e-13);
    }

    #[test]
    fn rejects_three_real_roots() {
        // x^3 - x = x (x - 1)(x + 1)
        assert!(solve_depressed_cubic(-1.0, 0.0).is_err());
        assert!(solve_depressed_cubic(0.0, 0.0).is_err());
        assert!(solve_depressed_cubic(f64::NAN, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn residual_is_small(p in 1e-6..100.0f64, q in -50.0..50.0f64) {
            let x = solve_depressed_cubic(p, q).unwrap();
            let scale = (x * x * x).abs() + (p * x).abs() + q.abs();
            prop_assert!(depressed_cubic_residual(p, q, x).abs() <= 4.0 * f64::EPSILON * scale);
        }
    }
}
