//! Interval (metric) functions.
//!
//! The H4 interval is `S = (xi1 xi2 xi3 xi4)^(1/4)` in the isotropic basis.
//! In the orthonormal-analog basis its fourth power is the quartic
//!
//! ```text
//! S^4 = x0^4 - 2 x0^2 (x1^2 + x2^2 + x3^2) + 8 x0 x1 x2 x3
//!     + x1^4 + x2^4 + x3^4 - 2 x1^2 x2^2 - 2 x1^2 x3^2 - 2 x2^2 x3^2
//! ```
//!
//! which differs from the squared Minkowski interval
//!
//! ```text
//! (S^2)^2 = x0^4 - 2 x0^2 (x1^2 + x2^2 + x3^2)
//!         + x1^4 + x2^4 + x3^4 + 2 x1^2 x2^2 + 2 x1^2 x3^2 + 2 x2^2 x3^2
//! ```
//!
//! only in the `8 x0 x1 x2 x3` term and the signs of the mixed spatial terms,
//! so the two agree to second order in `|x_a / x0|`.
//!
//! The `interval4_*` functions return the raw signed quartic. Only the
//! functions producing an [`Interval`] enforce non-negativity. The quartics
//! are evaluated in double-double arithmetic because they cancel near the
//! light cone.

use crate::algebra::{Event4, IsotropicEvent4};
use crate::compensated::Dd;
use crate::error::{Error, Result};

/// A non-negative interval together with its fourth power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub value: f64,
    pub fourth_power: f64,
}

/// Exponent parameters `(r1, r2, r3)` of the generalized metric
/// `S = prod xi_i^(e_i)`. `(0, 0, 0)` is Berwald-Moor.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ExponentWeights {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl ExponentWeights {
    pub const BERWALD_MOOR: ExponentWeights = ExponentWeights {
        r1: 0.0,
        r2: 0.0,
        r3: 0.0,
    };

    pub fn new(r1: f64, r2: f64, r3: f64) -> Result<Self> {
        if !(r1.is_finite() && r2.is_finite() && r3.is_finite()) {
            return Err(Error::Domain(format!(
                "exponent weights must be finite, got ({r1}, {r2}, {r3})"
            )));
        }
        Ok(Self { r1, r2, r3 })
    }

    /// The four exponents applied to `xi1..xi4`. They always sum to 1.
    pub fn exponents(&self) -> [f64; 4] {
        let Self { r1, r2, r3 } = *self;
        [
            (1.0 + r1 + r2 + r3) / 4.0,
            (1.0 + r1 - r2 - r3) / 4.0,
            (1.0 - r1 + r2 - r3) / 4.0,
            (1.0 - r1 - r2 + r3) / 4.0,
        ]
    }
}

/// `p^(1/4)` computed as `exp(ln(p) / 4)`, with an exact zero at `p = 0`.
/// Returns NaN for negative `p`.
pub fn fourth_root(p: f64) -> f64 {
    if p > 0.0 {
        (p.ln() / 4.0).exp()
    } else if p == 0.0 {
        0.0
    } else {
        f64::NAN
    }
}

/// Berwald-Moor interval from isotropic coordinates.
pub fn interval_h4_isotropic(xi: IsotropicEvent4) -> Result<Interval> {
    let product = xi.product();
    if !(product >= 0.0) {
        return Err(Error::NegativeQuarticForm { product });
    }
    Ok(Interval {
        value: fourth_root(product),
        fourth_power: product,
    })
}

/// Signed fourth power of the H4 interval in the orthonormal-analog basis.
pub fn interval4_h4_orthonormal(e: Event4) -> f64 {
    let Event4 { x0, x1, x2, x3 } = e;
    let (s0, s1, s2, s3) = (Dd::square(x0), Dd::square(x1), Dd::square(x2), Dd::square(x3));
    let spatial = s1.add(s2).add(s3);
    let triple = Dd::prod(x0, x1).mul(Dd::prod(x2, x3));
    [
        s0.mul(s0),
        s0.mul(spatial).scale(-2.0),
        triple.scale(8.0),
        s1.mul(s1),
        s2.mul(s2),
        s3.mul(s3),
        s1.mul(s2).scale(-2.0),
        s1.mul(s3).scale(-2.0),
        s2.mul(s3).scale(-2.0),
    ]
    .into_iter()
    .sum::<Dd>()
    .to_f64()
}

/// Generalized metric `xi1^e1 xi2^e2 xi3^e3 xi4^e4`; requires all `xi_i > 0`.
pub fn interval_general(xi: IsotropicEvent4, w: ExponentWeights) -> Result<Interval> {
    let c = xi.to_array();
    if c.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::Domain(format!(
            "generalized metric needs all isotropic coordinates > 0, got {c:?}"
        )));
    }
    let log_value: f64 = c
        .iter()
        .zip(w.exponents())
        .map(|(x, e)| e * x.ln())
        .sum();
    let value = log_value.exp();
    Ok(Interval {
        value,
        fourth_power: (4.0 * log_value).exp(),
    })
}

/// Squared Minkowski interval `x0^2 - x1^2 - x2^2 - x3^2` (signed).
pub fn interval2_minkowski(e: Event4) -> f64 {
    Dd::square(e.x0)
        .sub(Dd::square(e.x1))
        .sub(Dd::square(e.x2))
        .sub(Dd::square(e.x3))
        .to_f64()
}

/// The squared Minkowski interval raised to the second power, evaluated as
/// the expanded quartic so it can be compared term by term with
/// [`interval4_h4_orthonormal`].
pub fn interval4_minkowski(e: Event4) -> f64 {
    let Event4 { x0, x1, x2, x3 } = e;
    let (s0, s1, s2, s3) = (Dd::square(x0), Dd::square(x1), Dd::square(x2), Dd::square(x3));
    let spatial = s1.add(s2).add(s3);
    [
        s0.mul(s0),
        s0.mul(spatial).scale(-2.0),
        s1.mul(s1),
        s2.mul(s2),
        s3.mul(s3),
        s1.mul(s2).scale(2.0),
        s1.mul(s3).scale(2.0),
        s2.mul(s3).scale(2.0),
    ]
    .into_iter()
    .sum::<Dd>()
    .to_f64()
}

/// Sum of the six pairwise products `xi_i xi_j`: the squared Minkowski
/// interval written in a basis of four isotropic vectors.
///
/// This basis is *not* the one given by `A`: for `xi = A x` the sum equals
/// `6 x0^2 - 2 (x1^2 + x2^2 + x3^2)`, i.e. twice the Minkowski interval of
/// `(sqrt(3) x0, x1, x2, x3)`. There is no constant of proportionality with
/// [`interval2_minkowski`] of the same event.
pub fn interval2_minkowski_isotropiclike(xi: IsotropicEvent4) -> f64 {
    let IsotropicEvent4 { xi1, xi2, xi3, xi4 } = xi;
    xi1 * xi2 + xi1 * xi3 + xi1 * xi4 + xi2 * xi3 + xi2 * xi4 + xi3 * xi4
}

/// H3 interval `(xi1 xi2 xi3)^(1/3)`.
pub fn interval_h3(xi1: f64, xi2: f64, xi3: f64) -> Result<f64> {
    let product = xi1 * xi2 * xi3;
    if !(product >= 0.0) {
        return Err(Error::NegativeForm { product });
    }
    Ok(product.cbrt())
}

/// Pseudo-Euclidean plane: `S^2 = xi1 xi2`, equal to `x0^2 - x1^2` for
/// `xi1 = x0 + x1`, `xi2 = x0 - x1`.
pub fn interval2_plane(xi1: f64, xi2: f64) -> f64 {
    xi1 * xi2
}
