//! The symmetry group `G1(H4)` and frame changes.
//!
//! In the isotropic basis every interval-preserving linear map of this group
//! is diagonal: `xi_k -> exp(eps_k) xi_k` with `eps_0 + eps_1 + eps_2 + eps_3 = 0`.
//! The group is Abelian with three parameters. A frame moving with velocity
//! `V` corresponds to
//!
//! ```text
//! exp(eps_k) = (A (1, V))_k / sqrt(1 - V^2)
//! ```
//!
//! where `V` in the denominator is the H4 modulus, so that the product of the
//! four factors `W(V) = (1 - V^2)^2` makes the exponents sum to zero.
//!
//! # Conventions
//!
//! | Function | Maps | Matrix |
//! |----------|------|--------|
//! | [`apply_group`] | old coordinates `x` to new `x'` | `(1/4) A diag(exp eps) A` |
//! | [`boost_matrix`] | new coordinates `x'` to old `x` | `A diag(A (1, V)) A / (4 sqrt(1 - V^2))` |
//! | [`inverse_boost_matrix`] | old to new, the reverse transition | same with `exp(-eps)` |
//!
//! With `g = group_from_velocity(V)` the first two rows are the same matrix:
//! it takes an object at rest to one moving with `V`, e.g. `(1, 0, 0, 0)` to
//! `(1, V1, 0, 0) / sqrt(1 - V1^2)` for `V = (V1, 0, 0)`. The reverse
//! transition negates the exponents. It is not the transition for `-V`.

use std::ops::{Mul, Sub};

use crate::algebra::{from_isotropic, to_isotropic, BasisMatrix, Event4, IsotropicEvent4};
use crate::compensated::Dd;
use crate::error::{Error, Result};
use crate::kinematics::{velocity_modulus_h4, w_form, Velocity3, VelocityClass};
use crate::metric::interval4_h4_orthonormal;

/// Tolerance on `|sum eps_k|` for a valid group element.
pub const EPS_SUM_TOLERANCE: f64 = 1e-12;

/// A real 4x4 matrix acting on `(x0, x1, x2, x3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[f64; 4]; 4]);

impl Matrix4 {
    pub const fn identity() -> Self {
        Matrix4([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn apply(&self, e: Event4) -> Event4 {
        let x = e.to_array();
        let row = |i: usize| (0..4).map(|j| self.0[i][j] * x[j]).sum::<f64>();
        Event4::new(row(0), row(1), row(2), row(3))
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|a| a * a).sum::<f64>().sqrt()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, a| m.max(a.abs()))
    }

    /// `(1/4) A diag(d) A`.
    fn conjugated_diagonal(d: [f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = 0.25
                    * (0..4)
                        .map(|k| BasisMatrix::entry(i, k) * d[k] * BasisMatrix::entry(k, j))
                        .sum::<f64>();
            }
        }
        Matrix4(m)
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Matrix4(m)
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;

    fn sub(self, rhs: Matrix4) -> Matrix4 {
        let mut m = self.0;
        for (row, r) in m.iter_mut().zip(rhs.0) {
            for (cell, b) in row.iter_mut().zip(r) {
                *cell -= b;
            }
        }
        Matrix4(m)
    }
}

/// An element of `G1(H4)`, stored as its exponent vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    eps: [f64; 4],
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { eps: [0.0; 4] };

    pub fn new(eps: [f64; 4]) -> Result<Self> {
        let sum: f64 = eps.iter().sum();
        if !eps.iter().all(|e| e.is_finite()) || sum.abs() > EPS_SUM_TOLERANCE {
            return Err(Error::InvalidGroupElement { sum });
        }
        Ok(Self { eps })
    }

    /// Builds an element from three free exponents; the fourth is fixed by
    /// the zero-sum condition.
    pub fn from_free(e1: f64, e2: f64, e3: f64) -> Result<Self> {
        Self::new([-(e1 + e2 + e3), e1, e2, e3])
    }

    pub fn eps(&self) -> [f64; 4] {
        self.eps
    }

    pub fn eps_sum(&self) -> f64 {
        self.eps.iter().sum()
    }

    /// The element applying `self` first, then `other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let mut eps = self.eps;
        for (a, b) in eps.iter_mut().zip(other.eps) {
            *a += b;
        }
        GroupElement { eps }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            eps: self.eps.map(|e| -e),
        }
    }

    /// Diagonal of the map in the isotropic basis.
    pub fn scales(&self) -> [f64; 4] {
        self.eps.map(f64::exp)
    }

    /// The map in the orthonormal-analog basis.
    pub fn matrix(&self) -> Matrix4 {
        Matrix4::conjugated_diagonal(self.scales())
    }
}

/// A strictly subluminal frame velocity with its H4 modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameVelocity {
    velocity: Velocity3,
    modulus: f64,
}

impl FrameVelocity {
    pub fn new(velocity: Velocity3) -> Result<Self> {
        if velocity.classify() != VelocityClass::Subluminal {
            return Err(Error::Superluminal {
                min_factor: velocity.min_factor(),
            });
        }
        Ok(Self {
            velocity,
            modulus: velocity_modulus_h4(velocity)?,
        })
    }

    pub fn from_components(v1: f64, v2: f64, v3: f64) -> Result<Self> {
        Self::new(Velocity3::new(v1, v2, v3))
    }

    pub fn velocity(&self) -> Velocity3 {
        self.velocity
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    /// `sqrt(1 - V^2)`, computed as `W^(1/4)`.
    pub fn contraction(&self) -> f64 {
        w_form(self.velocity).w.sqrt().sqrt()
    }
}

/// `eps_k = ln (A (1, V))_k - ln sqrt(1 - V^2)`.
pub fn group_from_velocity(v: FrameVelocity) -> GroupElement {
    let logs = v.velocity.factors().map(f64::ln);
    let mean = logs.iter().sum::<f64>() / 4.0;
    GroupElement {
        eps: logs.map(|l| l - mean),
    }
}

/// The reverse transition: exponents negated.
pub fn inverse_group_from_velocity(v: FrameVelocity) -> GroupElement {
    group_from_velocity(v).inverse()
}

/// `x' = (1/4) A diag(exp eps) A x`, evaluated in the isotropic basis.
///
/// The image is formed in double-double precision. Each output coordinate is
/// then one of the two doubles bracketing the exact image; of these (up to 16)
/// faithful roundings the one whose quartic interval is closest to that of
/// `e` is returned. Near the cone a half-ulp change in `x'` moves a small
/// `xi'_k` by a large relative amount, and plain round-to-nearest can lose
/// several digits of the invariant.
pub fn apply_group(g: &GroupElement, e: Event4) -> Event4 {
    let xi = to_isotropic(e).to_array();
    let s = g.scales();
    let image: [Dd; 4] = std::array::from_fn(|k| Dd::prod(s[k], xi[k]));
    let coords: [(f64, f64); 4] = std::array::from_fn(|i| {
        (0..4)
            .map(|k| image[k].scale(BasisMatrix::entry(i, k)))
            .sum::<Dd>()
            .scale(0.25)
            .round_with_side()
    });
    let nearest = Event4::from_array(coords.map(|c| c.0));
    if !e.is_finite() || !nearest.is_finite() {
        return from_isotropic(IsotropicEvent4::from_array(image.map(Dd::to_f64)));
    }
    let alternate = coords.map(|(x, rest)| {
        if rest > 0.0 {
            x.next_up()
        } else if rest < 0.0 {
            x.next_down()
        } else {
            x
        }
    });
    let target = interval4_h4_orthonormal(e);
    let mut best = (nearest, (interval4_h4_orthonormal(nearest) - target).abs());
    for mask in 1..16u8 {
        if (0..4).any(|i| mask & (1 << i) != 0 && alternate[i] == coords[i].0) {
            continue;
        }
        let c: [f64; 4] =
            std::array::from_fn(|i| if mask & (1 << i) != 0 { alternate[i] } else { coords[i].0 });
        let candidate = Event4::from_array(c);
        let err = (interval4_h4_orthonormal(candidate) - target).abs();
        if err < best.1 {
            best = (candidate, err);
        }
    }
    best.0
}

fn addition_denominator(v: Velocity3, big: Velocity3) -> Result<f64> {
    let den = 1.0 + v.v1 * big.v1 + v.v2 * big.v2 + v.v3 * big.v3;
    if !(den > 0.0) {
        return Err(Error::Degenerate(format!(
            "velocity addition denominator 1 + v.V = {den} is not positive"
        )));
    }
    Ok(den)
}

/// Velocity `v` seen after the frame change by `V`.
pub fn add_velocities(v: Velocity3, frame: FrameVelocity) -> Result<Velocity3> {
    let b = frame.velocity;
    let den = addition_denominator(v, b)?;
    Ok(Velocity3::new(
        (v.v1 + b.v1 + v.v2 * b.v3 + v.v3 * b.v2) / den,
        (v.v2 + b.v2 + v.v1 * b.v3 + v.v3 * b.v1) / den,
        (v.v3 + b.v3 + v.v1 * b.v2 + v.v2 * b.v1) / den,
    ))
}

/// `sqrt(1 - (1 - v^2)(1 - V^2) / (1 + v.V)^2)` with H4 moduli `v`, `V`.
pub fn modulus_after_boost(v: Velocity3, frame: FrameVelocity) -> Result<f64> {
    if v.classify() == VelocityClass::Superluminal {
        return Err(Error::Superluminal {
            min_factor: v.min_factor(),
        });
    }
    let den = addition_denominator(v, frame.velocity)?;
    let one_minus_v2 = w_form(v).w.max(0.0).sqrt();
    let one_minus_big2 = w_form(frame.velocity).w.sqrt();
    let ratio = one_minus_v2 * one_minus_big2 / (den * den);
    Ok((1.0 - ratio).max(0.0).sqrt())
}

/// `dt' / dt = (1 + v.V) / sqrt(1 - V^2)` for two events on a world line of
/// velocity `v`.
pub fn time_dilation_factor(v: Velocity3, frame: FrameVelocity) -> Result<f64> {
    Ok(addition_denominator(v, frame.velocity)? / frame.contraction())
}

/// Old coordinates in terms of the new: `x = M x'`.
pub fn boost_matrix(frame: FrameVelocity) -> Matrix4 {
    let s = frame.contraction();
    Matrix4::conjugated_diagonal(frame.velocity.factors().map(|f| f / s))
}

/// The reverse transition, `exp(-eps_k) = sqrt(1 - V^2) / (A (1, V))_k`.
pub fn inverse_boost_matrix(frame: FrameVelocity) -> Matrix4 {
    let s = frame.contraction();
    Matrix4::conjugated_diagonal(frame.velocity.factors().map(|f| s / f))
}

/// Special-relativity boost along `x1`; `x2` and `x3` are untouched.
pub fn lorentz_boost_sr(v1: f64) -> Result<Matrix4> {
    if !(v1.abs() < 1.0) {
        return Err(Error::Domain(format!("|V1| = {} must be below 1", v1.abs())));
    }
    let gamma = 1.0 / ((1.0 - v1) * (1.0 + v1)).sqrt();
    let mut m = Matrix4::identity();
    m.0[0][0] = gamma;
    m.0[1][1] = gamma;
    m.0[0][1] = gamma * v1;
    m.0[1][0] = gamma * v1;
    Ok(m)
}
