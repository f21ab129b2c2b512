//! Three-velocity in H4: the `W` form and the velocity modulus.
//!
//! For a displacement `dt (1, v1, v2, v3)` the H4 interval is `dt W^(1/4)`
//! with
//!
//! ```text
//! W = (1 + v1 + v2 + v3)(1 + v1 - v2 - v3)(1 - v1 + v2 - v3)(1 - v1 - v2 + v3)
//! ```
//!
//! The four factors are the isotropic coordinates of `(1, v)` and always sum
//! to 4, so `W <= 1` inside the future cone. The modulus is fixed by
//! requiring `dt sqrt(1 - v^2) = dt W^(1/4)`, the same `f(v) = sqrt(1 - v^2)`
//! as in special relativity, which gives `v = sqrt(1 - sqrt(W))`.

use crate::algebra::{to_isotropic, Event4};
use crate::error::{Error, Result};
use crate::metric::fourth_root;

/// Absolute tolerance on the smallest cone factor for the boundary class.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

/// A 3-velocity in units of `c`; the time component is implicitly 1.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Velocity3 {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VelocityClass {
    /// All four cone factors positive.
    Subluminal,
    /// Smallest factor within [`BOUNDARY_TOLERANCE`] of zero.
    Boundary,
    Superluminal,
}

impl VelocityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            VelocityClass::Subluminal => "subluminal",
            VelocityClass::Boundary => "boundary",
            VelocityClass::Superluminal => "superluminal",
        }
    }
}

impl Velocity3 {
    pub const ZERO: Velocity3 = Velocity3::new(0.0, 0.0, 0.0);

    pub const fn new(v1: f64, v2: f64, v3: f64) -> Self {
        Self { v1, v2, v3 }
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Displacement `(1, v1, v2, v3)`.
    pub const fn four_vector(self) -> Event4 {
        Event4::new(1.0, self.v1, self.v2, self.v3)
    }

    /// The cone factors `A (1, v)`.
    pub fn factors(self) -> [f64; 4] {
        to_isotropic(self.four_vector()).to_array()
    }

    pub fn min_factor(self) -> f64 {
        self.factors().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn classify(self) -> VelocityClass {
        let m = self.min_factor();
        if m > BOUNDARY_TOLERANCE {
            VelocityClass::Subluminal
        } else if m.abs() <= BOUNDARY_TOLERANCE {
            VelocityClass::Boundary
        } else {
            VelocityClass::Superluminal
        }
    }

    pub fn is_subluminal(self) -> bool {
        self.classify() == VelocityClass::Subluminal
    }
}

impl std::ops::Neg for Velocity3 {
    type Output = Velocity3;

    fn neg(self) -> Velocity3 {
        Velocity3::new(-self.v1, -self.v2, -self.v3)
    }
}

/// The four factors of `W` and their product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WForm {
    pub factors: [f64; 4],
    pub w: f64,
}

pub fn w_form(v: Velocity3) -> WForm {
    let factors = v.factors();
    WForm {
        factors,
        w: factors.iter().product(),
    }
}

/// `1 - W` expanded so that it does not cancel for small velocities:
/// `2 v^2 - v^4 + 4 (v1^2 v2^2 + v1^2 v3^2 + v2^2 v3^2) - 8 v1 v2 v3`.
fn one_minus_w(v: Velocity3) -> f64 {
    let (a, b, c) = (v.v1 * v.v1, v.v2 * v.v2, v.v3 * v.v3);
    let v2 = a + b + c;
    2.0 * v2 - v2 * v2 + 4.0 * (a * b + a * c + b * c) - 8.0 * v.v1 * v.v2 * v.v3
}

/// H4 velocity modulus `sqrt(1 - sqrt(W))`.
///
/// A velocity with a single non-zero component has modulus equal to the
/// absolute value of that component. On the cone boundary the modulus is
/// exactly 1.
pub fn velocity_modulus_h4(v: Velocity3) -> Result<f64> {
    match v.classify() {
        VelocityClass::Superluminal => {
            return Err(Error::Superluminal {
                min_factor: v.min_factor(),
            })
        }
        VelocityClass::Boundary => return Ok(1.0),
        VelocityClass::Subluminal => {}
    }
    let c = v.to_array();
    if c.iter().filter(|x| **x != 0.0).count() <= 1 {
        return Ok(c.iter().fold(0.0, |m: f64, x| m.max(x.abs())));
    }
    let sqrt_w = w_form(v).w.sqrt();
    // 1 - sqrt(W) = (1 - W) / (1 + sqrt(W))
    Ok((one_minus_w(v).max(0.0) / (1.0 + sqrt_w)).sqrt())
}

/// `sqrt(1 - v^2) = W^(1/4)` for a subluminal or boundary velocity.
pub fn interval_factor_h4(v: Velocity3) -> Result<f64> {
    if v.classify() == VelocityClass::Superluminal {
        return Err(Error::Superluminal {
            min_factor: v.min_factor(),
        });
    }
    Ok(fourth_root(w_form(v).w.max(0.0)))
}

/// Interval `dt W^(1/4)` between two events separated by `dt (1, v)`.
pub fn interval_from_velocity_h4(dt: f64, v: Velocity3) -> Result<f64> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("time step must be positive, got {dt}")));
    }
    let w = w_form(v).w;
    if !(w >= 0.0) {
        return Err(Error::Domain(format!("W = {w} is negative")));
    }
    Ok(dt * fourth_root(w))
}

/// `v_i = (x2_i - x1_i) / (x2_0 - x1_0)`; the second event must be later.
pub fn velocity_from_events(e1: Event4, e2: Event4) -> Result<Velocity3> {
    let d = e2 - e1;
    if d.x0 == 0.0 {
        return Err(Error::Degenerate(
            "events have equal time components".to_string(),
        ));
    }
    if !(d.x0 > 0.0) {
        return Err(Error::Degenerate(format!(
            "second event precedes the first (dt = {})",
            d.x0
        )));
    }
    Ok(Velocity3::new(d.x1 / d.x0, d.x2 / d.x0, d.x3 / d.x0))
}

/// Euclidean norm of the 3-velocity, the Galilean/SR modulus.
pub fn velocity_modulus_nonrel(v: Velocity3) -> f64 {
    (v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3).sqrt()
}
