//! The two coordinate systems of H4 and the fixed integer change of basis.
//!
//! The isotropic basis `(xi1, xi2, xi3, xi4)` is the one in which the interval
//! is `(xi1 xi2 xi3 xi4)^(1/4)`; its basis vectors lie on the light cone. The
//! orthonormal-analog basis `(x0, x1, x2, x3)` separates one time-like and
//! three space-like coordinates. The two are related by `xi = A x` with
//!
//! ```text
//!     | 1  1  1  1 |
//! A = | 1  1 -1 -1 |        A A = 4 I
//!     | 1 -1  1 -1 |
//!     | 1 -1 -1  1 |
//! ```
//!
//! The conversions are written out by hand so every platform produces the
//! same bits.

use std::ops::{Add, Neg, Sub};

use crate::compensated::sum4;

/// Relative tolerance for the cone boundary, scaled by `max |xi_i|`.
pub const CONE_TOLERANCE: f64 = 1e-12;

/// A space-time point in the orthonormal-analog basis.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Event4 {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Event4 {
    pub const ORIGIN: Event4 = Event4::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub const fn from_array(x: [f64; 4]) -> Self {
        Self::new(x[0], x[1], x[2], x[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(k * self.x0, k * self.x1, k * self.x2, k * self.x3)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

impl Add for Event4 {
    type Output = Event4;

    fn add(self, rhs: Event4) -> Event4 {
        Event4::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl Sub for Event4 {
    type Output = Event4;

    fn sub(self, rhs: Event4) -> Event4 {
        Event4::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl Neg for Event4 {
    type Output = Event4;

    fn neg(self) -> Event4 {
        Event4::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

/// The same point expressed in the isotropic basis.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IsotropicEvent4 {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
    pub xi4: f64,
}

impl IsotropicEvent4 {
    pub const fn new(xi1: f64, xi2: f64, xi3: f64, xi4: f64) -> Self {
        Self { xi1, xi2, xi3, xi4 }
    }

    pub const fn from_array(xi: [f64; 4]) -> Self {
        Self::new(xi[0], xi[1], xi[2], xi[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.xi1, self.xi2, self.xi3, self.xi4]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(k * self.xi1, k * self.xi2, k * self.xi3, k * self.xi4)
    }

    /// `xi1 xi2 xi3 xi4`, the fourth power of the H4 interval.
    pub fn product(&self) -> f64 {
        self.xi1 * self.xi2 * self.xi3 * self.xi4
    }
}

/// The constant change-of-basis matrix `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisMatrix;

impl BasisMatrix {
    pub const A: [[i64; 4]; 4] = [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ];

    /// `A A`, computed in integer arithmetic.
    pub fn square() -> [[i64; 4]; 4] {
        let a = Self::A;
        let mut out = [[0i64; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| a[i][k] * a[k][j]).sum();
            }
        }
        out
    }

    /// Entry `A_ij` as a float.
    pub fn entry(i: usize, j: usize) -> f64 {
        Self::A[i][j] as f64
    }
}

/// `xi = A x`. Each row sum is rounded once, so a small `xi_i` keeps full
/// relative precision near the cone.
pub fn to_isotropic(e: Event4) -> IsotropicEvent4 {
    let Event4 { x0, x1, x2, x3 } = e;
    IsotropicEvent4::new(
        sum4(x0, x1, x2, x3),
        sum4(x0, x1, -x2, -x3),
        sum4(x0, -x1, x2, -x3),
        sum4(x0, -x1, -x2, x3),
    )
}

/// `x = A xi / 4` (A is symmetric and `A A = 4 I`).
pub fn from_isotropic(xi: IsotropicEvent4) -> Event4 {
    let IsotropicEvent4 { xi1, xi2, xi3, xi4 } = xi;
    Event4::new(
        sum4(xi1, xi2, xi3, xi4) * 0.25,
        sum4(xi1, xi2, -xi3, -xi4) * 0.25,
        sum4(xi1, -xi2, xi3, -xi4) * 0.25,
        sum4(xi1, -xi2, -xi3, xi4) * 0.25,
    )
}

/// Position of a vector relative to the flat-sided future cone `xi_i > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeClass {
    InsideFuture,
    OnBoundary,
    Outside,
}

impl ConeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConeClass::InsideFuture => "inside_future",
            ConeClass::OnBoundary => "on_boundary",
            ConeClass::Outside => "outside",
        }
    }
}

pub fn cone_classify(xi: IsotropicEvent4) -> ConeClass {
    let c = xi.to_array();
    let scale = c.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let tol = CONE_TOLERANCE * scale;
    let min = c.iter().copied().fold(f64::INFINITY, f64::min);
    if min > tol {
        ConeClass::InsideFuture
    } else if min.abs() <= tol {
        ConeClass::OnBoundary
    } else {
        ConeClass::Outside
    }
}
