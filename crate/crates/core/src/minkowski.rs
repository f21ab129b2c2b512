//! Special-relativity reference constructions.
//!
//! Distance in Minkowski space built the same way as in H4: two
//! hyperboloids of equal radius `S` centred at `(-T, 0, 0, 0)` and
//! `(T, 0, 0, 0)` intersect on the hyperplane `x0 = 0`, and the distance
//! labelling the intersection is `l = sqrt(T^2 - S^2)`. On that hyperplane
//! this is the Euclidean norm of the spatial offset.

use crate::algebra::Event4;
use crate::error::{Error, Result};
use crate::kinematics::Velocity3;
use crate::simultaneity::{ObserverScale, SpatialOffset};

/// Two pseudo-spheres of radius `s_radius` centred at `(±t_half, 0, 0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPair {
    pub t_half: f64,
    pub s_radius: f64,
}

impl HyperboloidPair {
    pub fn new(t_half: f64, s_radius: f64) -> Result<Self> {
        if !(t_half > 0.0) || !t_half.is_finite() {
            return Err(Error::Domain(format!("T must be positive, got {t_half}")));
        }
        if !(s_radius >= 0.0) || !s_radius.is_finite() {
            return Err(Error::Domain(format!("S must be non-negative, got {s_radius}")));
        }
        Ok(Self { t_half, s_radius })
    }
}

/// Residuals of the sum and difference of the two hyperboloid equations:
/// `(S^2 - (T^2 + x0^2 - x1^2 - x2^2 - x3^2), 2 T x0)`.
pub fn mink_intersection_residuals(p: HyperboloidPair, e: Event4) -> (f64, f64) {
    let HyperboloidPair { t_half: t, s_radius: s } = p;
    let Event4 { x0, x1, x2, x3 } = e;
    (
        s * s - (t * t + x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3),
        2.0 * t * x0,
    )
}

/// `l = sqrt(T^2 - S^2)`.
pub fn mink_distance(p: HyperboloidPair) -> Result<f64> {
    if p.s_radius > p.t_half {
        return Err(Error::Domain(format!(
            "S = {} exceeds T = {}",
            p.s_radius, p.t_half
        )));
    }
    Ok(((p.t_half - p.s_radius) * (p.t_half + p.s_radius)).sqrt())
}

/// Distance between the time axis and the parallel world line through `e`.
pub fn mink_distance_euclid(e: Event4) -> f64 {
    (e.x1 * e.x1 + e.x2 * e.x2 + e.x3 * e.x3).sqrt()
}

/// Runs the two-hyperboloid construction for a spatial offset: solve
/// `2 T x0 = 0`, read `S^2` off the first equation and convert it to `l`.
pub fn mink_distance_on_surface(scale: ObserverScale, d: SpatialOffset) -> Result<f64> {
    let t = scale.t_half();
    let x0 = 0.0;
    let s2 = t * t + x0 * x0 - d.norm_squared();
    if !(s2 >= 0.0) {
        return Err(Error::OutsideDomain {
            r2: d.norm_squared(),
            t2: t * t,
        });
    }
    let pair = HyperboloidPair::new(t, s2.sqrt())?;
    debug_assert!(mink_intersection_residuals(pair, d.at_time(x0)).1 == 0.0);
    mink_distance(pair)
}

pub fn mink_velocity_modulus(v: Velocity3) -> f64 {
    (v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3).sqrt()
}

/// `sqrt(1 - v^2)`, the SR interval per unit coordinate time.
pub fn mink_interval_factor(v: Velocity3) -> Result<f64> {
    let v2 = v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3;
    if v2 > 1.0 {
        return Err(Error::Domain(format!("|v| = {} exceeds 1", v2.sqrt())));
    }
    Ok((1.0 - v2).sqrt())
}

/// `S21 = dt sqrt(1 - v^2)`.
pub fn mink_interval_from_velocity(dt: f64, v: Velocity3) -> Result<f64> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("time step must be positive, got {dt}")));
    }
    Ok(dt * mink_interval_factor(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::velocity_from_events;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn pair(t: f64, s: f64) -> HyperboloidPair {
        HyperboloidPair::new(t, s).unwrap()
    }

    #[test]
    fn residual_examples() {
        let (a, b) = mink_intersection_residuals(pair(1.0, 0.8), Event4::new(0.0, 0.6, 0.0, 0.0));
        assert!(a.abs() < 1e-15);
        assert_eq!(b, 0.0);
        assert_eq!(
            mink_intersection_residuals(pair(1.0, 1.0), Event4::ORIGIN),
            (0.0, 0.0)
        );
        // 0.64 - (1 + 0.01 - 0.36)
        let (a, b) = mink_intersection_residuals(pair(1.0, 0.8), Event4::new(0.1, 0.6, 0.0, 0.0));
        assert_relative_eq!(a, -0.01, max_relative = 1e-12);
        assert_relative_eq!(b, 0.2, max_relative = 1e-15);
    }

    #[test]
    fn distance_examples() {
        assert_relative_eq!(mink_distance(pair(1.0, 0.8)).unwrap(), 0.6, max_relative = 1e-15);
        assert_eq!(mink_distance(pair(1.0, 1.0)).unwrap(), 0.0);
        assert_eq!(mink_distance(pair(1.0, 0.0)).unwrap(), 1.0);
        assert!(matches!(mink_distance(pair(1.0, 1.2)), Err(Error::Domain(_))));
        assert!(HyperboloidPair::new(0.0, 0.5).is_err());
        assert!(HyperboloidPair::new(1.0, -0.5).is_err());
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(mink_distance_euclid(Event4::new(7.0, 3.0, 4.0, 0.0)), 5.0);
        assert_eq!(mink_distance_euclid(Event4::new(-2.0, 0.0, 0.0, 0.0)), 0.0);
        assert_eq!(mink_distance_euclid(Event4::new(0.0, 1.0, 1.0, 1.0)), 3f64.sqrt());
    }

    #[test]
    fn velocity_examples() {
        assert_eq!(mink_velocity_modulus(Velocity3::new(0.6, 0.0, 0.0)), 0.6);
        assert_eq!(mink_velocity_modulus(Velocity3::new(0.6, 0.8, 0.0)), 1.0);
        assert_relative_eq!(
            mink_velocity_modulus(Velocity3::new(0.1, 0.2, 0.2)),
            0.3,
            max_relative = 1e-15
        );
        assert_eq!(mink_interval_from_velocity(1.0, Velocity3::ZERO).unwrap(), 1.0);
        assert_relative_eq!(
            mink_interval_from_velocity(2.0, Velocity3::new(0.6, 0.0, 0.0)).unwrap(),
            1.6,
            max_relative = 1e-15
        );
        assert_eq!(
            mink_interval_from_velocity(1.0, Velocity3::new(0.6, 0.8, 0.0)).unwrap(),
            0.0
        );
        assert!(mink_interval_from_velocity(1.0, Velocity3::new(0.9, 0.9, 0.0)).is_err());
    }

    #[test]
    fn rotation_invariance_of_modulus() {
        let v = [0.1, -0.25, 0.4];
        let m = mink_velocity_modulus(Velocity3::new(v[0], v[1], v[2]));
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            for signs in 0..8u8 {
                let s = |k: u8| if signs & (1 << k) != 0 { -1.0 } else { 1.0 };
                let w = Velocity3::new(s(0) * v[p[0]], s(1) * v[p[1]], s(2) * v[p[2]]);
                assert_eq!(mink_velocity_modulus(w), m);
            }
        }
    }

    proptest! {
        #[test]
        fn surface_pipeline_reproduces_euclid(
            t in 0.1..10.0f64, a in -1.0..1.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64
        ) {
            let d = SpatialOffset::new(0.5 * t * a / 3f64.sqrt(), 0.5 * t * b / 3f64.sqrt(), 0.5 * t * c / 3f64.sqrt());
            let l = mink_distance_on_surface(ObserverScale::new(t).unwrap(), d).unwrap();
            let euclid = mink_distance_euclid(d.at_time(0.0));
            prop_assert!((l - euclid).abs() <= 1e-12 * t);
        }

        #[test]
        fn intersection_points_have_euclid_distance(
            t in 0.1..10.0f64, frac in 0.0..1.0f64, a in -1.0..1.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64
        ) {
            let n = (a * a + b * b + c * c).sqrt();
            prop_assume!(n > 1e-3);
            let s = frac * t;
            let l = (t * t - s * s).sqrt();
            let e = Event4::new(0.0, l * a / n, l * b / n, l * c / n);
            let p = pair(t, s);
            let (r1, r2) = mink_intersection_residuals(p, e);
            prop_assert!(r1.abs() <= 1e-12 * t * t && r2 == 0.0);
            prop_assert!((mink_distance_euclid(e) - mink_distance(p).unwrap()).abs() <= 1e-12 * t);
        }

        #[test]
        fn velocity_from_event_difference(
            dt in 0.01..10.0f64, a in -1.0..1.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64,
            o in -5.0..5.0f64
        ) {
            let e1 = Event4::new(o, -o, 2.0 * o, 0.5);
            let e2 = e1 + Event4::new(dt, dt * a, dt * b, dt * c);
            let v = velocity_from_events(e1, e2).unwrap();
            for (got, want) in v.to_array().iter().zip([a, b, c]) {
                prop_assert!((got - want).abs() <= 1e-13 * (1.0 + o.abs() / dt));
            }
        }
    }
}
