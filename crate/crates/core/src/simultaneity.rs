//! Relative-simultaneity surface and the 3-distance in H4.
//!
//! An observer on the time axis takes the two events `(-T, 0, 0, 0)` and
//! `(T, 0, 0, 0)`. Events at equal H4 interval `S` from both lie on the
//! intersection of two quartic hyperboloids; adding and subtracting their
//! equations gives
//!
//! ```text
//! S^4 = x0^4 + 2 x0^2 (3T^2 - r^2) + 8 x0 x1 x2 x3 + T^4 - 2 T^2 r^2
//!       + x1^4 + x2^4 + x3^4 - 2 (x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2)
//!   0 = x0^3 + (T^2 - r^2) x0 + 2 x1 x2 x3
//! ```
//!
//! with `r^2 = x1^2 + x2^2 + x3^2`. The second equation is the simultaneity
//! surface. For `r < T` it has exactly one real root `x0`. The distance to
//! the parallel world line through `(x1, x2, x3)` is `l = sqrt(T^2 - S^2)`,
//! which is `|x1|` on the `x1` axis and tends to the Euclidean norm as
//! `r / T -> 0`.
//!
//! Both the quartic and `T^2 - S^2` are evaluated without subtractive
//! cancellation: `l^2 = r^2 + (4 P - X) / (S^2 + T^2 - r^2)` where `P` is the
//! sum of pairwise products `x_i^2 x_j^2` and `X` collects the terms
//! containing `x0`.

use std::ops::Neg;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::Event4;
use crate::compensated::Dd;
use crate::cubic::{depressed_cubic_discriminant, depressed_cubic_residual, solve_depressed_cubic};
use crate::error::{Error, Result};
use crate::minkowski::mink_distance_on_surface;

/// Residual tolerance of the cubic root, scaled by `max(T^3, 1)`.
pub const DEFAULT_RESIDUAL_TOLERANCE: f64 = 1e-12;

/// Default cap on the number of grid nodes.
pub const DEFAULT_MAX_NODES: usize = 1_000_000;

/// Half the interval `T` between the two hyperboloid centres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObserverScale(f64);

impl ObserverScale {
    pub fn new(t_half: f64) -> Result<Self> {
        if !(t_half > 0.0) || !t_half.is_finite() {
            return Err(Error::Domain(format!("T must be positive and finite, got {t_half}")));
        }
        Ok(Self(t_half))
    }

    pub fn t_half(self) -> f64 {
        self.0
    }
}

/// Spatial offset of a parallel world line from the observer's.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpatialOffset {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl SpatialOffset {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn norm_squared(&self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    pub fn triple_product(&self) -> f64 {
        self.x1 * self.x2 * self.x3
    }

    /// The event `(x0, x1, x2, x3)`.
    pub fn at_time(&self, x0: f64) -> Event4 {
        Event4::new(x0, self.x1, self.x2, self.x3)
    }

    fn pair_products(&self) -> f64 {
        let (a, b, c) = (self.x1 * self.x1, self.x2 * self.x2, self.x3 * self.x3);
        a * b + a * c + b * c
    }
}

impl Neg for SpatialOffset {
    type Output = SpatialOffset;

    fn neg(self) -> SpatialOffset {
        SpatialOffset::new(-self.x1, -self.x2, -self.x3)
    }
}

fn cubic_coefficients(scale: ObserverScale, d: SpatialOffset) -> (f64, f64) {
    let t = scale.t_half();
    ((t - d.norm_squared().sqrt()) * (t + d.norm_squared().sqrt()), 2.0 * d.triple_product())
}

/// Residual of the simultaneity cubic at `x0`.
pub fn simultaneity_residual(scale: ObserverScale, d: SpatialOffset, x0: f64) -> f64 {
    let (p, q) = cubic_coefficients(scale, d);
    depressed_cubic_residual(p, q, x0)
}

/// Time coordinate of the simultaneity surface above the offset `d`.
///
/// Requires `r^2 < T^2`. The root is exactly zero whenever one of the
/// offset components is zero.
pub fn simultaneity_x0(scale: ObserverScale, d: SpatialOffset) -> Result<f64> {
    let t2 = scale.t_half() * scale.t_half();
    let r2 = d.norm_squared();
    if !(r2 < t2) {
        return Err(Error::OutsideDomain { r2, t2 });
    }
    let (p, q) = cubic_coefficients(scale, d);
    debug_assert!(depressed_cubic_discriminant(p, q) < 0.0);
    solve_depressed_cubic(p, q)
}

/// `S^4` from the sum of the two hyperboloid equations, at a given `x0`.
pub fn s4_on_surface(scale: ObserverScale, d: SpatialOffset, x0: f64) -> f64 {
    let t = scale.t_half();
    let tt = Dd::square(t);
    let (s0, s1, s2, s3) = (Dd::square(x0), Dd::square(d.x1), Dd::square(d.x2), Dd::square(d.x3));
    let r2 = s1.add(s2).add(s3);
    [
        s0.mul(s0),
        s0.mul(tt).scale(6.0),
        s0.mul(r2).scale(-2.0),
        Dd::prod(x0, d.x1).mul(Dd::prod(d.x2, d.x3)).scale(8.0),
        tt.mul(tt),
        tt.mul(r2).scale(-2.0),
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

/// A point of the simultaneity surface with its interval and distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub x0: f64,
    pub s4: f64,
    pub l: f64,
}

fn solve_point(scale: ObserverScale, d: SpatialOffset) -> Result<SurfacePoint> {
    let x0 = simultaneity_x0(scale, d)?;
    let s4 = s4_on_surface(scale, d, x0);
    let l = distance_from_s4(scale, d, x0, s4)?;
    Ok(SurfacePoint { x0, s4, l })
}

fn distance_from_s4(scale: ObserverScale, d: SpatialOffset, x0: f64, s4: f64) -> Result<f64> {
    let t = scale.t_half();
    let t2 = t * t;
    let t4 = t2 * t2;
    if !(0.0..=t4).contains(&s4) {
        return Err(Error::OutsideCausalRegion { s4, t4 });
    }
    let s2 = s4.sqrt();
    let r2 = d.norm_squared();
    let a = (t - r2.sqrt()) * (t + r2.sqrt());
    let x0_terms = x0 * x0 * x0 * x0
        + 2.0 * x0 * x0 * (3.0 * t2 - r2)
        + 8.0 * x0 * d.triple_product();
    let l2 = r2 + (4.0 * d.pair_products() - x0_terms) / (s2 + a);
    Ok(l2.max(0.0).sqrt())
}

/// The 3-distance `l(T, x1, x2, x3)` from the observer's world line to the
/// parallel world line through `d`.
pub fn distance_h4(scale: ObserverScale, d: SpatialOffset) -> Result<f64> {
    solve_point(scale, d).map(|p| p.l)
}

/// `(l(T, d), l(T, -d))`: distance from the observer to the world line at
/// `d`, and from that world line back to the observer.
///
/// The quartic form is even, so `(x0, x) -> (-x0, -x)` maps the surface for
/// `d` onto the one for `-d` with the same `S^4`; both values agree up to
/// rounding.
pub fn distance_asymmetry(scale: ObserverScale, d: SpatialOffset) -> Result<(f64, f64)> {
    Ok((distance_h4(scale, d)?, distance_h4(scale, -d)?))
}

/// One coordinate axis of a sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl AxisRange {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::Config(format!("axis bounds must be finite, got {min}..{max}")));
        }
        if count == 0 {
            return Err(Error::Config("axis node count must be at least 1".into()));
        }
        if min > max {
            return Err(Error::Config(format!("inverted axis range {min} > {max}")));
        }
        Ok(Self { min, max, count })
    }

    /// A single node at `v`.
    pub fn point(v: f64) -> Result<Self> {
        Self::new(v, v, 1)
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

/// Parses `MIN:MAX:COUNT` or a single value.
impl FromStr for AxisRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |part: &str| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("invalid number '{part}' in axis '{s}'")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => AxisRange::point(num(v)?),
            [lo, hi, n] => {
                let count = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Config(format!("invalid node count '{n}' in axis '{s}'")))?;
                AxisRange::new(num(lo)?, num(hi)?, count)
            }
            _ => Err(Error::Config(format!("axis '{s}' is not MIN:MAX:COUNT"))),
        }
    }
}

/// Rectangular grid over `(x1, x2, x3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x1: AxisRange,
    pub x2: AxisRange,
    pub x3: AxisRange,
}

impl GridSpec {
    pub fn new(x1: AxisRange, x2: AxisRange, x3: AxisRange) -> Result<Self> {
        Self::with_cap(x1, x2, x3, DEFAULT_MAX_NODES)
    }

    pub fn with_cap(x1: AxisRange, x2: AxisRange, x3: AxisRange, max_nodes: usize) -> Result<Self> {
        let grid = Self { x1, x2, x3 };
        for axis in [x1, x2, x3] {
            AxisRange::new(axis.min, axis.max, axis.count)?;
        }
        let total = x1
            .count
            .checked_mul(x2.count)
            .and_then(|n| n.checked_mul(x3.count));
        match total {
            Some(n) if n <= max_nodes => Ok(grid),
            _ => Err(Error::Config(format!(
                "grid has {}x{}x{} nodes, above the cap of {max_nodes}",
                x1.count, x2.count, x3.count
            ))),
        }
    }

    pub fn node_count(&self) -> usize {
        self.x1.count * self.x2.count * self.x3.count
    }

    /// Node `k` in row-major order with `x3` varying fastest.
    pub fn node(&self, k: usize) -> SpatialOffset {
        let n3 = self.x3.count;
        let n2 = self.x2.count;
        let (i, rest) = (k / (n2 * n3), k % (n2 * n3));
        let (j, l) = (rest / n3, rest % n3);
        SpatialOffset::new(self.x1.value(i), self.x2.value(j), self.x3.value(l))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleStatus {
    Ok,
    OutsideDomain,
    OutsideCausalRegion,
    ResidualExceeded,
}

impl SampleStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SampleStatus::Ok => "ok",
            SampleStatus::OutsideDomain => "outside_domain",
            SampleStatus::OutsideCausalRegion => "outside_causal_region",
            SampleStatus::ResidualExceeded => "residual_exceeded",
        }
    }
}

/// One grid node of a sampled surface. Fields that could not be computed
/// are `None` and `status` says why.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub offset: SpatialOffset,
    pub x0: Option<f64>,
    pub s4: Option<f64>,
    pub l: Option<f64>,
    pub status: SampleStatus,
}

impl SurfaceSample {
    fn skipped(offset: SpatialOffset, status: SampleStatus) -> Self {
        Self {
            offset,
            x0: None,
            s4: None,
            l: None,
            status,
        }
    }
}

fn sample_node(scale: ObserverScale, d: SpatialOffset, tolerance: f64) -> SurfaceSample {
    let x0 = match simultaneity_x0(scale, d) {
        Ok(x0) => x0,
        Err(_) => return SurfaceSample::skipped(d, SampleStatus::OutsideDomain),
    };
    let t = scale.t_half();
    let s4 = s4_on_surface(scale, d, x0);
    let residual = simultaneity_residual(scale, d, x0);
    let mut sample = SurfaceSample {
        offset: d,
        x0: Some(x0),
        s4: Some(s4),
        l: None,
        status: SampleStatus::Ok,
    };
    if residual.abs() > tolerance * (t * t * t).max(1.0) {
        sample.status = SampleStatus::ResidualExceeded;
        return sample;
    }
    match distance_from_s4(scale, d, x0, s4) {
        Ok(l) => sample.l = Some(l),
        Err(_) => sample.status = SampleStatus::OutsideCausalRegion,
    }
    sample
}

/// Samples the H4 simultaneity surface on every node of `grid`.
///
/// Nodes outside the domain are kept, with a non-`Ok` status. Output order
/// follows [`GridSpec::node`]; nodes are evaluated in parallel.
pub fn sample_surface(scale: ObserverScale, grid: &GridSpec) -> Vec<SurfaceSample> {
    sample_surface_with_tolerance(scale, grid, DEFAULT_RESIDUAL_TOLERANCE)
}

pub fn sample_surface_with_tolerance(
    scale: ObserverScale,
    grid: &GridSpec,
    tolerance: f64,
) -> Vec<SurfaceSample> {
    (0..grid.node_count())
        .into_par_iter()
        .map(|k| sample_node(scale, grid.node(k), tolerance))
        .collect()
}

/// The Minkowski counterpart: the flat surface `x0 = 0`, with
/// `S^2 = T^2 - r^2` and `l = r`.
pub fn sample_flat_surface(scale: ObserverScale, grid: &GridSpec) -> Vec<SurfaceSample> {
    let t = scale.t_half();
    (0..grid.node_count())
        .into_par_iter()
        .map(|k| {
            let d = grid.node(k);
            if !(d.norm_squared() < t * t) {
                return SurfaceSample::skipped(d, SampleStatus::OutsideDomain);
            }
            let s2 = (t * t - d.norm_squared()).max(0.0);
            match mink_distance_on_surface(scale, d) {
                Ok(l) => SurfaceSample {
                    offset: d,
                    x0: Some(0.0),
                    s4: Some(s2 * s2),
                    l: Some(l),
                    status: SampleStatus::Ok,
                },
                Err(_) => SurfaceSample::skipped(d, SampleStatus::OutsideDomain),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::interval4_h4_orthonormal;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn unit() -> ObserverScale {
        ObserverScale::new(1.0).unwrap()
    }

    fn off(a: f64, b: f64, c: f64) -> SpatialOffset {
        SpatialOffset::new(a, b, c)
    }

    /// Bisection on the cubic over [-T, T] plus direct evaluation of the
    /// first hyperboloid equation at `(T + x0, x)`.
    fn distance_oracle(t: f64, d: [f64; 3]) -> (f64, f64, f64) {
        let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        let q = 2.0 * d[0] * d[1] * d[2];
        let f = |x: f64| x * x * x + (t * t - r2) * x + q;
        let (mut lo, mut hi) = (-t, t);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) < 0.0) == (f(lo) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let x0 = 0.5 * (lo + hi);
        let s4 = interval4_h4_orthonormal(Event4::new(t + x0, d[0], d[1], d[2]));
        (x0, s4, (t * t - s4.sqrt()).sqrt())
    }

    #[test]
    fn x0_examples() {
        assert_eq!(simultaneity_x0(unit(), off(0.6, 0.0, 0.0)).unwrap(), 0.0);
        assert_eq!(simultaneity_x0(unit(), off(0.3, 0.2, 0.0)).unwrap(), 0.0);
        let x0 = simultaneity_x0(unit(), off(0.3, 0.2, 0.1)).unwrap();
        let (oracle, _, _) = distance_oracle(1.0, [0.3, 0.2, 0.1]);
        assert!((x0 - oracle).abs() < 1e-16);
        assert!((x0 + 0.013_950).abs() < 1e-6);
    }

    #[test]
    fn x0_outside_domain() {
        assert!(matches!(
            simultaneity_x0(unit(), off(1.0, 0.0, 0.0)),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(matches!(
            simultaneity_x0(unit(), off(0.8, 0.8, 0.0)),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(ObserverScale::new(0.0).is_err());
        assert!(ObserverScale::new(f64::INFINITY).is_err());
    }

    #[test]
    fn s4_examples() {
        assert_relative_eq!(s4_on_surface(unit(), off(0.6, 0.0, 0.0), 0.0), 0.4096, max_relative = 1e-15);
        assert_eq!(s4_on_surface(unit(), off(0.0, 0.0, 0.0), 0.0), 1.0);
        let d = off(0.3, 0.2, 0.1);
        let x0 = simultaneity_x0(unit(), d).unwrap();
        let s4 = s4_on_surface(unit(), d, x0);
        let plus = interval4_h4_orthonormal(Event4::new(1.0 + x0, 0.3, 0.2, 0.1));
        let minus = interval4_h4_orthonormal(Event4::new(1.0 - x0, -0.3, -0.2, -0.1));
        assert_relative_eq!(s4, plus, max_relative = 1e-14);
        assert_relative_eq!(s4, minus, max_relative = 1e-14);
        assert_relative_eq!(s4, 0.720_443_601_167_286, max_relative = 1e-12);
    }

    #[test]
    fn s4_is_half_sum_of_hyperboloid_equations() {
        // off the surface the two equations differ, their mean is still S^4
        let t = ObserverScale::new(1.7).unwrap();
        let d = off(0.4, -0.3, 0.5);
        for x0 in [-0.3, 0.0, 0.21] {
            let plus = interval4_h4_orthonormal(Event4::new(1.7 + x0, d.x1, d.x2, d.x3));
            let minus = interval4_h4_orthonormal(Event4::new(1.7 - x0, -d.x1, -d.x2, -d.x3));
            assert_relative_eq!(s4_on_surface(t, d, x0), 0.5 * (plus + minus), max_relative = 1e-14);
            // and their half-difference is 4 T times the cubic
            assert_relative_eq!(
                0.5 * (plus - minus),
                4.0 * 1.7 * simultaneity_residual(t, d, x0),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance_h4(unit(), off(0.6, 0.0, 0.0)).unwrap(), 0.6);
        assert_eq!(distance_h4(unit(), off(0.0, 0.0, 0.0)).unwrap(), 0.0);
        let l = distance_h4(unit(), off(0.3, 0.2, 0.1)).unwrap();
        let (_, _, oracle) = distance_oracle(1.0, [0.3, 0.2, 0.1]);
        assert_relative_eq!(l, oracle, max_relative = 1e-12);
        assert_relative_eq!(l, 0.388_857_953_925_665_7, max_relative = 1e-12);
        assert!(l > 0.14f64.sqrt());
    }

    #[test]
    fn distance_outside_causal_region() {
        // |x1| + |x2| > T in the x3 = 0 plane makes S^4 negative
        let err = distance_h4(unit(), off(0.6, 0.6, 0.0)).unwrap_err();
        assert!(matches!(err, Error::OutsideCausalRegion { .. }));
    }

    #[test]
    fn distance_is_even_in_the_offset() {
        let (a, b) = distance_asymmetry(unit(), off(0.6, 0.0, 0.0)).unwrap();
        assert_eq!((a, b), (0.6, 0.6));
        let (a, b) = distance_asymmetry(unit(), off(0.3, 0.2, 0.1)).unwrap();
        let (_, _, oa) = distance_oracle(1.0, [0.3, 0.2, 0.1]);
        let (_, _, ob) = distance_oracle(1.0, [-0.3, -0.2, -0.1]);
        assert!((oa - ob).abs() < 1e-15);
        assert!((a - b).abs() < 1e-15);
        let t10 = ObserverScale::new(10.0).unwrap();
        let (a, b) = distance_asymmetry(t10, off(0.3, 0.2, 0.1)).unwrap();
        assert!((a - b).abs() < 1e-5);
    }

    #[test]
    fn halving_the_offset_shrinks_error_cubically() {
        let e1 = distance_h4(unit(), off(0.3, 0.2, 0.1)).unwrap() - 0.14f64.sqrt();
        let e2 = distance_h4(unit(), off(0.15, 0.1, 0.05)).unwrap() - 0.035f64.sqrt();
        assert_relative_eq!(e1, 1.469_221_524_827e-2, max_relative = 1e-9);
        assert_relative_eq!(e2, 1.682_410_258_649e-3, max_relative = 1e-8);
        let ratio = e1 / e2;
        assert!(ratio > 8.0 && ratio < 9.5, "ratio {ratio}");
    }

    #[test]
    fn axis_range_parsing() {
        let a: AxisRange = "-0.5:0.5:21".parse().unwrap();
        assert_eq!(a, AxisRange::new(-0.5, 0.5, 21).unwrap());
        assert_eq!(a.value(0), -0.5);
        assert_eq!(a.value(10), 0.0);
        assert_eq!(a.value(20), 0.5);
        let p: AxisRange = "0.25".parse().unwrap();
        assert_eq!((p.value(0), p.count), (0.25, 1));
        assert!("0.5:-0.5:3".parse::<AxisRange>().is_err());
        assert!("0:1:0".parse::<AxisRange>().is_err());
        assert!("0:1".parse::<AxisRange>().is_err());
        assert!("a:1:2".parse::<AxisRange>().is_err());
    }

    #[test]
    fn grid_cap_and_order() {
        let a = AxisRange::new(0.0, 1.0, 2).unwrap();
        let b = AxisRange::new(0.0, 2.0, 3).unwrap();
        let c = AxisRange::new(0.0, 3.0, 4).unwrap();
        let g = GridSpec::new(a, b, c).unwrap();
        assert_eq!(g.node_count(), 24);
        assert_eq!(g.node(0), off(0.0, 0.0, 0.0));
        assert_eq!(g.node(1), off(0.0, 0.0, 1.0));
        assert_eq!(g.node(4), off(0.0, 1.0, 0.0));
        assert_eq!(g.node(23), off(1.0, 2.0, 3.0));
        assert!(GridSpec::with_cap(a, b, c, 23).is_err());
        let big = AxisRange::new(0.0, 1.0, 101).unwrap();
        assert!(GridSpec::new(big, big, big).is_err());
    }

    #[test]
    fn single_node_at_origin() {
        let p = AxisRange::point(0.0).unwrap();
        let samples = sample_surface(unit(), &GridSpec::new(p, p, p).unwrap());
        assert_eq!(samples.len(), 1);
        let s = samples[0];
        assert_eq!((s.x0, s.s4, s.l), (Some(0.0), Some(1.0), Some(0.0)));
        assert_eq!(s.status, SampleStatus::Ok);
    }

    #[test]
    fn line_grid_reproduces_x1() {
        let grid = GridSpec::new(
            AxisRange::new(0.1, 0.9, 9).unwrap(),
            AxisRange::point(0.0).unwrap(),
            AxisRange::point(0.0).unwrap(),
        )
        .unwrap();
        for s in sample_surface(unit(), &grid) {
            assert_eq!(s.l, Some(s.offset.x1));
        }
    }

    #[test]
    fn cube_grid_residuals_and_skips() {
        let axis = AxisRange::new(-0.5, 0.5, 21).unwrap();
        let grid = GridSpec::new(axis, axis, axis).unwrap();
        let samples = sample_surface(unit(), &grid);
        assert_eq!(samples.len(), 9261);
        for (k, s) in samples.iter().enumerate() {
            assert_eq!(s.offset, grid.node(k));
            if let Some(x0) = s.x0 {
                assert!(simultaneity_residual(unit(), s.offset, x0).abs() <= 1e-10);
            }
            if s.status == SampleStatus::Ok {
                let l = s.l.unwrap();
                assert!((l * l + s.s4.unwrap().sqrt() - 1.0).abs() <= 1e-10);
            } else {
                assert_eq!(s.status, SampleStatus::OutsideCausalRegion);
                assert!(s.s4.unwrap() < 0.0);
            }
        }
        // corners at r^2 = 0.75 are inside the ball but outside the causal region
        assert_eq!(samples[0].status, SampleStatus::OutsideCausalRegion);
    }

    #[test]
    fn outside_ball_nodes_are_marked() {
        let grid = GridSpec::new(
            AxisRange::new(0.5, 1.5, 3).unwrap(),
            AxisRange::point(0.0).unwrap(),
            AxisRange::point(0.0).unwrap(),
        )
        .unwrap();
        let s = sample_surface(unit(), &grid);
        assert_eq!(s[0].status, SampleStatus::Ok);
        assert_eq!(s[1].status, SampleStatus::OutsideDomain);
        assert_eq!(s[2].status, SampleStatus::OutsideDomain);
        assert_eq!(s[2].x0, None);
    }

    #[test]
    fn flat_surface_is_euclidean() {
        let axis = AxisRange::new(-0.5, 0.5, 5).unwrap();
        let grid = GridSpec::new(axis, axis, axis).unwrap();
        for s in sample_flat_surface(unit(), &grid) {
            assert_eq!(s.x0, Some(0.0));
            let r = s.offset.norm_squared().sqrt();
            assert!((s.l.unwrap() - r).abs() < 1e-15);
        }
    }

    fn ball_offset(t: f64) -> impl Strategy<Value = SpatialOffset> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_filter("inside ball", |(a, b, c)| a * a + b * b + c * c < 0.999)
            .prop_map(move |(a, b, c)| off(a * t, b * t, c * t))
    }

    proptest! {
        #[test]
        fn root_residual_and_uniqueness(t in 0.05..20.0f64, d in ball_offset(1.0)) {
            let scale = ObserverScale::new(t).unwrap();
            let d = off(d.x1 * t, d.x2 * t, d.x3 * t);
            let x0 = simultaneity_x0(scale, d).unwrap();
            let (p, q) = cubic_coefficients(scale, d);
            prop_assert!(depressed_cubic_discriminant(p, q) < 0.0);
            prop_assert!(simultaneity_residual(scale, d, x0).abs() <= 1e-12 * (t * t * t).max(1.0));
        }

        #[test]
        fn plane_offsets_have_zero_time(t in 0.1..10.0f64, a in -0.7..0.7f64, b in -0.7..0.7f64, which in 0usize..3) {
            let mut c = [a * t, b * t, 0.0];
            c.rotate_right(which);
            let d = off(c[0], c[1], c[2]);
            prop_assert_eq!(simultaneity_x0(ObserverScale::new(t).unwrap(), d).unwrap(), 0.0);
        }

        #[test]
        fn axis_reduction(t in 0.1..10.0f64, frac in -0.999..0.999f64, which in 0usize..3) {
            let mut c = [frac * t, 0.0, 0.0];
            c.rotate_right(which);
            let l = distance_h4(ObserverScale::new(t).unwrap(), off(c[0], c[1], c[2])).unwrap();
            prop_assert!((l - (frac * t).abs()).abs() <= 1e-13 * t);
        }

        #[test]
        fn hyperboloid_equations_agree(d in ball_offset(0.55)) {
            let x0 = simultaneity_x0(unit(), d).unwrap();
            let s4 = s4_on_surface(unit(), d, x0);
            let plus = interval4_h4_orthonormal(Event4::new(1.0 + x0, d.x1, d.x2, d.x3));
            let minus = interval4_h4_orthonormal(Event4::new(1.0 - x0, -d.x1, -d.x2, -d.x3));
            prop_assert!((plus - minus).abs() <= 1e-11 * plus.abs().max(1e-3));
            prop_assert!((s4 - plus).abs() <= 1e-11 * plus.abs().max(1e-3));
        }
    }
}
