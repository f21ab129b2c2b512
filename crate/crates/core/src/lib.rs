//! Distances, velocities and frame changes in the linear Finsler space H4.
//!
//! H4 is the four-dimensional affine space whose interval, in the isotropic
//! basis, is the fourth root of the product of the four coordinates
//! (the Berwald-Moor metric). This crate works in natural units (`c = 1`)
//! and provides:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`algebra`] | isotropic / orthonormal-analog bases, the integer matrix `A`, cone classification |
//! | [`metric`] | every interval function: H4 in both bases, the exponent family, H3, plane, Minkowski |
//! | [`minkowski`] | special-relativity reference constructions used as a comparison oracle |
//! | [`cubic`] | the depressed-cubic solver behind the simultaneity surface |
//! | [`simultaneity`] | relative-simultaneity surface, the 3-distance `l(T, x)`, grid sampling |
//! | [`kinematics`] | the `W` form, velocity modulus, interval from velocity |
//! | [`transforms`] | the symmetry group `G1(H4)`, velocity addition, boost matrices |
//! | [`mesh`] | CSV / JSON Lines export of sampled surfaces |
//! | [`cli`] | the `h4` command-line front end |
//!
//! Every operation is a pure function over `Copy` values and may be called
//! from any number of threads.
//!
//! ```
//! use berwald_moor::kinematics::{velocity_modulus_h4, Velocity3};
//!
//! let v = Velocity3::new(0.6, 0.0, 0.0);
//! assert_eq!(velocity_modulus_h4(v).unwrap(), 0.6);
//! ```

#![forbid(unsafe_code)]
// `!(a < b)` is used on purpose so NaN falls on the rejecting side.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::result_large_err)]

pub mod algebra;
pub mod cli;
mod compensated;
pub mod cubic;
mod error;
pub mod kinematics;
pub mod mesh;
pub mod metric;
pub mod minkowski;
pub mod simultaneity;
pub mod transforms;

pub use algebra::{ConeClass, Event4, IsotropicEvent4};
pub use error::{Error, Result};
pub use kinematics::Velocity3;
pub use simultaneity::{GridSpec, ObserverScale, SpatialOffset, SurfaceSample};
pub use transforms::{FrameVelocity, GroupElement, Matrix4};
