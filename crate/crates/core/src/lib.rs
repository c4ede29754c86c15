//! Exact computations with the fixed-point data of circle actions on compact
//! symplectic manifolds with isolated fixed points.
//!
//! The crate covers localization integrals over the fixed set, the moment
//! constraints on fixed-point counts, the equivariant cohomology ring of the
//! `(P^1)^n` model, the forced restriction data of degree-2 generators, and
//! the integral cohomology of symplectic reductions at a regular level.
//!
//! Everything is exact: rationals are arbitrary precision, and no floating
//! point is used anywhere.
//!
//! With the default `parallel` feature, batch evaluations (candidate search,
//! per-degree quotient slices, rank sweeps) run on rayon. Without it they run
//! sequentially; results are identical either way.

pub mod error;
pub mod exact_algebra;
pub mod fixed_point_data;
pub mod hypercube;
pub mod localization;
pub mod par;
pub mod reduced;
pub mod theorem2;

pub use error::{Error, Result};
pub use exact_algebra::{IntMatrix, RatFunc, Rational, SmithForm, UniPoly};
pub use fixed_point_data::{CountVector, FixedPoint, FixedPointData};
pub use par::Execution;
