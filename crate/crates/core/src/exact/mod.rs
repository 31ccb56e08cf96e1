//! Exact rational arithmetic, dense linear algebra over Q and rational cone
//! geometry.
//!
//! Nothing in this crate touches floating point. Cone questions are reduced
//! to feasibility of `A x = b, x >= 0`, decided by the phase-one simplex
//! method in [`lp`] with Bland's rule.

pub mod cone;
pub mod linalg;
pub mod lp;
mod rational;
mod vector;

pub use cone::{cone_member, cones_intersect_trivially, ConeIntersection, ConeWitness};
pub use lp::{lp_feasible, Feasibility};
pub use rational::{
    format_rational, int, is_half_odd, is_integer, parse_rational, rat, to_i64, Rational,
};
pub use vector::QVector;
