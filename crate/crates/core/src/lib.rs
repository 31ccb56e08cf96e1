//! Computational toolkit for generalized Harish-Chandra modules.
//!
//! - [`exact`]: rationals, linear algebra over Q, simplex feasibility and
//!   cone membership/intersection certificates.
//! - [`rootsys`]: root systems, heights, integrality and Weyl dimensions.
//! - [`shadow`]: shadow decompositions of root subalgebras, the parabolic
//!   `p_M`, Fernando's formula and truncated support shapes.
//! - [`fk`]: Levi decompositions, singular weights, finite-type criteria for
//!   root subalgebras (cone test in type A, solvable test), primality, and
//!   subsystem type recognition.
//! - [`mathieu`]: bounded-multiplicity weights, equivalence, fiber
//!   irreducibility and degrees of coherent families for `sp(2n)`, and the
//!   non-regular-integral `sl(n+1)` degree.
//! - [`principal`]: principal `sl(2)` spectral data, exponents, partition
//!   functions and k-type multiplicities of `A¹(λ)`.
//! - [`cli`]: JSON request/response front end used by the `ghc` binary.

pub mod cli;
pub mod error;
pub mod exact;
pub mod fk;
pub mod mathieu;
pub mod principal;
pub mod rootsys;
mod rootset;
pub mod shadow;

pub use error::{Error, Result};
pub use exact::{QVector, Rational};
pub use rootset::RootSet;
pub use rootsys::{CartanType, RootSystem, Series};
