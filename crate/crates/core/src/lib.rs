//! Exact positivity invariants of toric divisor classes.
//!
//! A class on a complete simplicial projective fan is a rational value per
//! ray (a piecewise-linear function modulo linear forms). From it this crate
//! derives its Newton polytope, Zariski decomposition, volume, positive
//! intersection products, pairings against arbitrary classes, slopes and
//! restricted volumes, all in exact rational arithmetic. The [`verifier`]
//! module turns these numbers into pass/fail checks of the differentiability,
//! orthogonality, Khovanskii–Teissier, Diskant and restricted-volume identities
//! on fixed and seeded random instances.

pub mod class;
pub mod fan;
mod hull;
pub mod linalg;
pub mod lp;
pub mod mixed;
pub mod polytope;
pub mod positivity;
pub mod rational;
pub mod verifier;

pub use class::{ClassError, NefClass, ToricClass};
pub use fan::{Fan, FanError};
pub use mixed::mixed_volume;
pub use num_bigint::BigInt;
pub use polytope::{lattice, GeometryError, HalfSpace, LatticeVector, LinearForm, Polytope};
pub use positivity::{PositivityError, ZariskiDecomposition};
pub use rational::Rational;
