//! Exact-arithmetic realization of the bilocal Lie algebras u(∞,∞) and
//! sp(∞,ℝ) on truncated free-field Fock spaces.
//!
//! The crate is organized bottom-up:
//!
//! - [`fock`]: occupation-number basis, creation/annihilation operators,
//!   inner product.
//! - [`algebra`]: the bilocal generators, their abstract structure
//!   constants, Hamiltonians and the charge operator.
//! - [`highest_weight`]: sector ground states, norm recursions, determinant
//!   operators and the spectrum classifier.
//! - [`casimir`]: quadratic Casimirs of the compact and noncompact
//!   subalgebras and the unitarity bound.
//! - [`young_gauge`]: Young diagrams and the sector/gauge-irrep dictionary
//!   for U(N) and O(N).
//! - [`mode_spectrum`]: spherical-harmonic mode counting and the conformal
//!   one-particle spectrum.
//! - [`verify`]: the invariant suite driven by the command line.
//!
//! All coefficients are [`Rational`]s; nothing in here touches floating
//! point.

pub mod algebra;
pub mod casimir;
mod error;
pub mod fock;
pub mod highest_weight;
pub mod linalg;
pub mod mode_spectrum;
pub mod rational;
pub mod report;
pub mod verify;
pub mod young_gauge;

pub use error::{Error, Result};
pub use rational::Rational;
