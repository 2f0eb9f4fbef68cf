//! Mod-2 Poincaré duality for planar polygon spaces with a single gee.
//!
//! - [`combinatorics`]: binomial parity, the dominance order on index
//!   sets, θ block counts, and the suffix-bounded tuples `S_k`.
//! - [`length`]: exact length vectors, genericity, genetic codes, gee
//!   parameters and subgee enumeration.
//! - [`duality`]: the closed formula for φ on top-degree monomials, the
//!   k = 3 table, and the disjoint-subgee count.
//! - [`relations`]: the top-degree relation matrix over GF(2) and its
//!   kernel, an independent route to φ.

pub mod combinatorics;
pub mod duality;
pub mod error;
pub mod length;
pub mod relations;

pub use combinatorics::{IndexSet, ThetaVector};
pub use error::{Error, Result};
pub use length::{GeeParams, GeneticCode, LengthVector, Rational};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
