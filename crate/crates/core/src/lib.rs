//! Fractal supports of Z₂-valued discrete harmonic functions on ℤ^d.
//!
//! The crate builds the sumset fractals X_k, X_∞ and X₊, checks the
//! set-level predicates (Z₂-harmonicity, the cross condition,
//! supportiveness), cross-validates constructions through GF(2) Laurent
//! polynomial arithmetic, and measures box-counting dimension, minimum
//! supports of pinned harmonic functions and the behaviour of supportive
//! walks.

pub mod cli;
pub mod dimension;
pub mod error;
pub mod format;
pub mod fractal;
pub mod gf2;
pub mod lattice;
pub mod minweight;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use lattice::{LatticeBox, LatticePoint, PointSet};
