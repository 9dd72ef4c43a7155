//! Isomorph-free finite model enumeration.
//!
//! A theory is parsed and grounded over `{0..n-1}`; a depth-first search
//! assigns cells with unit propagation, and every cube reached is reduced
//! to a canonical key through a vertex-colored graph. Cubes whose key has
//! already been seen are not extended, so each isomorphism class of models
//! is emitted once.

pub mod canon;
pub mod error;
pub mod filter;
pub mod fol;
pub mod graph;
pub mod ground;
pub mod interp;
pub mod kernel;
pub mod search;
pub mod store;

pub use error::{Error, Result};
