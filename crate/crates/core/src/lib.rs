//! Exact verification kernel for the five-vertex lattice model, skew
//! Grothendieck polynomials and Grassmannian pushforward identities.

pub mod algebra;
pub mod compare;
pub mod error;
pub mod grothendieck;
pub mod identities;
pub mod lattice;
pub mod partitions;
pub mod pushforward;

pub use error::{Error, Result};
