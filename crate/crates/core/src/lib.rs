//! Toric geometry of hyperconifold singularities and their resolutions.

pub mod classify;
pub mod error;
pub mod fan;
pub mod intersect;
pub mod lattice;
pub mod mirror;
pub mod resolve;
pub mod transition;

pub use error::{Error, ErrorKind, Result};
