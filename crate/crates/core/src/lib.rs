//! Cubical higher Chow cycles over a point and over the line: exact
//! boundaries and admissibility, symbolic currents, and numerical
//! Abel-Jacobi / regulator values.

pub mod cli;
pub mod currents;
pub mod cycle;
pub mod error;
pub mod exact;
pub mod regulator;
pub mod spec_doc;
pub mod special;
pub mod tracker;

pub use error::{Error, Result};
