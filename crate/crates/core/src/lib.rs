//! Folding of Dynkin quivers along admissible automorphisms, with exchange
//! graphs of hearts, stability cells and braid-group relations.

pub mod artin;
pub mod cells;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod tilt;

pub use error::{Error, ErrorCategory, Result};
