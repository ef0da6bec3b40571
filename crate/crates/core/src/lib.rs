// Cones cache their inequalities in a cell; equality, ordering and hashing
// look at the rays only, so cones are sound map keys.
#![allow(clippy::mutable_key_type)]

pub mod error;
pub mod linalg;
pub mod polyhedra;
pub mod cobordism;
pub mod factorize;
pub mod construct;
pub mod json;
pub mod cli;

pub use error::{Error, Result};
