//! Exact computations with Katalan functions, K-k-Schur functions, the affine
//! symmetric group and the K-theoretic Peterson map.

pub mod affine;
pub mod katalan;
pub mod kschur;
pub mod peterson;
pub mod symfunc;
pub mod verify;

pub use symfunc::{HMonomial, Partition, SymFunc};
