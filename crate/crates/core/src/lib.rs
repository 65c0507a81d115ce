//! Exact computations with cluster scattering diagrams.

pub mod atlas;
pub mod error;
pub mod folding;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod scattering;
pub mod suite;
pub mod theta;

pub use error::{Error, Result};
