//! Exact truncated symmetric-function algebra, Fock-space operators on it,
//! and the one-outer-brane amplitudes of the resolved conifold built from
//! topological-vertex data.

pub mod characters;
pub mod error;
pub mod operators;
pub mod partitions;
pub mod scalars;
pub mod symfun;
pub mod vertex;

pub use error::Error;
pub use partitions::Partition;
pub use scalars::{GaussianRational, RationalFunctionZ, Scalar};
pub use symfun::{Basis, SpecRule, SymFunc};
