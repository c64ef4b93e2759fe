//! Exact symbolic workbench for second-order differential operators in two
//! variables: commuting systems, their quadratic symmetry algebras, and the
//! finite families of eigenfunctions built from them.

pub mod anchors;
pub mod check;
pub mod diffop;
pub mod error;
pub mod ladders;
pub mod linalg;
pub mod ratfield;
pub mod report;
pub mod suite;
pub mod systems;

pub use error::{Error, Result};
