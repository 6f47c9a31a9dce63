//! Exact Davydov-Yetter cohomology of finite-dimensional Hopf algebras.

pub mod cyclo;
pub mod dy;
pub mod error;
pub mod examples;
pub mod hopf;
pub mod yd;
pub mod linalg;
pub mod relext;

pub use cyclo::{CycloField, CycloNum, Rat};
pub use error::{Error, Result};
pub use linalg::{Matrix, SparseVec, Subspace};
