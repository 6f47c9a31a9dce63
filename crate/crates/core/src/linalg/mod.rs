//! Exact linear algebra over `Q(zeta_n)`: sparse vectors and matrices,
//! elimination, kernels, solving and subspace arithmetic.

pub mod dense;
mod echelon;
mod kernel;
mod matrix;
mod sparse;
mod subspace;

pub use echelon::{
    echelonize, kernel, kernel_from_rref, kernel_of_columns, rank, rref, solve, solve_vec, solve_with, Echelon,
    PivotOrder,
};
pub use kernel::{common_kernel, common_kernel_in, LinearOp};
pub use matrix::Matrix;
pub use sparse::{Accum, SparseVec};
pub use subspace::{span_dim, unit_vectors, Subspace};

#[cfg(test)]
mod tests;
