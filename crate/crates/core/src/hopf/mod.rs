//! Hopf algebras as structure tensors: storage, axiom validation, the
//! shipped examples, duals, cointegrals and the text file format.

mod algebra;
pub mod builders;
mod dual;
mod integral;
pub mod io;
mod validate;

pub use algebra::{format_terms, HopfAlgebra};
pub use dual::{dual_op, functional, matrix_coefficient, pair};
pub use integral::{cointegral, fourier_idempotents, grouplike_fourier_idempotents};
pub use validate::{validate_hopf, AxiomCheck, ValidationReport};
