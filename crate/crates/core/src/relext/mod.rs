//! Relative Ext: allowable sequences, the relatively projective bar
//! resolution, and the passage from sequences to Davydov-Yetter cocycles.

mod bar;
mod bimodule;
mod blocks;
mod cover;
mod formula;
mod lift;
mod ses;

pub use bar::{bar_differential, bar_module, bar_step, BarStep};
pub use bimodule::BimoduleOverHH;
pub use blocks::{blocks_and_principal, bk_simples, center, facto_dim_formula, uq_simples, Blocks};
pub use cover::Cover;
pub use formula::{dim_formula, dim_formula_with_coefficients, DimFormula, Term, Via};
pub use lift::{gamma_inverse, lift_ambiguity, lift_from_eta0, lift_ses_to_bar_cocycle, sequence_to_dy, Lift};
pub use ses::{is_allowable, AllowableSES};

#[cfg(test)]
mod tests;
