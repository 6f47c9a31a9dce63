//! Davydov-Yetter cochain complexes of `H`-mod: the centralizer complex for
//! trivial coefficients and `Hom_H(V, (H^{(x) n} (x) W)_ad)` in general.

mod cochain;
mod complex;

pub use cochain::Cochain;
pub use complex::{ad_action, centralizer_basis, compose, cup, yoneda_product, CohomologyReport, DyComplex, Mode};
