//! Yetter-Drinfeld modules, i.e. modules over the Drinfeld double, carried
//! as an action of `H` together with an action of `(H*)^op`.

pub(crate) mod actions;
mod double;
mod hom;
mod module;
mod summand;

pub use double::Double;
pub use hom::{fixed_space, intertwiners};
pub use module::YdModule;
pub use summand::{CoverReport, EndReport, Verdict};
pub(crate) use summand::analyze_endomorphisms;
pub(crate) use hom::first_invertible;

#[cfg(test)]
mod tests;
