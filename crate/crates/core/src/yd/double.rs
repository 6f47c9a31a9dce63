use crate::hopf::{dual_op, HopfAlgebra};
use std::sync::Arc;

/// The two halves of the Drinfeld double of `H`: `H` itself and `(H*)^op`.
/// A Yetter-Drinfeld module is a module over both, subject to the exchange
/// relation; its `H`-coaction is the action of the dual half.
pub struct Double {
    algebra: HopfAlgebra,
    dual: HopfAlgebra,
}

impl Double {
    pub fn new(algebra: HopfAlgebra) -> Arc<Double> {
        let dual = dual_op(&algebra);
        Arc::new(Double { algebra, dual })
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        &self.algebra
    }

    pub fn dual(&self) -> &HopfAlgebra {
        &self.dual
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &'static crate::CycloField {
        self.algebra.field()
    }
}

impl std::fmt::Debug for Double {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D({})", self.algebra.name())
    }
}
