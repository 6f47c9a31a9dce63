use super::algebra::HopfAlgebra;
use crate::cyclo::CycloNum;
use crate::linalg::{Matrix, SparseVec};

/// `(H*)^op` in the dual basis `h^0, ..., h^{d-1}`:
/// product `(phi * psi)(x) = (psi (x) phi)(Delta x)`, coproduct
/// `Delta(phi)(x (x) y) = phi(xy)`, unit `epsilon`, counit `phi -> phi(1)`
/// and antipode `phi -> phi o S^-1`.
pub fn dual_op(h: &HopfAlgebra) -> HopfAlgebra {
    let f = h.field();
    let d = h.dim();
    // (h^a * h^b)(h_x) = Delta(h_x)[b, a]
    let mult = Matrix::from_triplets(
        f,
        d,
        d * d,
        h.comult().triplets().map(|(ba, x, c)| (x, (ba % d) * d + ba / d, c.clone())),
    );
    let comult = h.mult().transpose();
    let unit = h.counit().transpose();
    let counit = h.unit().transpose();
    let antipode = h.antipode_inv().transpose();
    let labels = h.labels().iter().map(|l| format!("({l})*")).collect();
    HopfAlgebra::new(format!("({})*op", h.name()), f, labels, unit, counit, mult, comult, antipode)
        .expect("dual of a Hopf algebra has invertible antipode")
}

/// `phi(x)` for `phi` in dual coordinates and `x` in `H`.
pub fn pair(phi: &SparseVec, x: &SparseVec, h: &HopfAlgebra) -> CycloNum {
    phi.dot(x, h.field())
}

/// Expresses the functional `x -> value(x)` in dual coordinates.
pub fn functional(h: &HopfAlgebra, value: impl Fn(usize) -> CycloNum) -> SparseVec {
    SparseVec::from_unsorted((0..h.dim()).map(|i| (i, value(i))).collect())
}

/// Matrix-coefficient functional `x -> rho(x)[r][c]` of a representation
/// given on every basis element.
pub fn matrix_coefficient(h: &HopfAlgebra, rho: &[Matrix], r: usize, c: usize) -> SparseVec {
    functional(h, |i| rho[i].get(r, c))
}
