//! Concrete modules and sequences for the shipped algebras.

mod bar_ui;
mod bk;
mod taft;

pub use bar_ui::BarUi;
pub use bk::BkExample;
pub use taft::TaftExample;
pub use crate::relext::Cover;

use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, SparseVec};
use crate::yd::actions;

/// Representation from the matrices of labelled basis elements that
/// generate the algebra.
pub fn representation(h: &HopfAlgebra, dim: usize, gens: &[(&str, Matrix)]) -> Result<Vec<Matrix>> {
    let elems: Vec<_> = gens
        .iter()
        .map(|(l, m)| (crate::hopf::builders::element(h, &[(l, crate::CycloNum::one(h.field()))]), m.clone()))
        .collect();
    actions::extend(h, dim, &elems)
}

/// `a_1 (x) ... (x) a_n` in `H^{(x) n}`.
pub fn tensor_of(h: &HopfAlgebra, factors: &[&SparseVec]) -> SparseVec {
    let mut acc = SparseVec::single(0, crate::CycloNum::one(h.field()));
    for x in factors {
        let mut next = crate::linalg::Accum::new();
        for (i, a) in acc.iter() {
            for (j, b) in x.iter() {
                next.add_owned(i * h.dim() + j, a * b);
            }
        }
        acc = next.finish();
    }
    acc
}

/// `x_j (x) x_i g` in `B_k (x) B_k` (indices from 1), a 2-cocycle for `i <= j`.
pub fn bk_cocycle(h: &HopfAlgebra, i: usize, j: usize) -> SparseVec {
    let half = h.dim() / 2;
    let xj = h.basis_elem(1 << (j - 1));
    let xig = h.basis_elem(half + (1 << (i - 1)));
    tensor_of(h, &[&xj, &xig])
}
