//! Common kernels of families of linear maps, computed incrementally: each
//! constraint is applied only to a basis of the kernel of the previous ones.

use super::echelon::kernel_of_columns;
use super::sparse::{Accum, SparseVec};
use super::subspace::Subspace;
use crate::cyclo::CycloField;
use rayon::prelude::*;

pub type LinearOp<'a> = dyn Fn(&SparseVec) -> SparseVec + Sync + 'a;

/// Intersection of the kernels of `ops`, starting inside `start`.
pub fn common_kernel_in(field: &'static CycloField, start: &Subspace, ops: &[&LinearOp<'_>]) -> Subspace {
    let ambient = start.ambient_dim();
    let mut basis: Vec<SparseVec> = start.basis().to_vec();
    for op in ops {
        if basis.is_empty() {
            break;
        }
        let images: Vec<SparseVec> = basis.par_iter().map(op).collect();
        if images.iter().all(SparseVec::is_zero) {
            continue;
        }
        let coeffs = kernel_of_columns(&images, field);
        basis = coeffs
            .par_iter()
            .map(|c| {
                if c.nnz() == 1 {
                    let (k, x) = c.first().unwrap();
                    return basis[k].scale(x);
                }
                let mut acc = Accum::new();
                for (k, x) in c.iter() {
                    acc.add_vec(x, &basis[k]);
                }
                acc.finish()
            })
            .collect();
    }
    Subspace::span(field, ambient, basis)
}

pub fn common_kernel(field: &'static CycloField, ambient: usize, ops: &[&LinearOp<'_>]) -> Subspace {
    common_kernel_in(field, &Subspace::full(field, ambient), ops)
}
