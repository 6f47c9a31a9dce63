use super::module::YdModule;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{common_kernel, rank, Accum, LinearOp, Matrix, SparseVec, Subspace};

/// Matrices `X` (`m_W x m_V`) with `B_k X = X A_k` for every pair of
/// corresponding generator matrices. Unknowns are flattened row-major.
pub fn intertwiners(field: &'static CycloField, src: &[&Matrix], tgt: &[&Matrix], m_v: usize, m_w: usize) -> Vec<Matrix> {
    let tgt_cols: Vec<Matrix> = tgt.iter().map(|b| b.transpose()).collect();
    let ops: Vec<Box<LinearOp<'_>>> = src
        .iter()
        .zip(&tgt_cols)
        .map(|(a, bt)| {
            let op: Box<LinearOp<'_>> = Box::new(move |x: &SparseVec| {
                let mut acc = Accum::new();
                for (k, c) in x.iter() {
                    let (i, j) = (k / m_v, k % m_v);
                    // (B X)[r, j] += B[r, i] c
                    for (r, b) in bt.row(i).iter() {
                        acc.add_owned(r * m_v + j, b * c);
                    }
                    // (X A)[i, l] -= c A[j, l]
                    for (l, a) in a.row(j).iter() {
                        acc.add_owned(i * m_v + l, -(c * a));
                    }
                }
                acc.finish()
            });
            op
        })
        .collect();
    let refs: Vec<&LinearOp<'_>> = ops.iter().map(|b| b.as_ref()).collect();
    common_kernel(field, m_v * m_w, &refs)
        .basis()
        .iter()
        .map(|v| Matrix::unflatten(field, m_w, m_v, v))
        .collect()
}

/// Common fixed space of `A_k - eps_k I`.
pub fn fixed_space(field: &'static CycloField, dim: usize, gens: &[Matrix], counits: &[CycloNum]) -> Subspace {
    let cols: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let ops: Vec<Box<LinearOp<'_>>> = cols
        .iter()
        .zip(counits)
        .map(|(at, e)| {
            let op: Box<LinearOp<'_>> = Box::new(move |v: &SparseVec| {
                let mut acc = Accum::new();
                for (j, c) in v.iter() {
                    acc.add_vec(c, at.row(j));
                    acc.add_owned(j, -(c * e));
                }
                acc.finish()
            });
            op
        })
        .collect();
    let refs: Vec<&LinearOp<'_>> = ops.iter().map(|b| b.as_ref()).collect();
    common_kernel(field, dim, &refs)
}

impl YdModule {
    /// Basis of `Hom_{D(H)}(self, target)`: maps that are `H`-linear and
    /// `H`-colinear.
    pub fn hom_basis(&self, target: &YdModule) -> Result<Vec<Matrix>> {
        if !std::sync::Arc::ptr_eq(self.double(), target.double()) {
            return Err(Error::AlgebraMismatch(format!("{:?} vs {:?}", self.double(), target.double())));
        }
        Ok(intertwiners(self.field(), &self.generator_matrices(), &target.generator_matrices(), self.dim(), target.dim()))
    }

    pub fn hom_dim(&self, target: &YdModule) -> Result<usize> {
        Ok(self.hom_basis(target)?.len())
    }

    /// `Inv(V) = Hom(1, V)`: vectors fixed by the action (up to the counit)
    /// with coaction `1 (x) v`.
    pub fn invariants(&self) -> Subspace {
        let gens: Vec<Matrix> = self.generator_matrices().into_iter().cloned().collect();
        fixed_space(self.field(), self.dim(), &gens, &self.generator_counits())
    }

    pub fn invariants_dim(&self) -> usize {
        self.invariants().dim()
    }

    /// Invariants of `self (x) other` from generator matrices only.
    pub fn tensor_invariants(&self, other: &YdModule) -> Result<Subspace> {
        let gens = self.tensor_generator_matrices(other)?;
        Ok(fixed_space(self.field(), self.dim() * other.dim(), &gens, &self.generator_counits()))
    }

    /// Whether `map` (`m_W x m_V`) is a module and comodule map.
    pub fn is_morphism(&self, target: &YdModule, map: &Matrix) -> bool {
        map.shape() == (target.dim(), self.dim())
            && self
                .generator_matrices()
                .iter()
                .zip(target.generator_matrices())
                .all(|(a, b)| b.mul(map) == map.mul(a))
    }

    /// An isomorphism `self -> target`, searched among deterministic
    /// combinations of the Hom basis.
    pub fn find_isomorphism(&self, target: &YdModule) -> Result<Option<Matrix>> {
        if self.dim() != target.dim() {
            return Ok(None);
        }
        let basis = self.hom_basis(target)?;
        Ok(first_invertible(self.field(), &basis, self.dim()))
    }
}

/// Tries each basis element, then pseudo-random small-integer combinations.
/// A `None` means no invertible combination was found, which is conclusive
/// only when the span has no invertible elements at all.
pub(crate) fn first_invertible(field: &'static CycloField, basis: &[Matrix], n: usize) -> Option<Matrix> {
    let invertible = |m: &Matrix| rank(m) == n;
    if let Some(b) = basis.iter().find(|b| invertible(b)) {
        return Some(b.clone());
    }
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..32 {
        let mut acc = Matrix::zeros(field, n, n);
        for b in basis {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = ((state >> 33) % 19) as i64 - 9;
            acc = acc.add(&b.scale(&CycloNum::from_int(field, c)));
        }
        if invertible(&acc) {
            return Some(acc);
        }
    }
    None
}
