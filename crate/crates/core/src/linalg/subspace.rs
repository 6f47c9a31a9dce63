use super::echelon::{echelonize, kernel_of_columns, PivotOrder};
use super::matrix::Matrix;
use super::sparse::{Accum, SparseVec};
use crate::cyclo::CycloField;
use rayon::prelude::*;

/// A subspace of `K^n` held in canonical echelon form: every basis vector is
/// 1 at its last nonzero coordinate (its pivot), all other basis vectors
/// vanish there, and vectors are sorted by pivot. Two subspaces are equal
/// exactly when their stored bases are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: &'static CycloField,
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: &'static CycloField, ambient: usize, vecs: Vec<SparseVec>) -> Self {
        let e = echelonize(vecs, ambient, ambient, PivotOrder::Reverse);
        Subspace { field, ambient, basis: e.rows, pivots: e.pivots }
    }

    /// Wraps vectors already in canonical form (e.g. a kernel read off an RREF).
    pub fn from_canonical(field: &'static CycloField, ambient: usize, basis: Vec<SparseVec>) -> Self {
        let pivots: Vec<usize> = basis.iter().map(|v| v.max_index().expect("nonzero basis vector")).collect();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(basis.iter().all(|v| v.last().unwrap().1.is_one()));
        Subspace { field, ambient, basis, pivots }
    }

    pub fn zero(field: &'static CycloField, ambient: usize) -> Self {
        Subspace { field, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(field: &'static CycloField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| SparseVec::unit(i, field)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone())
    }

    /// `v` minus its projection along the basis onto the pivot coordinates.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if let Some(c) = v.get(p) {
                out.sub_scaled(c, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_sorted(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(k, &p)| v.get(p).map(|c| (k as u32, c.clone())))
                .collect(),
        ))
    }

    /// Non-pivot coordinates; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_p[i]).collect()
    }

    /// Coordinates of the class of `v` in `ambient / self`, relative to the
    /// complement basis of `complement_indices`.
    pub fn quotient_coords(&self, v: &SparseVec) -> SparseVec {
        let r = self.reduce(v);
        let comp = self.complement_indices();
        let mut pos = vec![usize::MAX; self.ambient];
        for (k, &i) in comp.iter().enumerate() {
            pos[i] = k;
        }
        r.remap(|i| pos[i])
    }

    pub fn combine(&self, coeffs: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (k, c) in coeffs.iter() {
            acc.add_vec(c, &self.basis[k]);
        }
        acc.finish()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, v)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        // functionals vanishing on `other`, evaluated on our basis
        let ann = other.annihilator();
        let images: Vec<SparseVec> = self
            .basis
            .par_iter()
            .map(|b| {
                SparseVec::from_sorted(
                    ann.iter()
                        .enumerate()
                        .filter_map(|(k, f)| {
                            let d = f.dot(b, self.field);
                            (!d.is_zero()).then_some((k as u32, d))
                        })
                        .collect(),
                )
            })
            .collect();
        let ker = kernel_of_columns(&images, self.field);
        Subspace::span(self.field, self.ambient, ker.iter().map(|c| self.combine(c)).collect())
    }

    /// Basis of the linear functionals (as coordinate vectors) vanishing on the subspace.
    pub fn annihilator(&self) -> Vec<SparseVec> {
        super::echelon::kernel(&self.basis_matrix())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

/// Canonical subspace from arbitrary spanning vectors with a rank check helper.
pub fn span_dim(field: &'static CycloField, ambient: usize, vecs: Vec<SparseVec>) -> usize {
    Subspace::span(field, ambient, vecs).dim()
}

pub fn unit_vectors(field: &'static CycloField, idx: impl IntoIterator<Item = usize>) -> Vec<SparseVec> {
    idx.into_iter().map(|i| SparseVec::unit(i, field)).collect()
}

