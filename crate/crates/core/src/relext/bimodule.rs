use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{kernel, Matrix, SparseVec, Subspace};
use crate::yd::{actions, analyze_endomorphisms, first_invertible, fixed_space, intertwiners, EndReport};
use std::sync::Arc;

/// A module over `H (x) H`, stored as the actions of `h_i (x) 1` and
/// `1 (x) h_i` on every basis element. An `H`-bimodule `X` becomes one via
/// `(a (x) b) x = a x S(b)`.
#[derive(Clone, Debug)]
pub struct BimoduleOverHH {
    algebra: Arc<HopfAlgebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl BimoduleOverHH {
    /// Checks that both sides are representations and that they commute on
    /// the generators.
    pub fn new(algebra: Arc<HopfAlgebra>, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let d = algebra.dim();
        if left.len() != d || right.len() != d {
            return Err(Error::Dimension(format!("{} / {} action matrices for dimension {d}", left.len(), right.len())));
        }
        let dim = left[0].nrows();
        if left.iter().chain(&right).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Dimension(format!("action matrices must be {dim}x{dim}")));
        }
        for (side, acts) in [("left", &left), ("right", &right)] {
            if let Some(w) = actions::module_failure(&algebra, acts) {
                return Err(Error::InvalidModule(format!("{side} action: {w}")));
            }
        }
        for &g in algebra.generators() {
            for &k in algebra.generators() {
                if left[g].mul(&right[k]) != right[k].mul(&left[g]) {
                    return Err(Error::InvalidModule(format!(
                        "left {} and right {} actions do not commute",
                        algebra.label(g),
                        algebra.label(k)
                    )));
                }
            }
        }
        Ok(BimoduleOverHH { algebra, dim, left, right })
    }

    /// `H` itself, with `(a (x) b) x = a x S(b)`.
    pub fn regular(algebra: Arc<HopfAlgebra>) -> Self {
        let h = &algebra;
        let left = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis_elem(i))).collect();
        let right = (0..h.dim()).map(|i| h.right_mult_matrix(h.antipode_of(i))).collect();
        let dim = h.dim();
        BimoduleOverHH { algebra, dim, left, right }
    }

    /// The unit object: both sides act by the counit.
    pub fn trivial(algebra: Arc<HopfAlgebra>) -> Self {
        let f = algebra.field();
        let acts: Vec<Matrix> = (0..algebra.dim()).map(|i| Matrix::identity(f, 1).scale(algebra.counit_of(i))).collect();
        BimoduleOverHH { dim: 1, left: acts.clone(), right: acts, algebra }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    fn generator_matrices(&self) -> Vec<&Matrix> {
        let gens = self.algebra.generators();
        gens.iter().map(|&g| &self.left[g]).chain(gens.iter().map(|&g| &self.right[g])).collect()
    }

    fn generator_counits(&self) -> Vec<crate::CycloNum> {
        let gens = self.algebra.generators();
        gens.iter().chain(gens).map(|&g| self.algebra.counit_of(g).clone()).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{} vs {}", self.algebra.name(), other.algebra.name())))
        }
    }

    /// Submodule on an invariant subspace, with its inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Result<(Self, Matrix)> {
        let incl = Matrix::from_cols(self.algebra.field(), self.dim, sub.basis());
        let left = actions::restrict(&self.left, sub)?;
        let right = actions::restrict(&self.right, sub)?;
        Ok((BimoduleOverHH { algebra: self.algebra.clone(), dim: sub.dim(), left, right }, incl))
    }

    /// Quotient by an invariant subspace, with the projection.
    pub fn quotient(&self, sub: &Subspace) -> Result<(Self, Matrix)> {
        let f = self.algebra.field();
        let gens = self.generator_matrices();
        if sub.basis().iter().any(|b| gens.iter().any(|g| !sub.contains(&g.mul_vec(b)))) {
            return Err(Error::NotASubspace("subspace is not a submodule".into()));
        }
        let dim = self.dim - sub.dim();
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| sub.quotient_coords(&SparseVec::unit(j, f))).collect();
        let proj = Matrix::from_cols(f, dim, &cols);
        let (left, right) = (actions::quotient(&self.left, sub), actions::quotient(&self.right, sub));
        Ok((BimoduleOverHH { algebra: self.algebra.clone(), dim, left, right }, proj))
    }

    /// `H (x) H` acts through the coproduct of each factor.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let h = &self.algebra;
        let both = |a: &[Matrix], b: &[Matrix]| -> Vec<Matrix> {
            (0..h.dim())
                .map(|i| {
                    let mut out = Matrix::zeros(h.field(), self.dim * other.dim, self.dim * other.dim);
                    for (ab, c) in h.coproduct(i).iter() {
                        out = out.add(&a[ab / h.dim()].kron(&b[ab % h.dim()]).scale(c));
                    }
                    out
                })
                .collect()
        };
        Ok(BimoduleOverHH {
            algebra: h.clone(),
            dim: self.dim * other.dim,
            left: both(&self.left, &other.left),
            right: both(&self.right, &other.right),
        })
    }

    pub fn tensor_power(&self, n: usize) -> Self {
        (1..n).fold(if n == 0 { Self::trivial(self.algebra.clone()) } else { self.clone() }, |acc, _| {
            acc.tensor(self).expect("same algebra")
        })
    }

    /// `f -> f o S(-)` on each side.
    pub fn dual(&self) -> Self {
        let h = &self.algebra;
        let side = |acts: &[Matrix]| -> Vec<Matrix> {
            (0..h.dim())
                .map(|i| {
                    let mut out = Matrix::zeros(h.field(), self.dim, self.dim);
                    for (j, c) in h.antipode_of(i).iter() {
                        out = out.add(&acts[j].scale(c));
                    }
                    out.transpose()
                })
                .collect()
        };
        BimoduleOverHH { algebra: h.clone(), dim: self.dim, left: side(&self.left), right: side(&self.right) }
    }

    pub fn hom_basis(&self, target: &Self) -> Result<Vec<Matrix>> {
        self.check_same(target)?;
        if self.dim == 0 || target.dim == 0 {
            return Ok(Vec::new());
        }
        Ok(intertwiners(self.algebra.field(), &self.generator_matrices(), &target.generator_matrices(), self.dim, target.dim))
    }

    pub fn hom_dim(&self, target: &Self) -> Result<usize> {
        Ok(self.hom_basis(target)?.len())
    }

    pub fn invariants(&self) -> Subspace {
        let gens: Vec<Matrix> = self.generator_matrices().into_iter().cloned().collect();
        fixed_space(self.algebra.field(), self.dim, &gens, &self.generator_counits())
    }

    pub fn is_morphism(&self, target: &Self, map: &Matrix) -> bool {
        map.shape() == (target.dim, self.dim)
            && self.generator_matrices().iter().zip(target.generator_matrices()).all(|(a, b)| b.mul(map) == map.mul(a))
    }

    pub fn find_isomorphism(&self, target: &Self) -> Result<Option<Matrix>> {
        if self.dim != target.dim {
            return Ok(None);
        }
        if self.dim == 0 {
            return Ok(Some(Matrix::zeros(self.algebra.field(), 0, 0)));
        }
        Ok(first_invertible(self.algebra.field(), &self.hom_basis(target)?, self.dim))
    }

    pub fn end_report(&self) -> EndReport {
        let end = self.hom_basis(self).unwrap_or_default();
        analyze_endomorphisms(self.algebra.field(), &end, self.dim)
    }

    /// Kernel of a morphism to another bimodule, as a submodule.
    pub fn kernel_of(&self, map: &Matrix) -> Result<(Self, Matrix)> {
        self.submodule(&Subspace::span(self.algebra.field(), self.dim, kernel(map)))
    }

    /// The subspace `x H` for a central `x` of `H`, as a submodule of the
    /// regular bimodule.
    pub(crate) fn ideal_of(&self, x: &SparseVec) -> Result<(Self, Matrix)> {
        let h = &self.algebra;
        let span = Subspace::span(h.field(), h.dim(), (0..h.dim()).map(|i| h.mul(&h.basis_elem(i), x)).collect());
        self.submodule(&span)
    }
}
