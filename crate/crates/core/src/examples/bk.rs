use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::hopf::builders::{bk, element};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, SparseVec};
use crate::relext::AllowableSES;
use crate::yd::{Double, YdModule};
use std::sync::Arc;

/// `B_k` with its one-dimensional modules `C_+`, `C_-` and the
/// two-dimensional extensions `Y_i` between them. The dual is generated by
/// `y_i = x_i* - (x_i g)*` and `h = 1* - g*`.
pub struct BkExample {
    k: usize,
    double: Arc<Double>,
}

impl BkExample {
    pub fn new(k: usize) -> Result<Self> {
        Ok(BkExample { k, double: Double::new(bk(k)?) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn double(&self) -> &Arc<Double> {
        &self.double
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.double.algebra()
    }

    fn half(&self) -> usize {
        1 << self.k
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.k).contains(&i) {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("index {i} outside 1..={}", self.k)))
        }
    }

    /// `y_i` in dual coordinates (indices from 1).
    pub fn y(&self, i: usize) -> SparseVec {
        let f = self.algebra().field();
        let x = 1 << (i - 1);
        SparseVec::from_unsorted(vec![(x, CycloNum::one(f)), (self.half() + x, CycloNum::from_int(f, -1))])
    }

    pub fn h(&self) -> SparseVec {
        let f = self.algebra().field();
        SparseVec::from_unsorted(vec![(0, CycloNum::one(f)), (self.half(), CycloNum::from_int(f, -1))])
    }

    fn build(&self, dim: usize, g: Matrix, xs: Vec<Matrix>, h: Matrix, ys: Vec<Matrix>) -> Result<YdModule> {
        let alg = self.algebra();
        let one = CycloNum::one(alg.field());
        let named = |l: &str| element(alg, &[(l, one.clone())]);
        let mut algebra_gens = vec![(named("g"), g)];
        algebra_gens.extend((1..=self.k).map(|t| named(&format!("x{t}"))).zip(xs));
        let mut dual_gens = vec![(self.h(), h)];
        dual_gens.extend((1..=self.k).map(|i| self.y(i)).zip(ys));
        YdModule::from_generators(self.double.clone(), dim, &algebra_gens, &dual_gens)
    }

    /// `C_+` (the unit) or `C_-`: `g` and `h` act by the sign, `x_i` and
    /// `y_i` by zero.
    pub fn character(&self, positive: bool) -> Result<YdModule> {
        let f = self.algebra().field();
        let s = Matrix::identity(f, 1).scale(&CycloNum::from_int(f, if positive { 1 } else { -1 }));
        let zero = || vec![Matrix::zeros(f, 1, 1); self.k];
        self.build(1, s.clone(), zero(), s, zero())
    }

    /// `Y_i` on `(u, u')`: `g` and `h` act by `diag(e, -e)` for the sign `e`,
    /// `y_i u = u'`, and everything else by zero.
    pub fn extension_module(&self, i: usize, positive: bool) -> Result<YdModule> {
        self.check_index(i)?;
        let f = self.algebra().field();
        let e = if positive { 1 } else { -1 };
        let diag = Matrix::from_triplets(f, 2, 2, [(0, 0, CycloNum::from_int(f, e)), (1, 1, CycloNum::from_int(f, -e))]);
        let xs = vec![Matrix::zeros(f, 2, 2); self.k];
        let ys = (1..=self.k)
            .map(|j| if j == i { Matrix::from_triplets(f, 2, 2, [(1, 0, CycloNum::one(f))]) } else { Matrix::zeros(f, 2, 2) })
            .collect();
        self.build(2, diag.clone(), xs, diag, ys)
    }

    /// `0 -> C_(-e) -> Y_i -> C_e -> 0`.
    pub fn sequence(&self, i: usize, positive: bool) -> Result<AllowableSES> {
        let f = self.algebra().field();
        let one = CycloNum::one(f);
        AllowableSES::new(
            self.character(!positive)?,
            self.extension_module(i, positive)?,
            self.character(positive)?,
            Matrix::from_triplets(f, 2, 1, [(1, 0, one.clone())]),
            Matrix::from_triplets(f, 1, 2, [(0, 0, one)]),
        )
    }

    /// `[S_i^- , S_j^+]`, whose composite represents `x_j (x) x_i g`.
    pub fn product_sequences(&self, i: usize, j: usize) -> Result<[AllowableSES; 2]> {
        Ok([self.sequence(i, false)?, self.sequence(j, true)?])
    }
}
