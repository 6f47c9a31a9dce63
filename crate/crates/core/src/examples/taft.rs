use super::{representation, tensor_of, Cover};
use crate::cyclo::{q_factorial, q_int, CycloNum};
use crate::error::Result;
use crate::hopf::builders::taft;
use crate::hopf::{grouplike_fourier_idempotents, matrix_coefficient, HopfAlgebra};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::relext::AllowableSES;
use crate::yd::{Double, YdModule};
use std::sync::Arc;

/// Taft algebra `T_n` at `q = zeta_n` with the dual generators `y, h`, the
/// matrix coefficients of the two-dimensional module `X_2^(0)` in the
/// positions `(1, 0)` and `(1, 1)`.
pub struct TaftExample {
    n: usize,
    double: Arc<Double>,
    y: SparseVec,
    h: SparseVec,
    fourier: Vec<SparseVec>,
}

impl TaftExample {
    pub fn new(n: usize) -> Result<Self> {
        let alg = taft(n)?;
        let f = alg.field();
        let q = CycloNum::zeta(f);
        let one = CycloNum::one(f);
        let x2 = representation(
            &alg,
            2,
            &[
                ("g", Matrix::from_triplets(f, 2, 2, [(0, 0, one.clone()), (1, 1, q)])),
                ("x", Matrix::from_triplets(f, 2, 2, [(1, 0, one)])),
            ],
        )?;
        let y = matrix_coefficient(&alg, &x2, 1, 0);
        let h = matrix_coefficient(&alg, &x2, 1, 1);
        let double = Double::new(alg);
        let fourier = grouplike_fourier_idempotents(double.dual(), &h, n)?;
        Ok(TaftExample { n, double, y, h, fourier })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> CycloNum {
        CycloNum::zeta(self.algebra().field())
    }

    pub fn double(&self) -> &Arc<Double> {
        &self.double
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.double.algebra()
    }

    pub fn y(&self) -> &SparseVec {
        &self.y
    }

    pub fn h(&self) -> &SparseVec {
        &self.h
    }

    /// `phi_j = (1/n) sum_k q^(-jk) h^k`; indices are taken mod `n`.
    pub fn phi(&self, j: i64) -> SparseVec {
        self.fourier[j.rem_euclid(self.n as i64) as usize].clone()
    }

    /// The one-dimensional module `X_1^(s)`: `g -> q^s`, `x -> 0`.
    pub fn simple(&self, s: i64) -> Result<Vec<Matrix>> {
        let f = self.algebra().field();
        representation(
            self.algebra(),
            1,
            &[("g", Matrix::identity(f, 1).scale(&self.q().pow(s))), ("x", Matrix::zeros(f, 1, 1))],
        )
    }

    pub fn induced_simple(&self, s: i64) -> Result<YdModule> {
        YdModule::induced(self.double.clone(), &self.simple(s)?)
    }

    /// `V^(s,t)` on `v_i = y^i v`: `x v_i = (i)_q (q^t - q^(s+1-i)) v_(i-1)`,
    /// `g v_i = q^(s-i) v_i`, `h v_i = q^(t+i) v_i`, `y v_i = v_(i+1)`.
    pub fn v_module(&self, s: i64, t: i64) -> Result<YdModule> {
        let n = self.n;
        let f = self.algebra().field();
        let q = self.q();
        let one = CycloNum::one(f);
        let x = Matrix::from_triplets(
            f,
            n,
            n,
            (1..n).map(|i| (i - 1, i, &q_int(&q, i as u32) * &(q.pow(t) - q.pow(s + 1 - i as i64)))),
        );
        let g = Matrix::from_triplets(f, n, n, (0..n).map(|i| (i, i, q.pow(s - i as i64))));
        let hm = Matrix::from_triplets(f, n, n, (0..n).map(|i| (i, i, q.pow(t + i as i64))));
        let y = Matrix::from_triplets(f, n, n, (0..n - 1).map(|i| (i + 1, i, one.clone())));
        let alg = self.algebra();
        let named = |l: &str| crate::hopf::builders::element(alg, &[(l, one.clone())]);
        YdModule::from_generators(
            self.double.clone(),
            n,
            &[(named("g"), g), (named("x"), x)],
            &[(self.h.clone(), hm), (self.y.clone(), y)],
        )
    }

    /// `-sum_{i=1}^{n-1} 1/((i)_q! (n-i)_q!) x^i (x) x^(n-i) g^i`, a 2-cocycle
    /// spanning the second DY cohomology.
    pub fn explicit_cocycle(&self) -> SparseVec {
        let n = self.n;
        let alg = self.algebra();
        let q = self.q();
        let mut acc = SparseVec::new();
        for i in 1..n {
            let c = (&q_factorial(&q, i as u32) * &q_factorial(&q, (n - i) as u32)).inv().expect("q-factorials below n are nonzero");
            let left = alg.basis_elem(i * n);
            let right = alg.basis_elem((n - i) * n + i % n);
            acc.sub_scaled(&c, &tensor_of(alg, &[&left, &right]));
        }
        acc
    }

    /// `V^(0,0)` generated by `phi_0 (x) 1` in `F(X_1^(0))`, covering the
    /// trivial module through `psi (x) 1 -> psi(1)`.
    pub fn cover(&self) -> Result<Cover> {
        let ambient = self.induced_simple(0)?;
        let (module, incl) = ambient.submodule_generated(&[self.phi(0)])?;
        let alg = self.algebra();
        let counit = Matrix::from_rows(alg.field(), alg.dim(), vec![alg.one().clone()]);
        let map = counit.mul(&incl);
        Ok(Cover { module, map, target: YdModule::trivial(self.double.clone()), ambient, incl })
    }

    /// `K = span(v_1, .., v_(n-1))` inside `V^(0,0)`, with its inclusion.
    pub fn radical(&self) -> Result<(YdModule, YdModule, Matrix)> {
        let v00 = self.v_module(0, 0)?;
        let f = self.algebra().field();
        let span = Subspace::span(f, self.n, (1..self.n).map(|i| SparseVec::unit(i, f)).collect());
        let (k, incl) = v00.submodule(&span)?;
        Ok((v00, k, incl))
    }

    /// `S_1 = (C -> V^(n-1,1) -> K)` and `S_2 = (K -> V^(0,0) -> C)`, whose
    /// Yoneda composite spans the second cohomology.
    pub fn sequences(&self) -> Result<[AllowableSES; 2]> {
        let f = self.algebra().field();
        let (v00, k, incl) = self.radical()?;
        let unit = YdModule::trivial(self.double.clone());
        let proj = Matrix::from_triplets(f, 1, self.n, [(0, 0, CycloNum::one(f))]);
        let second = AllowableSES::new(k.clone(), v00, unit.clone(), incl, proj)?;
        let first = AllowableSES::with_ends(unit, self.v_module(self.n as i64 - 1, 1)?, k)?;
        Ok([first, second])
    }
}
