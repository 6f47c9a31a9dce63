use super::{representation, tensor_of, Cover};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::hopf::builders::{bar_ui, element};
use crate::hopf::{fourier_idempotents, matrix_coefficient, HopfAlgebra};
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::relext::AllowableSES;
use crate::yd::{Double, YdModule};
use std::sync::Arc;

/// The 16-dimensional quantum `sl_2` at `q = i` with its fundamental
/// representation and the matrix coefficients `a, b, c, d` of it.
pub struct BarUi {
    double: Arc<Double>,
    fundamental: Vec<Matrix>,
    coefficients: [SparseVec; 4],
    fourier: Vec<SparseVec>,
}

impl BarUi {
    pub fn new() -> Result<Self> {
        let h = bar_ui()?;
        let f = h.field();
        let one = CycloNum::one(f);
        let i = CycloNum::zeta(f);
        let fundamental = representation(
            &h,
            2,
            &[
                ("E", Matrix::from_triplets(f, 2, 2, [(0, 1, one.clone())])),
                ("F", Matrix::from_triplets(f, 2, 2, [(1, 0, one.clone())])),
                ("K", Matrix::from_triplets(f, 2, 2, [(0, 0, i.clone()), (1, 1, -i)])),
            ],
        )?;
        let coefficients = [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(r, c)| matrix_coefficient(&h, &fundamental, r, c));
        let double = Double::new(h);
        let fourier = fourier_idempotents(double.dual(), &coefficients[3], 4)?;
        Ok(BarUi { double, fundamental, coefficients, fourier })
    }

    pub fn double(&self) -> &Arc<Double> {
        &self.double
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.double.algebra()
    }

    pub fn fundamental(&self) -> &[Matrix] {
        &self.fundamental
    }

    /// Matrix coefficient `rho(-)[r][c]` of the fundamental representation.
    pub fn coefficient(&self, r: usize, c: usize) -> &SparseVec {
        &self.coefficients[2 * r + c]
    }

    /// `phi_l = (1/4) sum_j i^(-jl) d^j`; indices are taken mod 4.
    pub fn phi(&self, l: i64) -> SparseVec {
        self.fourier[l.rem_euclid(4) as usize].clone()
    }

    /// `b^i c^j phi_l`, multiplied in `(H*)^op`.
    pub fn monomial(&self, bi: u32, cj: u32, l: i64) -> SparseVec {
        let hd = self.double.dual();
        let mut x = self.phi(l);
        for _ in 0..cj {
            x = hd.mul(self.coefficient(1, 0), &x);
        }
        for _ in 0..bi {
            x = hd.mul(self.coefficient(0, 1), &x);
        }
        x
    }

    /// Basis element by label.
    pub fn elem(&self, label: &str) -> SparseVec {
        element(self.algebra(), &[(label, CycloNum::one(self.algebra().field()))])
    }

    /// The three explicit 3-cocycles `c_1, c_2, c_3`, built from
    /// `e = (1 - K^2)/2`.
    pub fn explicit_cocycles(&self) -> [SparseVec; 3] {
        let h = self.algebra();
        let f = h.field();
        let half = CycloNum::frac(f, 1, 2);
        let e = self.elem("1").sub(&self.elem("K^2")).scale(&half);
        let ke = h.mul(&self.elem("K"), &e);
        let t = |xs: [&SparseVec; 3]| tensor_of(h, &xs);
        let (ek, ek2, ek3) = (self.elem("EK"), self.elem("EK^2"), self.elem("EK^3"));
        let (fk, fk2, fk3) = (self.elem("FK"), self.elem("FK^2"), self.elem("FK^3"));
        let (em, fm) = (self.elem("E"), self.elem("F"));
        let c1 = t([&e, &ek2, &ek3]).sub(&t([&em, &ke, &ek3])).sub(&t([&em, &ek, &e]));
        let c2 = t([&e, &fk3, &fm]).sub(&t([&fk, &ke, &fm])).sub(&t([&fk, &fk2, &e]));
        let c3 = t([&e, &ek2, &fk2])
            .sub(&t([&e, &fk3, &ek3]))
            .add(&t([&ek2, &ke, &fk2]))
            .add(&t([&fk, &ke, &ek3]))
            .sub(&t([&ek2, &fk2, &e]))
            .add(&t([&fk, &ek, &e]));
        [c1, c2, c3]
    }

    pub fn coadjoint(&self) -> YdModule {
        YdModule::coadjoint(self.double.clone())
    }

    /// `psi -> psi(1)` on the coadjoint module.
    pub fn counit_map(&self) -> Matrix {
        let h = self.algebra();
        Matrix::from_rows(h.field(), h.dim(), vec![h.one().clone()])
    }

    /// `R` generated by `phi_0` and `phi_2` inside the coadjoint module,
    /// covering the trivial module through the counit. `phi_0` alone only
    /// generates a 7-dimensional submodule missing `phi_2`.
    pub fn cover(&self) -> Result<Cover> {
        let ambient = self.coadjoint();
        let (module, incl) = ambient.submodule_generated(&[self.phi(0), self.phi(2)])?;
        let map = self.counit_map().mul(&incl);
        Ok(Cover { module, map, target: YdModule::trivial(self.double.clone()), ambient, incl })
    }

    /// The four-dimensional `W(l, m)` on the weight basis
    /// `w_(l,m), w_(-l,im), w_(-l,-im), w'`.
    pub fn weight_module(&self, l: &CycloNum, m: &CycloNum) -> Result<YdModule> {
        let f = self.algebra().field();
        let i = CycloNum::zeta(f);
        let half = CycloNum::frac(f, 1, 2);
        let (l_inv, m_inv) = (l.inv()?, m.inv()?);
        let m2 = m * m;
        let e = Matrix::from_triplets(
            f,
            4,
            4,
            [
                (0, 1, &(&i * &half) * &(&l_inv - &m2)),
                (0, 2, m * &(&m2 - l)),
                (1, 3, -(m * &(l - &m2))),
                (2, 3, &(&i * &half) * &(&m2 - &l_inv)),
            ],
        );
        let i_half_m = &(&i * &half) * &m_inv;
        let fm = Matrix::from_triplets(
            f,
            4,
            4,
            [(1, 0, CycloNum::one(f)), (2, 0, i_half_m.clone()), (3, 1, -i_half_m), (3, 2, CycloNum::one(f))],
        );
        let neg_l = -l.clone();
        let k = Matrix::from_triplets(f, 4, 4, [(0, 0, l.clone()), (1, 1, neg_l.clone()), (2, 2, neg_l), (3, 3, l.clone())]);
        let b = Matrix::from_triplets(f, 4, 4, [(2, 0, CycloNum::one(f)), (3, 1, -i.clone())]);
        let gap = &m2 - &l_inv;
        let c = Matrix::from_triplets(f, 4, 4, [(0, 1, m * &gap), (2, 3, &(&i * m) * &gap)]);
        let im = &i * m;
        let d = Matrix::from_triplets(f, 4, 4, [(0, 0, m.clone()), (1, 1, im.clone()), (2, 2, -im), (3, 3, m.clone())]);
        YdModule::from_generators(
            self.double.clone(),
            4,
            &[(self.elem("E"), e), (self.elem("F"), fm), (self.elem("K"), k)],
            &[
                (self.coefficient(0, 1).clone(), b),
                (self.coefficient(1, 0).clone(), c),
                (self.coefficient(1, 1).clone(), d),
            ],
        )
        .map_err(|err| Error::InvalidParameter(format!("W({l}, {m}): {err}")))
    }

    /// `S_1 = (C -> W(-1, i)/<w'> -> V_i)`, `S_2 = (V_i -> W(1, -1) -> V_-1)`
    /// and `S_3 = (V_-1 -> <w_1, w_2, w'> in W(-1, -i) -> C)`, where
    /// `V_i = <w_2, w'>` in `W(1, -1)`. The composite is a nonzero multiple of
    /// the first explicit 3-cocycle.
    pub fn sequences(&self) -> Result<[AllowableSES; 3]> {
        let f = self.algebra().field();
        let i = CycloNum::zeta(f);
        let one = CycloNum::one(f);
        let minus_one = -one.clone();
        let units = |idx: &[usize]| Subspace::span(f, 4, idx.iter().map(|&k| SparseVec::unit(k, f)).collect());
        let unit = YdModule::trivial(self.double.clone());

        let w_mid = self.weight_module(&one, &minus_one)?;
        let (v_i, incl) = w_mid.submodule(&units(&[2, 3]))?;
        let (v_minus, proj) = w_mid.quotient(&units(&[2, 3]))?;
        let second = AllowableSES::new(v_i.clone(), w_mid, v_minus.clone(), incl, proj)?;

        let (m, _) = self.weight_module(&minus_one, &i)?.quotient(&units(&[3]))?;
        let first = AllowableSES::with_ends(unit.clone(), m, v_i)?;

        let (n, _) = self.weight_module(&minus_one, &-i)?.submodule(&units(&[1, 2, 3]))?;
        let third = AllowableSES::with_ends(v_minus, n, unit)?;
        Ok([first, second, third])
    }
}
