use super::cochain::Cochain;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{common_kernel, common_kernel_in, solve_vec, Accum, LinearOp, Matrix, SparseVec, Subspace};
use crate::yd::{intertwiners, Double, YdModule};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Which cochains are allowed: `H`-linear ones (the DY complex of the
/// identity functor on `H`-mod) or all linear maps (the forgetful functor).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Identity,
    Forgetful,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Identity => "identity",
            Mode::Forgetful => "forgetful",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub degree: usize,
    pub mode: Mode,
    pub dim_cochains: usize,
    pub dim_kernel: usize,
    pub dim_image_prev: usize,
    pub dim: usize,
    /// Cocycles whose classes form a basis of the cohomology.
    pub basis: Vec<Cochain>,
}

/// Coaction of a basis vector, as `(dual index a, output index, coefficient)`.
type CoactionTerms = Vec<Vec<(usize, usize, CycloNum)>>;

/// The DY complex with coefficients `(V, W)` in the form
/// `C^n = Hom_H(V, (H^{(x) n} (x) W)_ad)` with differential
/// `delta(phi) = (id (x) phi) lambda_V + sum_i (-1)^i Delta_i phi + (-1)^(n+1) (id (x) lambda_W) phi`.
/// For trivial coefficients `C^n` is the centralizer of `Delta^(n-1)(H)`.
/// Cochain spaces live in flattened coordinates `(t m_W + w) m_V + v`.
pub struct DyComplex {
    source: YdModule,
    target: YdModule,
    mode: Mode,
    trivial: bool,
    source_coaction: CoactionTerms,
    target_coaction: CoactionTerms,
    spaces: Mutex<HashMap<usize, Arc<Subspace>>>,
}

fn coaction_terms(v: &YdModule, transpose: bool) -> CoactionTerms {
    let d = v.double().dim();
    let mut out: CoactionTerms = vec![Vec::new(); v.dim()];
    for a in 0..d {
        for (i, j, c) in v.dual_action(a).triplets() {
            let (from, to) = if transpose { (j, i) } else { (i, j) };
            out[from].push((a, to, c.clone()));
        }
    }
    out
}

impl DyComplex {
    pub fn new(source: YdModule, target: YdModule, mode: Mode) -> Result<Self> {
        if !Arc::ptr_eq(source.double(), target.double()) {
            return Err(Error::AlgebraMismatch(format!("{:?} vs {:?}", source.double(), target.double())));
        }
        let triv = YdModule::trivial(source.double().clone());
        let trivial = source.dim() == 1
            && target.dim() == 1
            && source.actions() == triv.actions()
            && source.dual_actions() == triv.dual_actions()
            && target.actions() == triv.actions()
            && target.dual_actions() == triv.dual_actions();
        // (id (x) phi) lambda_V reads rows of the source coaction blocks;
        // (id (x) lambda_W) phi reads their columns on the target side.
        let source_coaction = coaction_terms(&source, false);
        let target_coaction = coaction_terms(&target, true);
        Ok(DyComplex { source, target, mode, trivial, source_coaction, target_coaction, spaces: Mutex::default() })
    }

    pub fn trivial(double: Arc<Double>, mode: Mode) -> Self {
        let t = YdModule::trivial(double);
        Self::new(t.clone(), t, mode).expect("same algebra")
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.source.double().algebra()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn source(&self) -> &YdModule {
        &self.source
    }

    pub fn target(&self) -> &YdModule {
        &self.target
    }

    pub fn ambient_dim(&self, n: usize) -> usize {
        self.algebra().tensor_dim(n) * self.target.dim() * self.source.dim()
    }

    /// `C^n` as a subspace of the flattened ambient space.
    pub fn cochains(&self, n: usize) -> Arc<Subspace> {
        if let Some(s) = self.spaces.lock().unwrap().get(&n) {
            return s.clone();
        }
        let h = self.algebra();
        let f = h.field();
        let space = match self.mode {
            Mode::Forgetful => Subspace::full(f, self.ambient_dim(n)),
            Mode::Identity if self.trivial => centralizer_basis(h, n),
            Mode::Identity => {
                let gens = h.generators();
                let ad: Vec<Matrix> = gens.iter().map(|&g| ad_action(h, n, &self.target, g)).collect();
                let src: Vec<&Matrix> = gens.iter().map(|&g| self.source.action(g)).collect();
                let tgt: Vec<&Matrix> = ad.iter().collect();
                let maps = intertwiners(f, &src, &tgt, self.source.dim(), h.tensor_dim(n) * self.target.dim());
                Subspace::span(f, self.ambient_dim(n), maps.iter().map(Matrix::flatten).collect())
            }
        };
        let space = Arc::new(space);
        self.spaces.lock().unwrap().insert(n, space.clone());
        space
    }

    /// `delta^n` on a flattened cochain of degree `n`.
    pub fn coboundary_flat(&self, n: usize, x: &SparseVec) -> SparseVec {
        let h = self.algebra();
        let d = h.dim();
        let (mv, mw) = (self.source.dim(), self.target.dim());
        let dn = h.tensor_dim(n);
        let rows_n = dn * mw;
        let mut acc = Accum::new();
        let sign = |k: usize| if k.is_multiple_of(2) { CycloNum::one(h.field()) } else { -CycloNum::one(h.field()) };
        for (idx, c) in x.iter() {
            let (r, v) = (idx / mv, idx % mv);
            // (id (x) phi) lambda_V: column v' receives Phi_a[v, v'] e_a (x) phi(e_v)
            for (a, v2, k) in &self.source_coaction[v] {
                acc.add_owned((a * rows_n + r) * mv + v2, c * k);
            }
            // Delta on slot i, with W folded into the low digits
            for slot in 0..n {
                let low_size = d.pow((n - 1 - slot) as u32) * mw;
                let (low, rest) = (r % low_size, r / low_size);
                let (i, high) = (rest % d, rest / d);
                let s = sign(slot + 1);
                for (pq, e) in h.coproduct(i).iter() {
                    let (p, q) = (pq / d, pq % d);
                    let r2 = ((high * d + p) * d + q) * low_size + low;
                    acc.add_owned(r2 * mv + v, &(c * e) * &s);
                }
            }
            // (id (x) lambda_W) phi
            let (t, w) = (r / mw, r % mw);
            let s = sign(n + 1);
            for (a, w2, k) in &self.target_coaction[w] {
                acc.add_owned(((t * d + a) * mw + w2) * mv + v, &(c * k) * &s);
            }
        }
        acc.finish()
    }

    pub fn coboundary(&self, c: &Cochain) -> Cochain {
        let n = c.degree();
        let out = self.coboundary_flat(n, &c.flatten());
        Cochain::from_flat(self.algebra(), n + 1, self.source.dim(), self.target.dim(), &out)
    }

    /// Matrix of `delta^n`: columns are the images of the basis of `C^n`,
    /// written in the flattened coordinates of degree `n + 1`.
    pub fn differential(&self, n: usize) -> Matrix {
        let images = self.images(n);
        Matrix::from_cols(self.algebra().field(), self.ambient_dim(n + 1), &images)
    }

    fn images(&self, n: usize) -> Vec<SparseVec> {
        self.cochains(n).basis().par_iter().map(|b| self.coboundary_flat(n, b)).collect()
    }

    pub fn cocycles(&self, n: usize) -> Subspace {
        let op = |x: &SparseVec| self.coboundary_flat(n, x);
        common_kernel_in(self.algebra().field(), &self.cochains(n), &[&op as &LinearOp<'_>])
    }

    /// `im delta^(n-1)` inside degree `n`.
    pub fn coboundaries(&self, n: usize) -> Subspace {
        let f = self.algebra().field();
        if n == 0 {
            return Subspace::zero(f, self.ambient_dim(0));
        }
        Subspace::span(f, self.ambient_dim(n), self.images(n - 1))
    }

    pub fn cohomology(&self, n: usize) -> CohomologyReport {
        let h = self.algebra();
        let f = h.field();
        let z = self.cocycles(n);
        let b = self.coboundaries(n);
        let mut chosen: Vec<SparseVec> = Vec::new();
        let mut span = b.clone();
        for v in z.basis() {
            if !span.contains(v) {
                span = span.sum(&Subspace::span(f, z.ambient_dim(), vec![v.clone()]));
                chosen.push(v.clone());
            }
        }
        let basis = chosen
            .iter()
            .map(|v| Cochain::from_flat(h, n, self.source.dim(), self.target.dim(), v))
            .collect();
        CohomologyReport {
            degree: n,
            mode: self.mode,
            dim_cochains: self.cochains(n).dim(),
            dim_kernel: z.dim(),
            dim_image_prev: b.dim(),
            dim: z.dim() - b.dim(),
            basis,
        }
    }

    fn check_shape(&self, c: &Cochain) -> Result<()> {
        if c.source_dim() != self.source.dim() || c.target_dim() != self.target.dim() {
            return Err(Error::Dimension(format!(
                "cochain {}->{} in a complex {}->{}",
                c.source_dim(),
                c.target_dim(),
                self.source.dim(),
                self.target.dim()
            )));
        }
        Ok(())
    }

    /// In `C^n` and killed by `delta^n`.
    pub fn is_cocycle(&self, c: &Cochain) -> bool {
        self.check_shape(c).is_ok()
            && self.cochains(c.degree()).contains(&c.flatten())
            && self.coboundary_flat(c.degree(), &c.flatten()).is_zero()
    }

    fn require_cocycle(&self, c: &Cochain) -> Result<()> {
        self.check_shape(c)?;
        if self.is_cocycle(c) {
            Ok(())
        } else {
            Err(Error::NotACocycle(format!("degree {} cochain {}", c.degree(), c.display(self.algebra()))))
        }
    }

    /// Some `b` in `C^(n-1)` with `delta(b) = c`, if `c` is a coboundary.
    pub fn coboundary_preimage(&self, c: &Cochain) -> Result<Option<Cochain>> {
        self.require_cocycle(c)?;
        let n = c.degree();
        if n == 0 {
            return Ok(c.is_zero().then(|| c.clone()));
        }
        let h = self.algebra();
        let prev = self.cochains(n - 1);
        let a = self.differential(n - 1);
        Ok(solve_vec(&a, &c.flatten()).ok().map(|coeffs| {
            Cochain::from_flat(h, n - 1, self.source.dim(), self.target.dim(), &prev.combine(&coeffs))
        }))
    }

    pub fn class_equal(&self, a: &Cochain, b: &Cochain) -> Result<bool> {
        self.require_cocycle(a)?;
        self.require_cocycle(b)?;
        Ok(self.coboundary_preimage(&a.sub(b))?.is_some())
    }

    /// A scalar `t` with `[a] = t [b]`. When `b` is a coboundary the scalar is
    /// not determined; then `Some(0)` is returned iff `a` is one as well.
    pub fn class_ratio(&self, a: &Cochain, b: &Cochain) -> Result<Option<CycloNum>> {
        self.require_cocycle(a)?;
        self.require_cocycle(b)?;
        let f = self.algebra().field();
        let n = a.degree();
        let bounds = if n == 0 { Matrix::zeros(f, self.ambient_dim(0), 0) } else { self.differential(n - 1) };
        let k = bounds.ncols();
        let aug = bounds.hstack(&Matrix::from_cols(f, self.ambient_dim(n), &[b.flatten()]));
        Ok(solve_vec(&aug, &a.flatten()).ok().map(|t| t.get(k).cloned().unwrap_or_else(|| CycloNum::zero(f))))
    }
}

/// Centralizer of `Delta^(n-1)(H)` in `H^{(x) n}`, imposed generator by
/// generator; grouplike generators use the conjugation form `g x g^-1 - x`.
pub fn centralizer_basis(h: &HopfAlgebra, n: usize) -> Subspace {
    let f = h.field();
    if n == 0 {
        return Subspace::full(f, 1);
    }
    let ops: Vec<Box<LinearOp<'_>>> = h
        .generators()
        .iter()
        .map(|&g| {
            let ge = h.basis_elem(g);
            let op: Box<LinearOp<'_>> = if h.is_grouplike(g) {
                let big = h.iterated_coproduct(n as i32 - 1, &ge);
                let inv = h.iterated_coproduct(n as i32 - 1, h.antipode_of(g));
                Box::new(move |x: &SparseVec| h.mul_tensors(n, &h.mul_tensors(n, &big, x), &inv).sub(x))
            } else {
                let big = h.iterated_coproduct(n as i32 - 1, &ge);
                Box::new(move |x: &SparseVec| h.mul_tensors(n, &big, x).sub(&h.mul_tensors(n, x, &big)))
            };
            op
        })
        .collect();
    let refs: Vec<&LinearOp<'_>> = ops.iter().map(|b| b.as_ref()).collect();
    common_kernel(f, h.tensor_dim(n), &refs)
}

/// Matrix of `g` on `(H^{(x) n} (x) W)_ad`:
/// `g (x_1 .. x_n w) = g_(1) x_1 S(g_(2n+1)) .. g_(n) x_n S(g_(n+2)) (x) g_(n+1) w`.
pub fn ad_action(h: &HopfAlgebra, n: usize, w: &YdModule, g: usize) -> Matrix {
    let f = h.field();
    let d = h.dim();
    let size = h.tensor_dim(n) * w.dim();
    let mut conj: HashMap<(usize, usize), Matrix> = HashMap::new();
    let mut total = Matrix::zeros(f, size, size);
    for (idx, c) in h.iterated_coproduct(2 * n as i32, &h.basis_elem(g)).iter() {
        let digits = h.split_index(idx, 2 * n + 1);
        let mut m = Matrix::identity(f, 1);
        for k in 0..n {
            let (p, q) = (digits[k], digits[2 * n - k]);
            let cm = conj.entry((p, q)).or_insert_with(|| {
                let cols: Vec<SparseVec> =
                    (0..d).map(|j| h.mul(&h.mul(&h.basis_elem(p), &h.basis_elem(j)), h.antipode_of(q))).collect();
                Matrix::from_cols(f, d, &cols)
            });
            m = m.kron(cm);
        }
        m = m.kron(w.action(digits[n]));
        total = total.add(&m.scale(c));
    }
    total
}

/// `phi o psi = (-1)^(nm) (id_{H^{(x) m}} (x) phi) psi` for `phi: V -> H^n W`
/// and `psi: U -> H^m V`.
pub fn compose(h: &HopfAlgebra, phi: &Cochain, psi: &Cochain) -> Result<Cochain> {
    if psi.target_dim() != phi.source_dim() {
        return Err(Error::ChainMismatch(format!(
            "cannot compose: inner cochain lands in dimension {}, outer starts in {}",
            psi.target_dim(),
            phi.source_dim()
        )));
    }
    let (n, m) = (phi.degree(), psi.degree());
    let f = h.field();
    let rows_phi = phi.data().nrows();
    let mv = phi.source_dim();
    let phi_cols = phi.data().cols();
    let mut cols = Vec::with_capacity(psi.source_dim());
    for u in 0..psi.source_dim() {
        let mut acc = Accum::new();
        for (r, c) in psi.column(u).iter() {
            let (s, v) = (r / mv, r % mv);
            for (r2, e) in phi_cols[v].iter() {
                acc.add_owned(s * rows_phi + r2, c * e);
            }
        }
        cols.push(acc.finish());
    }
    let sign = if (n * m) % 2 == 0 { CycloNum::one(f) } else { -CycloNum::one(f) };
    let data = Matrix::from_cols(f, h.tensor_dim(m) * rows_phi, &cols).scale(&sign);
    Ok(Cochain::new(n + m, phi.target_dim(), data))
}

/// Yoneda product of cocycles, each checked in its own complex.
pub fn yoneda_product(outer: &DyComplex, phi: &Cochain, inner: &DyComplex, psi: &Cochain) -> Result<Cochain> {
    outer.require_cocycle(phi)?;
    inner.require_cocycle(psi)?;
    compose(outer.algebra(), phi, psi)
}

/// `f cup g = (-1)^(m+n+1) g o f` for trivial-coefficient cochains.
pub fn cup(h: &HopfAlgebra, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let sign = if (f.degree() + g.degree() + 1).is_multiple_of(2) { 1 } else { -1 };
    Ok(compose(h, g, f)?.scale(&CycloNum::from_int(h.field(), sign)))
}
