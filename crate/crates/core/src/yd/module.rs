use super::actions;
use super::double::Double;
use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, ValidationReport};
use crate::linalg::{rank, solve, Accum, Matrix, SparseVec, Subspace};
use std::collections::HashMap;
use std::sync::Arc;

/// A Yetter-Drinfeld module over `H`: an `H`-action and a compatible
/// `H`-coaction. The coaction `v -> sum_a h_a (x) coact[a] v` is stored
/// blockwise, block `a` being the action of the dual basis element `h^a` of
/// `(H*)^op`, so both halves are handled by the same representation code.
#[derive(Clone)]
pub struct YdModule {
    double: Arc<Double>,
    dim: usize,
    action: Vec<Matrix>,
    coaction: Vec<Matrix>,
}

impl std::fmt::Debug for YdModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "YdModule {{ over: {:?}, dim: {} }}", self.double, self.dim)
    }
}

impl YdModule {
    /// Wraps action and coaction blocks after a shape check. Use
    /// [`YdModule::validate`] for the axioms.
    pub fn from_parts(double: Arc<Double>, action: Vec<Matrix>, coaction: Vec<Matrix>) -> Result<Self> {
        let d = double.dim();
        if action.len() != d || coaction.len() != d {
            return Err(Error::Dimension(format!(
                "{} action and {} coaction blocks for an algebra of dimension {d}",
                action.len(),
                coaction.len()
            )));
        }
        let dim = action[0].nrows();
        if action.iter().chain(&coaction).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Dimension(format!("blocks must all be {dim}x{dim}")));
        }
        Ok(YdModule { double, dim, action, coaction })
    }

    /// From the stacked coaction matrix (`d*m x m`, row `a*m + i`).
    pub fn from_coaction_matrix(double: Arc<Double>, action: Vec<Matrix>, coaction: &Matrix) -> Result<Self> {
        let d = double.dim();
        let m = action.first().map_or(0, Matrix::nrows);
        if coaction.shape() != (d * m, m) {
            return Err(Error::Dimension(format!("coaction is {:?}, expected ({}, {m})", coaction.shape(), d * m)));
        }
        let blocks = (0..d).map(|a| coaction.select_rows(&(a * m..(a + 1) * m).collect::<Vec<_>>())).collect();
        Self::from_parts(double, action, blocks)
    }

    /// Builds a module from the action of generating elements of `H` and of
    /// `(H*)^op`, then checks every axiom.
    pub fn from_generators(
        double: Arc<Double>,
        dim: usize,
        algebra_gens: &[(SparseVec, Matrix)],
        dual_gens: &[(SparseVec, Matrix)],
    ) -> Result<Self> {
        let action = actions::extend(double.algebra(), dim, algebra_gens)?;
        let coaction = actions::extend(double.dual(), dim, dual_gens)?;
        let v = Self::from_parts(double, action, coaction)?;
        v.validate().into_result().map_err(|e| Error::InvalidModule(e.to_string()))?;
        Ok(v)
    }

    /// The unit object: `H` acts by the counit and the coaction is `1 (x) -`.
    pub fn trivial(double: Arc<Double>) -> Self {
        let f = double.field();
        let h = double.algebra();
        let action = (0..h.dim()).map(|i| Matrix::identity(f, 1).scale(h.counit_of(i))).collect();
        let coaction = (0..h.dim())
            .map(|a| match h.one().get(a) {
                Some(c) => Matrix::identity(f, 1).scale(c),
                None => Matrix::zeros(f, 1, 1),
            })
            .collect();
        YdModule { double, dim: 1, action, coaction }
    }

    /// `F(X) = (H* (x) X)` with `H` acting by `h (psi (x) x) = psi(S(h') ? h''') (x) h'' x`
    /// and `(H*)^op` by left multiplication on the first factor. Basis index
    /// `a * m + j` for `h^a (x) x_j`.
    pub fn induced(double: Arc<Double>, x_action: &[Matrix]) -> Result<Self> {
        let h = double.algebra();
        let f = h.field();
        let d = h.dim();
        if x_action.len() != d {
            return Err(Error::InvalidModule(format!("{} action matrices for dimension {d}", x_action.len())));
        }
        if let Some(w) = actions::module_failure(h, x_action) {
            return Err(Error::InvalidModule(w));
        }
        let m = x_action[0].nrows();
        // S(h_p) h_y h_r, cached per (p, r)
        let mut sandwich: HashMap<(usize, usize), Vec<SparseVec>> = HashMap::new();
        let action = (0..d)
            .map(|i| {
                let mut out = Matrix::zeros(f, d * m, d * m);
                for (pqr, c) in h.iterated_coproduct(2, &h.basis_elem(i)).iter() {
                    let (p, q, r) = (pqr / (d * d), (pqr / d) % d, pqr % d);
                    let s = sandwich.entry((p, r)).or_insert_with(|| {
                        (0..d).map(|y| h.mul(&h.mul(h.antipode_of(p), &h.basis_elem(y)), &h.basis_elem(r))).collect()
                    });
                    let t = Matrix::from_rows(f, d, s.clone()).scale(c);
                    out = out.add(&t.kron(&x_action[q]));
                }
                out
            })
            .collect();
        let dual = double.dual();
        let coaction = (0..d)
            .map(|b| {
                let cols: Vec<SparseVec> = (0..d).map(|a| dual.product(b, a).clone()).collect();
                Matrix::from_cols(f, d, &cols).kron(&Matrix::identity(f, m))
            })
            .collect();
        let v = YdModule { double, dim: d * m, action, coaction };
        Ok(v)
    }

    /// `F` of the trivial module, i.e. `H*` with the coadjoint action.
    pub fn coadjoint(double: Arc<Double>) -> Self {
        let triv = Self::trivial(double.clone());
        Self::induced(double, &triv.action).expect("trivial module is a module")
    }

    pub fn double(&self) -> &Arc<Double> {
        &self.double
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &'static crate::CycloField {
        self.double.field()
    }

    /// `rho(h_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of the dual basis element `h^a`, i.e. block `a` of the coaction.
    pub fn dual_action(&self, a: usize) -> &Matrix {
        &self.coaction[a]
    }

    pub fn dual_actions(&self) -> &[Matrix] {
        &self.coaction
    }

    /// `rho(x)` for any element of `H`.
    pub fn act(&self, x: &SparseVec) -> Matrix {
        actions::act(self.double.algebra(), &self.action, x)
    }

    /// Action of any element of `(H*)^op`.
    pub fn dual_act(&self, phi: &SparseVec) -> Matrix {
        actions::act(self.double.dual(), &self.coaction, phi)
    }

    /// Coaction as a `d*m x m` matrix, row `a*m + i`.
    pub fn coaction_matrix(&self) -> Matrix {
        let f = self.field();
        let mut out = Matrix::zeros(f, 0, self.dim);
        for b in &self.coaction {
            out = out.vstack(b);
        }
        out
    }

    /// Matrices of the `H` generators followed by those of the `(H*)^op`
    /// generators; a subspace is a submodule iff it is stable under these.
    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        let h = self.double.algebra();
        let hd = self.double.dual();
        h.generators()
            .iter()
            .map(|&g| &self.action[g])
            .chain(hd.generators().iter().map(|&g| &self.coaction[g]))
            .collect()
    }

    /// Counit of each generator, in the order of `generator_matrices`.
    pub(crate) fn generator_counits(&self) -> Vec<crate::CycloNum> {
        let h = self.double.algebra();
        let hd = self.double.dual();
        h.generators()
            .iter()
            .map(|&g| h.counit_of(g).clone())
            .chain(hd.generators().iter().map(|&g| hd.counit_of(g).clone()))
            .collect()
    }

    fn check_same(&self, other: &YdModule) -> Result<()> {
        if Arc::ptr_eq(&self.double, &other.double) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{:?} vs {:?}", self.double, other.double)))
        }
    }

    /// Module axioms on both halves plus the exchange relation
    /// `lambda(h v) = h' v_(-1) S(h''') (x) h'' v_(0)`, tested for the
    /// generators of `H` against every dual basis element.
    pub fn validate(&self) -> ValidationReport {
        let h = self.double.algebra();
        let hd = self.double.dual();
        let checks = vec![
            AxiomCheck { axiom: "H-module", witness: actions::module_failure(h, &self.action) },
            AxiomCheck {
                axiom: "H-comodule",
                witness: actions::module_failure(hd, &self.coaction).map(|w| format!("dual action: {w}")),
            },
            AxiomCheck { axiom: "Yetter-Drinfeld", witness: self.exchange_failure() },
        ];
        ValidationReport { checks }
    }

    fn exchange_failure(&self) -> Option<String> {
        let h = self.double.algebra();
        let f = h.field();
        let d = h.dim();
        let m = self.dim;
        for &g in h.generators() {
            let mut rhs: Vec<Matrix> = vec![Matrix::zeros(f, m, m); d];
            let mut products: HashMap<(usize, usize), Matrix> = HashMap::new();
            for (pqr, c) in h.iterated_coproduct(2, &h.basis_elem(g)).iter() {
                let (p, q, r) = (pqr / (d * d), (pqr / d) % d, pqr % d);
                for x in 0..d {
                    if self.coaction[x].is_zero() {
                        continue;
                    }
                    let conj = h.mul(&h.mul(&h.basis_elem(p), &h.basis_elem(x)), h.antipode_of(r));
                    if conj.is_zero() {
                        continue;
                    }
                    let prod = products.entry((q, x)).or_insert_with(|| self.action[q].mul(&self.coaction[x]));
                    for (y, k) in conj.iter() {
                        rhs[y] = rhs[y].add(&prod.scale(&(c * k)));
                    }
                }
            }
            for (y, r) in rhs.iter().enumerate() {
                if self.coaction[y].mul(&self.action[g]) != *r {
                    return Some(format!("h = {}, coaction component {}", h.label(g), h.label(y)));
                }
            }
        }
        None
    }

    /// `V (x) W` with diagonal action through the coproduct of `H` and
    /// coaction `v_(-1) w_(-1) (x) v_(0) (x) w_(0)`.
    pub fn tensor(&self, other: &YdModule) -> Result<YdModule> {
        self.check_same(other)?;
        let action = actions::tensor_actions(self.double.algebra(), &self.action, &other.action);
        let coaction = actions::tensor_actions(self.double.dual(), &self.coaction, &other.coaction);
        Ok(YdModule { double: self.double.clone(), dim: self.dim * other.dim, action, coaction })
    }

    /// `V^{(x) n}`; `n = 0` gives the trivial module.
    pub fn tensor_power(&self, n: usize) -> YdModule {
        if n == 0 {
            return YdModule::trivial(self.double.clone());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.tensor(self).expect("same algebra");
        }
        acc
    }

    /// Generator matrices of `self (x) other` (in `generator_matrices`
    /// order) without forming the full tensor product.
    pub fn tensor_generator_matrices(&self, other: &YdModule) -> Result<Vec<Matrix>> {
        self.check_same(other)?;
        let h = self.double.algebra();
        let hd = self.double.dual();
        Ok(h.generators()
            .iter()
            .map(|&g| actions::tensor_action(h, g, &self.action, &other.action))
            .chain(hd.generators().iter().map(|&g| actions::tensor_action(hd, g, &self.coaction, &other.coaction)))
            .collect())
    }

    /// The right dual: `(h f)(v) = f(S(h) v)`, with the coaction solved from
    /// the requirement that evaluation `V^v (x) V -> 1` be colinear, then
    /// checked against coevaluation.
    pub fn dual(&self) -> Result<YdModule> {
        let h = self.double.algebra();
        let f = h.field();
        let d = h.dim();
        let m = self.dim;
        let action = actions::dual_actions(h, &self.action);
        // Unknowns (x, i) -> x*m + i hold coact_dual[x][i, j] for each column j.
        // Equation (k, z): sum_{x,y,i} coact_dual[x][i,j] coact[y][i,k] [h_x h_y]_z = delta_jk [1]_z.
        let coact_t: Vec<Matrix> = self.coaction.iter().map(Matrix::transpose).collect();
        let mut eqs: Vec<Accum> = (0..m * d).map(|_| Accum::new()).collect();
        for x in 0..d {
            for (y, ct) in coact_t.iter().enumerate() {
                let prod = h.product(x, y);
                if prod.is_zero() {
                    continue;
                }
                // coact[y][i, k] = coact_t[y][k, i]
                for (k, row) in ct.rows().iter().enumerate() {
                    for (i, c) in row.iter() {
                        for (z, p) in prod.iter() {
                            eqs[k * d + z].add_owned(x * m + i, c * p);
                        }
                    }
                }
            }
        }
        let a = Matrix::from_rows(f, m * d, eqs.into_iter().map(Accum::finish).collect());
        let b = Matrix::from_triplets(
            f,
            m * d,
            m,
            (0..m).flat_map(|j| h.one().iter().map(move |(z, c)| (j * d + z, j, c.clone()))).collect::<Vec<_>>(),
        );
        if rank(&a) != m * d {
            return Err(Error::InvalidModule("evaluation does not determine the dual coaction".into()));
        }
        let sol = solve(&a, &b)?;
        let coaction = (0..d)
            .map(|x| sol.select_rows(&(x * m..(x + 1) * m).collect::<Vec<_>>()))
            .collect();
        let dual = YdModule { double: self.double.clone(), dim: m, action, coaction };
        if !self.coevaluation_is_colinear(&dual) {
            return Err(Error::InvalidModule("coevaluation is not colinear".into()));
        }
        Ok(dual)
    }

    /// `coev(1) = sum_j v_j (x) v^j` spans an invariant line of `V (x) V^v`.
    fn coevaluation_is_colinear(&self, dual: &YdModule) -> bool {
        let m = self.dim;
        let coev = SparseVec::from_unsorted((0..m).map(|j| (j * m + j, crate::CycloNum::one(self.field()))).collect());
        let h = self.double.algebra();
        let hd = self.double.dual();
        (0..h.dim()).all(|a| {
            let act = actions::tensor_action(hd, a, &self.coaction, &dual.coaction);
            let want = coev.scale(hd.counit_of(a));
            act.mul_vec(&coev) == want
        })
    }

    /// Restriction to a submodule given by a subspace; returns the module in
    /// the subspace's canonical basis and the inclusion matrix.
    pub fn submodule(&self, sub: &Subspace) -> Result<(YdModule, Matrix)> {
        let action = actions::restrict(&self.action, sub)?;
        let coaction = actions::restrict(&self.coaction, sub)?;
        let incl = Matrix::from_cols(self.field(), self.dim, sub.basis());
        let dim = sub.dim();
        if dim == 0 {
            return Err(Error::NotASubspace("zero submodule".into()));
        }
        Ok((YdModule { double: self.double.clone(), dim, action, coaction }, incl))
    }

    /// Smallest submodule containing `seeds`.
    pub fn generated_subspace(&self, seeds: &[SparseVec]) -> Subspace {
        let f = self.field();
        let gens = self.generator_matrices();
        let mut span = Subspace::span(f, self.dim, seeds.to_vec());
        let mut frontier: Vec<SparseVec> = span.basis().to_vec();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for v in &frontier {
                for g in &gens {
                    let w = span.reduce(&g.mul_vec(v));
                    if !w.is_zero() {
                        span = span.sum(&Subspace::span(f, self.dim, vec![w.clone()]));
                        fresh.push(w);
                    }
                }
            }
            frontier = fresh;
        }
        span
    }

    pub fn submodule_generated(&self, seeds: &[SparseVec]) -> Result<(YdModule, Matrix)> {
        self.submodule(&self.generated_subspace(seeds))
    }

    /// `V / sub` in the basis of the non-pivot coordinates of `sub`, with the
    /// projection matrix.
    pub fn quotient(&self, sub: &Subspace) -> Result<(YdModule, Matrix)> {
        let gens = self.generator_matrices();
        if sub.basis().iter().any(|b| gens.iter().any(|g| !sub.contains(&g.mul_vec(b)))) {
            return Err(Error::NotASubspace("subspace is not a submodule".into()));
        }
        let f = self.field();
        let action = actions::quotient(&self.action, sub);
        let coaction = actions::quotient(&self.coaction, sub);
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| sub.quotient_coords(&SparseVec::unit(j, f))).collect();
        let dim = self.dim - sub.dim();
        let proj = Matrix::from_cols(f, dim, &cols);
        Ok((YdModule { double: self.double.clone(), dim, action, coaction }, proj))
    }

    /// Same module in the basis given by the columns of the invertible `p`.
    pub fn rebase(&self, p: &Matrix) -> Result<YdModule> {
        Ok(YdModule {
            double: self.double.clone(),
            dim: self.dim,
            action: actions::rebase(&self.action, p)?,
            coaction: actions::rebase(&self.coaction, p)?,
        })
    }

    /// `self (+) other`, with `other` in the trailing coordinates.
    pub fn direct_sum(&self, other: &YdModule) -> Result<YdModule> {
        self.check_same(other)?;
        let f = self.field();
        let (m, n) = (self.dim, other.dim);
        let block = |a: &Matrix, b: &Matrix| {
            Matrix::from_triplets(
                f,
                m + n,
                m + n,
                a.triplets()
                    .map(|(i, j, c)| (i, j, c.clone()))
                    .chain(b.triplets().map(|(i, j, c)| (m + i, m + j, c.clone())))
                    .collect::<Vec<_>>(),
            )
        };
        let action = self.action.iter().zip(&other.action).map(|(a, b)| block(a, b)).collect();
        let coaction = self.coaction.iter().zip(&other.coaction).map(|(a, b)| block(a, b)).collect();
        Ok(YdModule { double: self.double.clone(), dim: m + n, action, coaction })
    }

    /// Same algebra and identical structure matrices.
    pub fn same_structure(&self, other: &YdModule) -> bool {
        Arc::ptr_eq(&self.double, &other.double) && self.action == other.action && self.coaction == other.coaction
    }

    /// Forgets the coaction: the underlying `H`-module.
    pub fn restriction(&self) -> &[Matrix] {
        &self.action
    }

    /// Replaces the coaction, keeping the action. Used to build non-examples.
    pub fn with_coaction(&self, coaction: Vec<Matrix>) -> Result<YdModule> {
        Self::from_parts(self.double.clone(), self.action.clone(), coaction)
    }
}
