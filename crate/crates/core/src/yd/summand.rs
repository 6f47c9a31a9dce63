use super::hom::intertwiners;
use super::module::YdModule;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::linalg::{dense, kernel, rank, solve, solve_vec, Matrix, SparseVec, Subspace};

/// Outcome of the endomorphism-ring analysis.
#[derive(Clone, Debug)]
pub enum Verdict {
    Indecomposable,
    /// A nontrivial idempotent endomorphism witnessing a splitting.
    Decomposable(Matrix),
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Indecomposable => "indecomposable",
            Verdict::Decomposable(_) => "decomposable",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EndReport {
    pub end_dim: usize,
    pub rad_dim: usize,
    pub verdict: Verdict,
}

/// Findings of a relatively projective cover check. `certified` holds iff
/// every individual check passed.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub dim: usize,
    pub is_summand: bool,
    pub surjective: bool,
    pub h_split: bool,
    pub indecomposable: bool,
    pub nonzero: bool,
    pub morphism: bool,
}

impl CoverReport {
    pub fn certified(&self) -> bool {
        self.is_summand && self.surjective && self.h_split && self.indecomposable && self.nonzero && self.morphism
    }
}

impl YdModule {
    /// For a submodule `incl: S -> V`, a morphism `pi: V -> V` with
    /// `pi incl = incl` and image inside `S`; `ker pi` is then a complement.
    pub fn summand_complement(&self, sub: &YdModule, incl: &Matrix) -> Result<Matrix> {
        let f = self.field();
        if sub.dim() == 0 || incl.ncols() == 0 {
            return Ok(Matrix::zeros(f, self.dim(), self.dim()));
        }
        if !sub.is_morphism(self, incl) || rank(incl) != sub.dim() {
            return Err(Error::NotASubspace("inclusion is not an injective morphism".into()));
        }
        let retractions = self.hom_basis(sub)?;
        let cols: Vec<SparseVec> = retractions.iter().map(|q| q.mul(incl).flatten()).collect();
        if cols.is_empty() {
            return Err(Error::NotASummand);
        }
        let a = Matrix::from_cols(f, sub.dim() * sub.dim(), &cols);
        let target = Matrix::identity(f, sub.dim()).flatten();
        let t = solve_vec(&a, &target).map_err(|_| Error::NotASummand)?;
        let mut q = Matrix::zeros(f, sub.dim(), self.dim());
        for (k, c) in t.iter() {
            q = q.add(&retractions[k].scale(c));
        }
        Ok(incl.mul(&q))
    }

    /// `End(V)`, its radical as the kernel of the trace form, and a verdict.
    pub fn end_radical_indecomposable(&self) -> EndReport {
        let end = intertwiners(self.field(), &self.generator_matrices(), &self.generator_matrices(), self.dim(), self.dim());
        analyze_endomorphisms(self.field(), &end, self.dim())
    }

    /// Splits `V` into indecomposable summands as far as idempotents can be
    /// found, returning each summand with its inclusion.
    pub fn decompose(&self) -> Result<Vec<(YdModule, Matrix)>> {
        let f = self.field();
        let report = self.end_radical_indecomposable();
        let Verdict::Decomposable(e) = report.verdict else {
            return Ok(vec![(self.clone(), Matrix::identity(f, self.dim()))]);
        };
        let mut out = Vec::new();
        for part in [e.clone(), Matrix::identity(f, self.dim()).sub(&e)] {
            let sub = Subspace::span(f, self.dim(), part.cols());
            let (piece, incl) = self.submodule(&sub)?;
            for (s, i) in piece.decompose()? {
                out.push((s, incl.mul(&i)));
            }
        }
        Ok(out)
    }

    /// Checks that `(self, cover)` is a relatively projective cover of
    /// `target`: `self` is a summand of `ambient` (an induced module) via
    /// `incl`, `cover` is a nonzero surjective morphism with an `H`-linear
    /// section, and `self` is indecomposable.
    pub fn verify_rel_proj_cover(
        &self,
        target: &YdModule,
        cover: &Matrix,
        ambient: &YdModule,
        incl: &Matrix,
    ) -> CoverReport {
        let f = self.field();
        let is_summand = ambient.summand_complement(self, incl).is_ok();
        let morphism = self.is_morphism(target, cover);
        let surjective = rank(cover) == target.dim();
        let h = self.double().algebra();
        let src: Vec<&Matrix> = h.generators().iter().map(|&g| target.action(g)).collect();
        let tgt: Vec<&Matrix> = h.generators().iter().map(|&g| self.action(g)).collect();
        let sections = intertwiners(f, &src, &tgt, target.dim(), self.dim());
        let h_split = has_right_inverse(cover, &sections, target.dim());
        let indecomposable = matches!(self.end_radical_indecomposable().verdict, Verdict::Indecomposable);
        CoverReport { dim: self.dim(), is_summand, surjective, h_split, indecomposable, nonzero: !cover.is_zero(), morphism }
    }
}

/// Whether some combination `s` of `candidates` satisfies `map s = I`.
pub(crate) fn has_right_inverse(map: &Matrix, candidates: &[Matrix], n: usize) -> bool {
    let f = map.field();
    if candidates.is_empty() {
        return n == 0;
    }
    let cols: Vec<SparseVec> = candidates.iter().map(|s| map.mul(s).flatten()).collect();
    let a = Matrix::from_cols(f, n * n, &cols);
    solve_vec(&a, &Matrix::identity(f, n).flatten()).is_ok()
}

/// Trace-form radical and Fitting-idempotent search on an endomorphism
/// algebra given by a basis of `n x n` matrices.
pub(crate) fn analyze_endomorphisms(field: &'static crate::CycloField, end: &[Matrix], n: usize) -> EndReport {
    let k = end.len();
    let gram: dense::Dense = (0..k).map(|i| (0..k).map(|j| end[i].mul(&end[j]).trace()).collect()).collect();
    let rad_dim = k - dense::rank_dense(&gram);
    let verdict = if k - rad_dim == 1 {
        Verdict::Indecomposable
    } else {
        find_idempotent(field, end, n).map_or(Verdict::Inconclusive, Verdict::Decomposable)
    };
    EndReport { end_dim: k, rad_dim, verdict }
}

/// For `Y = B - lambda I` with `B` a basis endomorphism and `lambda` zero or
/// a diagonal entry of `B`, the Fitting decomposition `im Y^n (+) ker Y^n` is
/// a splitting whenever both parts are nonzero.
fn find_idempotent(field: &'static crate::CycloField, end: &[Matrix], n: usize) -> Option<Matrix> {
    let id = Matrix::identity(field, n);
    for b in end {
        let mut shifts: Vec<CycloNum> = vec![CycloNum::zero(field)];
        for i in 0..n {
            let c = b.get(i, i);
            if !shifts.contains(&c) {
                shifts.push(c);
            }
        }
        for lambda in shifts {
            let y = b.sub(&id.scale(&lambda));
            let mut p = y.clone();
            let mut e = 1;
            while e < n {
                p = p.mul(&p);
                e *= 2;
            }
            let r = rank(&p);
            if r == 0 || r == n {
                continue;
            }
            let image = Subspace::span(field, n, p.cols());
            let null = kernel(&p);
            let mut cols = image.basis().to_vec();
            cols.extend(null);
            let basis = Matrix::from_cols(field, n, &cols);
            let proj_cols: Vec<SparseVec> =
                (0..n).map(|j| if j < r { SparseVec::unit(j, field) } else { SparseVec::new() }).collect();
            let diag = Matrix::from_cols(field, n, &proj_cols);
            // e = B diag B^-1, i.e. e B = B diag
            let e = solve(&basis.transpose(), &basis.mul(&diag).transpose()).ok()?.transpose();
            return Some(e);
        }
    }
    None
}
