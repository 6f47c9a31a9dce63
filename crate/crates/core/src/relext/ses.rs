use crate::error::{Error, Result};
use crate::linalg::{rank, solve_with, Matrix, PivotOrder};
use crate::yd::{intertwiners, YdModule};

/// `H`-generator matrices of the underlying `H`-module.
pub(crate) fn h_generators(v: &YdModule) -> Vec<&Matrix> {
    v.double().algebra().generators().iter().map(|&g| v.action(g)).collect()
}

/// Basis of `Hom_H(src, tgt)` after forgetting the coactions.
pub(crate) fn h_homs(src: &YdModule, tgt: &YdModule) -> Vec<Matrix> {
    intertwiners(src.field(), &h_generators(src), &h_generators(tgt), src.dim(), tgt.dim())
}

/// The combination `sum_k c_k basis_k` whose image under `image` equals
/// `target`, with the free coefficients fixed by `order`.
fn solve_combination(
    basis: &[Matrix],
    image: impl Fn(&Matrix) -> Matrix,
    target: &Matrix,
    order: PivotOrder,
) -> Option<Matrix> {
    let f = target.field();
    let first = basis.first()?;
    let cols: Vec<_> = basis.iter().map(|b| image(b).flatten()).collect();
    let rows = target.nrows() * target.ncols();
    let a = Matrix::from_cols(f, rows, &cols);
    let rhs = Matrix::from_cols(f, rows, &[target.flatten()]);
    let coeffs = solve_with(&a, &rhs, order).ok()?.col(0);
    let mut out = Matrix::zeros(f, first.nrows(), first.ncols());
    for (k, c) in coeffs.iter() {
        out = out.add(&basis[k].scale(c));
    }
    Some(out)
}

fn require_morphism(src: &YdModule, tgt: &YdModule, map: &Matrix, what: &str) -> Result<()> {
    if map.shape() != (tgt.dim(), src.dim()) {
        return Err(Error::Dimension(format!(
            "{what} is {:?}, expected {}x{}",
            map.shape(),
            tgt.dim(),
            src.dim()
        )));
    }
    if !src.is_morphism(tgt, map) {
        return Err(Error::NotEquivariant(what.into()));
    }
    Ok(())
}

/// Whether the `D(H)`-map `f: src -> tgt` is allowable, i.e. `f s f = f` for
/// some `H`-linear `s: tgt -> src`; returns such an `s`.
pub fn is_allowable(src: &YdModule, tgt: &YdModule, f: &Matrix) -> Result<Option<Matrix>> {
    require_morphism(src, tgt, f, "map")?;
    let basis = h_homs(tgt, src);
    if f.is_zero() {
        return Ok(Some(Matrix::zeros(src.field(), src.dim(), tgt.dim())));
    }
    Ok(solve_combination(&basis, |s| f.mul(s).mul(f), f, PivotOrder::Forward))
}

/// A short exact sequence `0 -> W -> M -> V -> 0` of Yetter-Drinfeld modules
/// that splits over `H`, with an `H`-linear section of the projection as
/// witness.
#[derive(Clone, Debug)]
pub struct AllowableSES {
    sub: YdModule,
    middle: YdModule,
    quotient: YdModule,
    incl: Matrix,
    proj: Matrix,
    splitting: Matrix,
}

impl AllowableSES {
    pub fn new(sub: YdModule, middle: YdModule, quotient: YdModule, incl: Matrix, proj: Matrix) -> Result<Self> {
        for (a, b) in [(&sub, &middle), (&middle, &quotient)] {
            if !std::sync::Arc::ptr_eq(a.double(), b.double()) {
                return Err(Error::AlgebraMismatch(format!("{:?} vs {:?}", a.double(), b.double())));
            }
        }
        require_morphism(&sub, &middle, &incl, "inclusion")?;
        require_morphism(&middle, &quotient, &proj, "projection")?;
        if rank(&incl) != sub.dim() {
            return Err(Error::NotAllowable("inclusion is not injective".into()));
        }
        if rank(&proj) != quotient.dim() {
            return Err(Error::NotAllowable("projection is not surjective".into()));
        }
        if !proj.mul(&incl).is_zero() || sub.dim() + quotient.dim() != middle.dim() {
            return Err(Error::NotAllowable("not exact in the middle".into()));
        }
        let splitting = section_of(&middle, &quotient, &proj, PivotOrder::Forward)?;
        Ok(AllowableSES { sub, middle, quotient, incl, proj, splitting })
    }

    /// Uses the unique (up to scalar) maps `W -> M` and `M -> V`.
    pub fn with_ends(sub: YdModule, middle: YdModule, quotient: YdModule) -> Result<Self> {
        let unique = |a: &YdModule, b: &YdModule, what: &str| -> Result<Matrix> {
            let mut basis = a.hom_basis(b)?;
            match basis.len() {
                1 => Ok(basis.remove(0)),
                k => Err(Error::InvalidParameter(format!("{what} space has dimension {k}; give the maps explicitly"))),
            }
        };
        let incl = unique(&sub, &middle, "inclusion")?;
        let proj = unique(&middle, &quotient, "projection")?;
        Self::new(sub, middle, quotient, incl, proj)
    }

    /// `0 -> W -> W (+) V -> V -> 0`.
    pub fn split(sub: YdModule, quotient: YdModule) -> Result<Self> {
        let f = sub.field();
        let (m, n) = (sub.dim(), quotient.dim());
        let middle = sub.direct_sum(&quotient)?;
        let incl = Matrix::from_triplets(f, m + n, m, (0..m).map(|i| (i, i, crate::CycloNum::one(f))));
        let proj = Matrix::from_triplets(f, n, m + n, (0..n).map(|i| (i, m + i, crate::CycloNum::one(f))));
        Self::new(sub, middle, quotient, incl, proj)
    }

    pub fn sub(&self) -> &YdModule {
        &self.sub
    }

    pub fn middle(&self) -> &YdModule {
        &self.middle
    }

    pub fn quotient(&self) -> &YdModule {
        &self.quotient
    }

    pub fn incl(&self) -> &Matrix {
        &self.incl
    }

    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    /// The `H`-linear section found at construction.
    pub fn splitting(&self) -> &Matrix {
        &self.splitting
    }

    /// An `H`-linear `s` with `proj s = id`; `order` picks which one when
    /// there are several.
    pub fn section(&self, order: PivotOrder) -> Result<Matrix> {
        section_of(&self.middle, &self.quotient, &self.proj, order)
    }
}

/// A map `x: src -> tgt` commuting with the paired generator matrices and
/// with `post x = value`, solved entrywise so that `order` decides which
/// entries are set to zero when the solution is not unique.
pub(crate) fn solve_intertwiner(
    gens: &[(&Matrix, &Matrix)],
    post: &Matrix,
    value: &Matrix,
    order: PivotOrder,
) -> Option<Matrix> {
    let f = post.field();
    let (m, n) = (post.ncols(), value.ncols());
    let id_m = Matrix::identity(f, m);
    let id_n = Matrix::identity(f, n);
    // row-major vec(A X B) = (A (x) B^T) vec(X)
    let mut system = post.kron(&id_n);
    for (a_tgt, a_src) in gens {
        system = system.vstack(&a_tgt.kron(&id_n).sub(&id_m.kron(&a_src.transpose())));
    }
    let rhs = value.flatten();
    let x = solve_with(&system, &Matrix::from_cols(f, system.nrows(), &[rhs]), order).ok()?;
    Some(Matrix::unflatten(f, m, n, &x.col(0)))
}

fn section_of(middle: &YdModule, quotient: &YdModule, proj: &Matrix, order: PivotOrder) -> Result<Matrix> {
    let gens: Vec<_> = h_generators(middle).into_iter().zip(h_generators(quotient)).collect();
    let id = Matrix::identity(quotient.field(), quotient.dim());
    solve_intertwiner(&gens, proj, &id, order)
        .ok_or_else(|| Error::NotAllowable("projection has no H-linear section".into()))
}
