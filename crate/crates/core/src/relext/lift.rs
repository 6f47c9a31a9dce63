use super::bar::bar_differential;
use super::ses::{solve_intertwiner, AllowableSES};
use crate::dy::{compose, Cochain, DyComplex, Mode};
use crate::error::{Error, Result};
use crate::linalg::{solve_with, Accum, Matrix, PivotOrder, SparseVec};
use crate::yd::YdModule;

/// The comparison data obtained by lifting the identity of `V` along an
/// allowable sequence `0 -> W -> M -> V -> 0`.
#[derive(Clone, Debug)]
pub struct Lift {
    /// `H`-linear section `v -> eta_0(epsilon (x) v)` of the projection.
    pub section: Matrix,
    /// `P_0 -> M`, equal to `phi (x) v -> phi . s(v)`.
    pub eta0: Matrix,
    /// `P_1 -> W` with `incl o cocycle = eta0 o d_1`; a cocycle in
    /// `Hom_{D(H)}(P_., W)`.
    pub cocycle: Matrix,
    /// Its image in the DY complex of `(V, W)`.
    pub dy: Cochain,
}

fn require_equivariant(src: &YdModule, tgt: &YdModule, map: &Matrix, what: &str) -> Result<()> {
    if src.is_morphism(tgt, map) {
        Ok(())
    } else {
        Err(Error::LiftFailed(format!("{what} is not D(H)-linear")))
    }
}

fn augmented_p0(ses: &AllowableSES) -> Result<YdModule> {
    let v = ses.quotient();
    YdModule::induced(v.double().clone(), v.actions())
}

/// Lifts the identity of the quotient to the bar resolution and transports
/// the degree-one component into the DY complex. `eta_0` is solved for
/// entrywise; `order` decides which entries are zeroed when a choice is left.
pub fn lift_ses_to_bar_cocycle(ses: &AllowableSES, order: PivotOrder) -> Result<Lift> {
    let p0 = augmented_p0(ses)?;
    let gens: Vec<_> = ses.middle().generator_matrices().into_iter().zip(p0.generator_matrices()).collect();
    let eta0 = solve_intertwiner(&gens, ses.proj(), &bar_differential(ses.quotient(), 0), order)
        .ok_or_else(|| Error::LiftFailed("no D(H)-linear lift of the augmentation".into()))?;
    lift_from_eta0(ses, eta0)
}

/// The maps `P_0 -> M` by which two lifts can differ: `incl o k` for `k` in
/// a basis of `Hom_{D(H)}(P_0, W)`, which is `Hom_H(V, W)` by adjunction.
pub fn lift_ambiguity(ses: &AllowableSES) -> Result<Vec<Matrix>> {
    Ok(augmented_p0(ses)?.hom_basis(ses.sub())?.iter().map(|k| ses.incl().mul(k)).collect())
}

/// Completes a given `eta_0: P_0 -> M` covering the augmentation.
pub fn lift_from_eta0(ses: &AllowableSES, eta0: Matrix) -> Result<Lift> {
    let (w, m, v) = (ses.sub(), ses.middle(), ses.quotient());
    let h = v.double().algebra();
    let f = h.field();
    let p0 = augmented_p0(ses)?;
    require_equivariant(&p0, m, &eta0, "eta_0")?;
    if ses.proj().mul(&eta0) != bar_differential(v, 0) {
        return Err(Error::LiftFailed("eta_0 does not cover the augmentation".into()));
    }
    // s(v) = eta_0(epsilon (x) v)
    let unit = Matrix::from_cols(f, h.dim(), &[h.counit().row(0).clone()]);
    let section = eta0.mul(&unit.kron(&Matrix::identity(f, v.dim())));
    let target = eta0.mul(&bar_differential(v, 1));
    let cocycle = solve_with(ses.incl(), &target, PivotOrder::Forward)
        .map_err(|_| Error::LiftFailed("eta_0 d_1 does not land in the submodule".into()))?;
    if !cocycle.mul(&bar_differential(v, 2)).is_zero() {
        return Err(Error::LiftFailed("lift does not vanish on boundaries".into()));
    }
    let dy = gamma_inverse(&cocycle, 1, v, w)?;
    Ok(Lift { section, eta0, cocycle, dy })
}

/// `v -> sum h_(i_1) .. h_(i_n) (x) alpha(epsilon (x) h^(i_n) .. h^(i_1) (x) v)`
/// for `alpha: P_n -> W` given as a matrix, checked to be a DY cocycle.
pub fn gamma_inverse(alpha: &Matrix, n: usize, v: &YdModule, w: &YdModule) -> Result<Cochain> {
    let h = v.double().algebra();
    let (source_dim, target_dim) = (v.dim(), w.dim());
    let mut cols: Vec<Accum> = (0..source_dim).map(|_| Accum::new()).collect();
    for (row, col, c) in alpha.triplets() {
        let (idx, vi) = (col / source_dim, col % source_dim);
        let mut digits = h.split_index(idx, n + 1);
        let counit = h.counit_of(digits[0]);
        if counit.is_zero() {
            continue;
        }
        let mut factors = digits.split_off(1);
        factors.reverse();
        cols[vi].add_owned(h.join_index(&factors) * target_dim + row, counit * c);
    }
    let cols: Vec<SparseVec> = cols.into_iter().map(Accum::finish).collect();
    let dy = Cochain::new(n, target_dim, Matrix::from_cols(h.field(), h.tensor_dim(n) * target_dim, &cols));
    let complex = DyComplex::new(v.clone(), w.clone(), Mode::Identity)?;
    if !complex.is_cocycle(&dy) {
        return Err(Error::NotACocycle(format!("image of a bar cocycle: {}", dy.display(h))));
    }
    Ok(dy)
}

/// The DY cocycle of the Yoneda composite `S_1 o S_2 o .. o S_n`, where the
/// quotient of each sequence is the submodule of the next.
pub fn sequence_to_dy(seqs: &[AllowableSES], order: PivotOrder) -> Result<Cochain> {
    let Some(last) = seqs.last() else {
        return Err(Error::InvalidParameter("no sequences to compose".into()));
    };
    for (k, pair) in seqs.windows(2).enumerate() {
        if !pair[0].quotient().same_structure(pair[1].sub()) {
            return Err(Error::ChainMismatch(format!(
                "quotient of sequence {} is not the submodule of sequence {}",
                k + 1,
                k + 2
            )));
        }
    }
    let h = last.sub().double().algebra();
    let mut acc = lift_ses_to_bar_cocycle(last, order)?.dy;
    for ses in seqs[..seqs.len() - 1].iter().rev() {
        acc = compose(h, &lift_ses_to_bar_cocycle(ses, order)?.dy, &acc)?;
    }
    Ok(acc)
}
