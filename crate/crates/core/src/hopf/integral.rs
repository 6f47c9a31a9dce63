use super::algebra::HopfAlgebra;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::linalg::{common_kernel, LinearOp, SparseVec};

/// Two-sided cointegral `L` with `hL = Lh = epsilon(h) L`, normalized so
/// `epsilon(L) = 1` when possible and otherwise so its last nonzero
/// coordinate is 1.
pub fn cointegral(h: &HopfAlgebra) -> Result<SparseVec> {
    let d = h.dim();
    let ops: Vec<Box<LinearOp<'_>>> = (0..d)
        .flat_map(|i| {
            let left: Box<LinearOp<'_>> = Box::new(move |x: &SparseVec| {
                let mut y = h.mul(&h.basis_elem(i), x);
                y.sub_scaled(h.counit_of(i), x);
                y
            });
            let right: Box<LinearOp<'_>> = Box::new(move |x: &SparseVec| {
                let mut y = h.mul(x, &h.basis_elem(i));
                y.sub_scaled(h.counit_of(i), x);
                y
            });
            [left, right]
        })
        .collect();
    let refs: Vec<&LinearOp<'_>> = ops.iter().map(|b| b.as_ref()).collect();
    let space = common_kernel(h.field(), d, &refs);
    match space.dim() {
        0 => return Err(Error::NotUnimodular),
        1 => {}
        k => return Err(Error::AmbiguousIntegral(k)),
    }
    let l = space.basis()[0].clone();
    let e = h.counit_value(&l);
    Ok(if e.is_zero() { l } else { l.scale(&e.inv()?) })
}

/// `e_l = (1/m) sum_j zeta^(-jl) g^j` for a grouplike `g` of order `m`,
/// with `zeta` a primitive `m`-th root of unity in the ground field.
pub fn grouplike_fourier_idempotents(h: &HopfAlgebra, g: &SparseVec, m: usize) -> Result<Vec<SparseVec>> {
    if !is_grouplike_elem(h, g) {
        return Err(Error::NotGrouplike(h.format_element(g)));
    }
    fourier_idempotents(h, g, m)
}

/// Same decomposition for any element `u` with `u^m = 1`; `u` acts on `e_l`
/// by `zeta^l` from either side. Needed for elements like a diagonal matrix
/// coefficient in a dual algebra, which has finite order without being grouplike.
pub fn fourier_idempotents(h: &HopfAlgebra, u: &SparseVec, m: usize) -> Result<Vec<SparseVec>> {
    let f = h.field();
    let n = f.conductor() as usize;
    if m == 0 || (!n.is_multiple_of(m) && !(m == 2 && n == 1)) {
        return Err(Error::MissingRootOfUnity { conductor: f.conductor(), order: m });
    }
    if h.power(u, m) != *h.one() {
        return Err(Error::InvalidParameter(format!("{} does not have order dividing {m}", h.format_element(u))));
    }
    let zeta = if m == 2 && n == 1 { CycloNum::from_int(f, -1) } else { CycloNum::zeta_pow(f, (n / m) as i64) };
    let inv_m = CycloNum::frac(f, 1, m as i64);
    let powers: Vec<SparseVec> = (0..m).map(|j| h.power(u, j)).collect();
    Ok((0..m)
        .map(|l| {
            let mut acc = SparseVec::new();
            for (j, uj) in powers.iter().enumerate() {
                let c = &zeta.pow(-((j * l) as i64)) * &inv_m;
                acc.add_scaled(&c, uj);
            }
            acc
        })
        .collect())
}

fn is_grouplike_elem(h: &HopfAlgebra, g: &SparseVec) -> bool {
    let d = h.dim();
    let cop = h.coproduct_at(1, 0, g);
    let mut tensor = crate::linalg::Accum::new();
    for (i, a) in g.iter() {
        for (j, b) in g.iter() {
            tensor.add_owned(i * d + j, a * b);
        }
    }
    cop == tensor.finish() && h.counit_value(g).is_one()
}
