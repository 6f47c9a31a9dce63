//! Representations of a single Hopf algebra stored as one action matrix per
//! basis element. Shared by Yetter-Drinfeld modules (two such actions) and
//! bimodules.

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{solve, Accum, Matrix, SparseVec, Subspace};

/// `rho(x)` for an arbitrary element `x`.
pub fn act(alg: &HopfAlgebra, rho: &[Matrix], x: &SparseVec) -> Matrix {
    let m = rho[0].nrows();
    let mut out = Matrix::zeros(alg.field(), m, m);
    for (i, c) in x.iter() {
        out = out.add(&rho[i].scale(c));
    }
    out
}

/// Extends an action given on elements that generate the algebra to every
/// basis element, checking it against the given generator matrices.
pub fn extend(alg: &HopfAlgebra, dim: usize, gens: &[(SparseVec, Matrix)]) -> Result<Vec<Matrix>> {
    let f = alg.field();
    let d = alg.dim();
    for (_, g) in gens {
        if g.shape() != (dim, dim) {
            return Err(Error::Dimension(format!("generator matrix {:?}, module dimension {dim}", g.shape())));
        }
    }
    let mut elems = vec![alg.one().clone()];
    let mut mats = vec![Matrix::identity(f, dim)];
    let mut span = Subspace::span(f, d, elems.clone());
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && span.dim() < d {
        let mut next = Vec::new();
        for &k in &frontier {
            for (g, gm) in gens {
                let e = alg.mul(g, &elems[k]);
                if span.contains(&e) {
                    continue;
                }
                span = span.sum(&Subspace::span(f, d, vec![e.clone()]));
                elems.push(e);
                mats.push(gm.mul(&mats[k]));
                next.push(elems.len() - 1);
            }
        }
        frontier = next;
    }
    if span.dim() < d {
        return Err(Error::InvalidModule(format!(
            "generators span a {}-dimensional subalgebra of {}",
            span.dim(),
            alg.name()
        )));
    }
    let words = Matrix::from_cols(f, d, &elems);
    let coords = solve(&words, &Matrix::identity(f, d))?.transpose();
    let rho: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut out = Matrix::zeros(f, dim, dim);
            for (k, c) in coords.row(i).iter() {
                out = out.add(&mats[k].scale(c));
            }
            out
        })
        .collect();
    for (g, gm) in gens {
        if act(alg, &rho, g) != *gm {
            return Err(Error::InvalidModule(format!(
                "matrices violate a relation involving {}",
                alg.format_element(g)
            )));
        }
    }
    if let Some(w) = module_failure(alg, &rho) {
        return Err(Error::InvalidModule(w));
    }
    Ok(rho)
}

/// First violation of unitality or multiplicativity. Checking `rho(g h) =
/// rho(g) rho(h)` for generators `g` suffices by induction on words.
pub fn module_failure(alg: &HopfAlgebra, rho: &[Matrix]) -> Option<String> {
    let f = alg.field();
    let m = rho.first()?.nrows();
    if act(alg, rho, alg.one()) != Matrix::identity(f, m) {
        return Some("unit does not act as the identity".into());
    }
    for &g in alg.generators() {
        for j in 0..alg.dim() {
            if act(alg, rho, alg.product(g, j)) != rho[g].mul(&rho[j]) {
                return Some(format!("rho({}) rho({}) != rho({} {})", alg.label(g), alg.label(j), alg.label(g), alg.label(j)));
            }
        }
    }
    None
}

/// Action of basis element `i` on `V (x) W` through the coproduct.
pub fn tensor_action(alg: &HopfAlgebra, i: usize, a: &[Matrix], b: &[Matrix]) -> Matrix {
    let d = alg.dim();
    let f = alg.field();
    let (ma, mb) = (a[0].nrows(), b[0].nrows());
    let mut acc: Vec<Accum> = (0..ma * mb).map(|_| Accum::new()).collect();
    for (pq, c) in alg.coproduct(i).iter() {
        let (p, q) = (pq / d, pq % d);
        for (r, ra) in a[p].rows().iter().enumerate() {
            for (s, rb) in b[q].rows().iter().enumerate() {
                let row = &mut acc[r * mb + s];
                for (j, x) in ra.iter() {
                    let cx = c * x;
                    for (l, y) in rb.iter() {
                        row.add_owned(j * mb + l, &cx * y);
                    }
                }
            }
        }
    }
    Matrix::from_rows(f, ma * mb, acc.into_iter().map(Accum::finish).collect())
}

pub fn tensor_actions(alg: &HopfAlgebra, a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    use rayon::prelude::*;
    (0..alg.dim()).into_par_iter().map(|i| tensor_action(alg, i, a, b)).collect()
}

/// Action on the dual space, `(h f)(v) = f(S(h) v)`.
pub fn dual_actions(alg: &HopfAlgebra, rho: &[Matrix]) -> Vec<Matrix> {
    (0..alg.dim()).map(|i| act(alg, rho, alg.antipode_of(i)).transpose()).collect()
}

/// Restriction to an invariant subspace, in the subspace's stored basis.
pub fn restrict(rho: &[Matrix], sub: &Subspace) -> Result<Vec<Matrix>> {
    let f = sub.field();
    rho.iter()
        .map(|a| {
            let cols = sub
                .basis()
                .iter()
                .map(|b| sub.coords(&a.mul_vec(b)).ok_or_else(|| Error::NotASubspace("subspace is not stable".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_cols(f, sub.dim(), &cols))
        })
        .collect()
}

/// Induced action on `ambient / sub`, in the basis of `complement_indices`.
pub fn quotient(rho: &[Matrix], sub: &Subspace) -> Vec<Matrix> {
    let f = sub.field();
    let comp = sub.complement_indices();
    rho.iter()
        .map(|a| {
            let cols: Vec<SparseVec> =
                comp.iter().map(|&j| sub.quotient_coords(&a.col(j))).collect();
            Matrix::from_cols(f, comp.len(), &cols)
        })
        .collect()
}

/// Conjugates by an invertible `p` whose columns are the new basis.
pub fn rebase(rho: &[Matrix], p: &Matrix) -> Result<Vec<Matrix>> {
    rho.iter().map(|a| solve(p, &a.mul(p))).collect()
}
