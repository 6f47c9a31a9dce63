use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Accum, Matrix, SparseVec};
use crate::yd::YdModule;
use std::collections::HashMap;

/// One step `P_n = ((H*)^{(x)(n+1)} (x) V)_coad` of the bar resolution of `V`
/// with its differential `d_n: P_n -> P_(n-1)`, where `P_(-1) = V`.
#[derive(Clone, Debug)]
pub struct BarStep {
    pub degree: usize,
    pub module: YdModule,
    pub differential: Matrix,
}

/// Row `y` is `S(h_p) h_y h_r`: the matrix of `phi -> phi(S(h_p) ? h_r)` in
/// dual coordinates.
fn sandwich(h: &HopfAlgebra, p: usize, r: usize) -> Matrix {
    let left = h.antipode_of(p);
    let right = h.basis_elem(r);
    let rows = (0..h.dim()).map(|y| h.mul(&h.mul(left, &h.basis_elem(y)), &right)).collect();
    Matrix::from_rows(h.field(), h.dim(), rows)
}

/// `((H*)^{(x) k} (x) V)_coad` for `k >= 1`: `h` acts on the `j`-th dual
/// factor by `phi -> phi(S(h_(j)) ? h_(2k+2-j))` and on `V` by `h_(k+1)`;
/// `(H*)^op` multiplies the first factor from the left. Basis index
/// `(a_1 ... a_k)` in base `d`, then `v`.
pub fn bar_module(v: &YdModule, k: usize) -> Result<YdModule> {
    if k == 0 {
        return Err(Error::InvalidParameter("bar modules need at least one dual factor".into()));
    }
    let double = v.double();
    let h = double.algebra();
    let hd = double.dual();
    let f = h.field();
    let d = h.dim();
    let m = v.dim();
    let mut cache: HashMap<(usize, usize), Matrix> = HashMap::new();
    let mut action = Vec::with_capacity(d);
    for i in 0..d {
        let mut out = Matrix::zeros(f, d.pow(k as u32) * m, d.pow(k as u32) * m);
        for (idx, c) in h.iterated_coproduct(2 * k as i32, &h.basis_elem(i)).iter() {
            let digits = h.split_index(idx, 2 * k + 1);
            let mut term = Matrix::identity(f, 1).scale(c);
            for j in 0..k {
                let (p, r) = (digits[j], digits[2 * k - j]);
                let s = cache.entry((p, r)).or_insert_with(|| sandwich(h, p, r));
                term = term.kron(s);
            }
            out = out.add(&term.kron(v.action(digits[k])));
        }
        action.push(out);
    }
    let rest = Matrix::identity(f, d.pow(k as u32 - 1) * m);
    let coaction = (0..d)
        .map(|b| {
            let cols: Vec<SparseVec> = (0..d).map(|a| hd.product(b, a).clone()).collect();
            Matrix::from_cols(f, d, &cols).kron(&rest)
        })
        .collect();
    YdModule::from_parts(double.clone(), action, coaction)
}

/// `d_n(phi_1 .. phi_(n+1) v) = phi_1 .. phi_n (phi_(n+1) v)
///   + sum_i (-1)^(n-i+1) phi_1 .. (phi_i * phi_(i+1)) .. phi_(n+1) v`.
pub fn bar_differential(v: &YdModule, n: usize) -> Matrix {
    let double = v.double();
    let h = double.algebra();
    let hd = double.dual();
    let f = h.field();
    let d = h.dim();
    let m = v.dim();
    let by_column: Vec<Matrix> = (0..d).map(|a| v.dual_action(a).transpose()).collect();
    let src = d.pow(n as u32 + 1) * m;
    let tgt = d.pow(n as u32) * m;
    let cols: Vec<SparseVec> = (0..src)
        .map(|col| {
            let (a, vi) = (col / m, col % m);
            let digits = h.split_index(a, n + 1);
            let mut acc = Accum::new();
            let prefix = a / d;
            for (w, c) in by_column[digits[n]].row(vi).iter() {
                acc.add(prefix * m + w, c);
            }
            for i in 0..n {
                let positive = (n - i).is_multiple_of(2);
                for (z, c) in hd.product(digits[i], digits[i + 1]).iter() {
                    let mut merged = Vec::with_capacity(n);
                    merged.extend_from_slice(&digits[..i]);
                    merged.push(z);
                    merged.extend_from_slice(&digits[i + 2..]);
                    let row = h.join_index(&merged) * m + vi;
                    if positive {
                        acc.add(row, c);
                    } else {
                        acc.add(row, &-c.clone());
                    }
                }
            }
            acc.finish()
        })
        .collect();
    Matrix::from_cols(f, tgt, &cols)
}

/// Module and differential of step `n`, with the differential checked to be
/// `D(H)`-linear.
pub fn bar_step(v: &YdModule, n: usize) -> Result<BarStep> {
    let module = bar_module(v, n + 1)?;
    let differential = bar_differential(v, n);
    let below = if n == 0 { v.clone() } else { bar_module(v, n)? };
    if !module.is_morphism(&below, &differential) {
        return Err(Error::NotEquivariant(format!("bar differential d_{n}")));
    }
    Ok(BarStep { degree: n, module, differential })
}
