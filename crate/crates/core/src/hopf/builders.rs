//! The shipped Hopf algebras, built from the left-regular action of their
//! generators on a PBW-type basis together with the Hopf data on generators.

use super::algebra::HopfAlgebra;
use crate::cyclo::{q_bracket, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{Accum, Matrix, SparseVec};

struct Generator {
    index: usize,
    left: Matrix,
    coproduct: Vec<(usize, usize, CycloNum)>,
    counit: CycloNum,
    antipode: SparseVec,
}

struct Presentation {
    name: String,
    field: &'static CycloField,
    labels: Vec<String>,
    unit: usize,
    gens: Vec<Generator>,
    /// Basis element `i` equals the product of `words[i]` (generator slots, left to right).
    words: Vec<Vec<usize>>,
}

impl Presentation {
    fn build(self) -> Result<HopfAlgebra> {
        let f = self.field;
        let d = self.labels.len();
        let one = CycloNum::one(f);
        let mut mult_cols: Vec<SparseVec> = Vec::with_capacity(d * d);
        for w in &self.words {
            for j in 0..d {
                let mut v = SparseVec::unit(j, f);
                for &g in w.iter().rev() {
                    v = self.gens[g].left.mul_vec(&v);
                }
                mult_cols.push(v);
            }
        }
        let mult = Matrix::from_cols(f, d, &mult_cols);
        let unit = Matrix::from_triplets(f, d, 1, [(self.unit, 0, one.clone())]);
        let placeholder = HopfAlgebra::new(
            self.name.clone(),
            f,
            self.labels.clone(),
            unit.clone(),
            Matrix::zeros(f, 1, d),
            mult.clone(),
            Matrix::zeros(f, d * d, d),
            Matrix::identity(f, d),
        )?;
        let gen_cop: Vec<SparseVec> = self
            .gens
            .iter()
            .map(|g| SparseVec::from_unsorted(g.coproduct.iter().map(|(a, b, c)| (a * d + b, c.clone())).collect()))
            .collect();
        let mut comult_cols = Vec::with_capacity(d);
        let mut counit = Vec::with_capacity(d);
        let mut antipode_cols = Vec::with_capacity(d);
        for w in &self.words {
            let mut cop = SparseVec::unit(self.unit * d + self.unit, f);
            let mut eps = one.clone();
            let mut s = SparseVec::unit(self.unit, f);
            for &g in w {
                cop = placeholder.mul_tensors(2, &cop, &gen_cop[g]);
                eps = &eps * &self.gens[g].counit;
                s = placeholder.mul(&self.gens[g].antipode, &s);
            }
            comult_cols.push(cop);
            counit.push((0, counit.len(), eps));
            antipode_cols.push(s);
        }
        let h = HopfAlgebra::new(
            self.name,
            f,
            self.labels,
            unit,
            Matrix::from_triplets(f, 1, d, counit),
            mult,
            Matrix::from_cols(f, d * d, &comult_cols),
            Matrix::from_cols(f, d, &antipode_cols),
        )?;
        let gens = self.gens.iter().map(|g| g.index).collect();
        Ok(h.with_generators(gens))
    }
}

fn elem(pairs: &[(usize, CycloNum)]) -> SparseVec {
    SparseVec::from_unsorted(pairs.to_vec())
}

/// The `2^(k+1)`-dimensional algebra generated by a grouplike `g` of order 2
/// and `k` anticommuting skew-primitives `x_i` with `Delta(x_i) = 1(x)x_i + x_i(x)g`.
///
/// Basis `x_1^{a_1} ... x_k^{a_k} g^b` at index `b * 2^k + sum a_i 2^(i-1)`.
pub fn bk(k: usize) -> Result<HopfAlgebra> {
    let f = CycloField::get(1);
    let half = 1usize << k;
    let d = 2 * half;
    let idx = |mask: usize, b: usize| b * half + mask;
    let labels: Vec<String> = (0..d)
        .map(|i| {
            let (b, mask) = (i / half, i % half);
            let mut s: String = (0..k).filter(|t| mask >> t & 1 == 1).map(|t| format!("x{}", t + 1)).collect();
            if b == 1 {
                s.push('g');
            }
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let int = |n: i64| CycloNum::from_int(f, n);
    let g_index = idx(0, 1);
    let mut gens = Vec::new();
    for t in 0..k {
        let mut trip = Vec::new();
        for i in 0..d {
            let (b, mask) = (i / half, i % half);
            if mask >> t & 1 == 1 {
                continue;
            }
            let sign = if (mask & ((1 << t) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            trip.push((idx(mask | 1 << t, b), i, int(sign)));
        }
        let x = idx(1 << t, 0);
        let xg = idx(1 << t, 1);
        gens.push(Generator {
            index: x,
            left: Matrix::from_triplets(f, d, d, trip),
            coproduct: vec![(0, x, int(1)), (x, g_index, int(1))],
            counit: int(0),
            // S(x) = g x = -x g
            antipode: elem(&[(xg, int(-1))]),
        });
    }
    let g_left = Matrix::from_triplets(
        f,
        d,
        d,
        (0..d).map(|i| {
            let (b, mask) = (i / half, i % half);
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            (idx(mask, 1 - b), i, int(sign))
        }),
    );
    gens.push(Generator {
        index: g_index,
        left: g_left,
        coproduct: vec![(g_index, g_index, int(1))],
        counit: int(1),
        antipode: elem(&[(g_index, int(1))]),
    });
    let words = (0..d)
        .map(|i| {
            let (b, mask) = (i / half, i % half);
            let mut w: Vec<usize> = (0..k).filter(|t| mask >> t & 1 == 1).collect();
            if b == 1 {
                w.push(k);
            }
            w
        })
        .collect();
    Presentation { name: format!("B_{k}"), field: f, labels, unit: 0, gens, words }.build()
}

/// Taft algebra of dimension `n^2`: `gx = q xg`, `x^n = 0`, `g^n = 1` with
/// `q = zeta_n`, `Delta(x) = 1(x)x + x(x)g`. Basis `x^i g^j` at index `i*n + j`.
pub fn taft(n: usize) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Taft algebra needs n >= 2, got {n}")));
    }
    let f = CycloField::get(n as u32);
    let q = CycloNum::zeta(f);
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..d).map(|k| pbw_label(&[("x", k / n), ("g", k % n)])).collect();
    let one = CycloNum::one(f);
    let x_left = Matrix::from_triplets(
        f,
        d,
        d,
        (0..d).filter(|k| k / n + 1 < n).map(|k| (idx(k / n + 1, k % n), k, one.clone())),
    );
    let g_left = Matrix::from_triplets(
        f,
        d,
        d,
        (0..d).map(|k| (idx(k / n, (k % n + 1) % n), k, q.pow((k / n) as i64))),
    );
    let (x, g, ginv) = (idx(1, 0), idx(0, 1), idx(0, n - 1));
    let gens = vec![
        Generator {
            index: x,
            left: x_left,
            coproduct: vec![(0, x, one.clone()), (x, g, one.clone())],
            counit: CycloNum::zero(f),
            antipode: elem(&[(idx(1, n - 1), -one.clone())]),
        },
        Generator {
            index: g,
            left: g_left,
            coproduct: vec![(g, g, one.clone())],
            counit: one.clone(),
            antipode: elem(&[(ginv, one.clone())]),
        },
    ];
    let words = (0..d).map(|k| [vec![0; k / n], vec![1; k % n]].concat()).collect();
    Presentation { name: format!("T_{n}"), field: f, labels, unit: 0, gens, words }.build()
}

fn pbw_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Small quantum `sl_2` type algebra with basis `E^a F^b K^c` (`a, b < nil`,
/// `c < ord`) at index `(a*nil + b)*ord + c`:
/// `KE = q^2 EK`, `KF = q^-2 FK`, `EF - FE = (K - K^-1)/(q - q^-1)`,
/// `Delta(E) = 1(x)E + E(x)K`, `Delta(F) = F(x)1 + K^-1(x)F`.
fn quantum_sl2(name: String, field: &'static CycloField, q: CycloNum, nil: usize, ord: usize) -> Result<HopfAlgebra> {
    let d = nil * nil * ord;
    let idx = |a: usize, b: usize, c: usize| (a * nil + b) * ord + c % ord;
    let split = |k: usize| (k / (nil * ord), (k / ord) % nil, k % ord);
    let labels = (0..d)
        .map(|k| {
            let (a, b, c) = split(k);
            pbw_label(&[("E", a), ("F", b), ("K", c)])
        })
        .collect();
    let one = CycloNum::one(field);
    let qq = |e: i64| q.pow(e);
    let q_minus_qinv = &q - &q.pow(-1);
    let mut e_t = Vec::new();
    let mut f_t = Vec::new();
    let mut k_t = Vec::new();
    for k in 0..d {
        let (a, b, c) = split(k);
        let (ai, bi) = (a as i64, b as i64);
        k_t.push((idx(a, b, c + 1), k, qq(2 * (ai - bi))));
        if a + 1 < nil {
            e_t.push((idx(a + 1, b, c), k, one.clone()));
        }
        // F E^a = E^a F - [a]/(q - q^-1) E^(a-1) (q^(a-1) K - q^(1-a) K^-1)
        if b + 1 < nil {
            f_t.push((idx(a, b + 1, c), k, one.clone()));
        }
        if a > 0 {
            let coef = &q_bracket(&q, ai) / &q_minus_qinv;
            f_t.push((idx(a - 1, b, c + 1), k, -(&coef * &qq(ai - 1 - 2 * bi))));
            f_t.push((idx(a - 1, b, c + ord - 1), k, &coef * &qq(1 - ai + 2 * bi)));
        }
    }
    let (e, fi, kk, kinv) = (idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1), idx(0, 0, ord - 1));
    let gens = vec![
        Generator {
            index: e,
            left: Matrix::from_triplets(field, d, d, e_t),
            coproduct: vec![(0, e, one.clone()), (e, kk, one.clone())],
            counit: CycloNum::zero(field),
            // S(E) = -E K^-1
            antipode: elem(&[(idx(1, 0, ord - 1), -one.clone())]),
        },
        Generator {
            index: fi,
            left: Matrix::from_triplets(field, d, d, f_t),
            coproduct: vec![(fi, 0, one.clone()), (kinv, fi, one.clone())],
            counit: CycloNum::zero(field),
            // S(F) = -K F = -q^-2 F K
            antipode: elem(&[(idx(0, 1, 1), -qq(-2))]),
        },
        Generator {
            index: kk,
            left: Matrix::from_triplets(field, d, d, k_t),
            coproduct: vec![(kk, kk, one.clone())],
            counit: one.clone(),
            antipode: elem(&[(kinv, one.clone())]),
        },
    ];
    let words = (0..d)
        .map(|k| {
            let (a, b, c) = split(k);
            [vec![0; a], vec![1; b], vec![2; c]].concat()
        })
        .collect();
    Presentation { name, field, labels, unit: 0, gens, words }.build()
}

/// The 16-dimensional algebra over `Q(i)` with `KE = -EK`, `KF = -FK`,
/// `EF - FE = -(i/2)(K - K^3)`, `E^2 = F^2 = 0`, `K^4 = 1`.
pub fn bar_ui() -> Result<HopfAlgebra> {
    let f = CycloField::get(4);
    quantum_sl2("Ubar_i".into(), f, CycloNum::zeta(f), 2, 4)
}

/// Small quantum group `u_q(sl_2)` at `q = zeta_p`, `p` odd, of dimension `p^3`.
pub fn uq_sl2(p: usize) -> Result<HopfAlgebra> {
    if p.is_multiple_of(2) || p < 3 {
        return Err(Error::InvalidParameter(format!("u_q(sl2) needs an odd p >= 3, got {p}")));
    }
    let f = CycloField::get(p as u32);
    quantum_sl2(format!("u_q(sl2), p={p}"), f, CycloNum::zeta(f), p, p)
}

/// Generator actions `(E, F, K)` on the simple `u_q(sl_2)`-module of
/// dimension `s`: basis `v_j = F^j v`, `K v_j = q^(s-1-2j) v_j`,
/// `E v_j = [j][s-j] v_(j-1)`.
pub fn uq_simple_actions(p: usize, s: usize) -> [Matrix; 3] {
    assert!(1 <= s && s <= p);
    let f = CycloField::get(p as u32);
    let q = CycloNum::zeta(f);
    let one = CycloNum::one(f);
    let e = Matrix::from_triplets(
        f,
        s,
        s,
        (1..s).map(|j| (j - 1, j, &q_bracket(&q, j as i64) * &q_bracket(&q, (s - j) as i64))),
    );
    let fm = Matrix::from_triplets(f, s, s, (0..s.saturating_sub(1)).map(|j| (j + 1, j, one.clone())));
    let k = Matrix::from_triplets(f, s, s, (0..s).map(|j| (j, j, q.pow(s as i64 - 1 - 2 * j as i64))));
    [e, fm, k]
}

/// Indices of `E`, `F`, `K` in the quantum `sl_2` bases.
pub fn sl2_generator_indices(h: &HopfAlgebra) -> [usize; 3] {
    let find = |l: &str| h.labels().iter().position(|x| x == l).expect("sl2-type basis");
    [find("E"), find("F"), find("K")]
}

/// Element of `H` from `(label, coefficient)` pairs.
pub fn element(h: &HopfAlgebra, terms: &[(&str, CycloNum)]) -> SparseVec {
    let mut acc = Accum::new();
    for (l, c) in terms {
        let i = h.labels().iter().position(|x| x == l).unwrap_or_else(|| panic!("no basis element {l}"));
        acc.add(i, c);
    }
    acc.finish()
}
