use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{solve, Accum, Matrix, SparseVec, Subspace};
use once_cell::sync::OnceCell;
use std::fmt;

/// A finite-dimensional Hopf algebra given by structure tensors in a fixed
/// basis `h_0, ..., h_{d-1}`.
///
/// Shapes: `mult` is `d x d^2` (column `i*d + j` holds `h_i h_j`), `comult`
/// is `d^2 x d`, `unit` is `d x 1`, `counit` is `1 x d`, `antipode` is `d x d`.
#[derive(Clone)]
pub struct HopfAlgebra {
    name: String,
    field: &'static CycloField,
    labels: Vec<String>,
    unit: Matrix,
    counit: Matrix,
    mult: Matrix,
    comult: Matrix,
    antipode: Matrix,
    antipode_inv: Matrix,
    generators: Vec<usize>,
    cache: Cache,
    dual_generators: OnceCell<Vec<usize>>,
}

#[derive(Clone)]
struct Cache {
    products: Vec<SparseVec>,
    coproducts: Vec<SparseVec>,
    antipode_cols: Vec<SparseVec>,
    antipode_inv_cols: Vec<SparseVec>,
    counit_vals: Vec<CycloNum>,
    unit_vec: SparseVec,
}

impl Cache {
    fn build(d: usize, unit: &Matrix, counit: &Matrix, mult: &Matrix, comult: &Matrix, s: &Matrix, s_inv: &Matrix) -> Self {
        Cache {
            products: mult.cols(),
            coproducts: comult.cols(),
            antipode_cols: s.cols(),
            antipode_inv_cols: s_inv.cols(),
            counit_vals: (0..d).map(|i| counit.get(0, i)).collect(),
            unit_vec: unit.col(0),
        }
    }
}

impl HopfAlgebra {
    /// Assembles an algebra from its five structure tensors. The antipode must
    /// be invertible; no other axiom is checked here (see `validate_hopf`).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: &'static CycloField,
        labels: Vec<String>,
        unit: Matrix,
        counit: Matrix,
        mult: Matrix,
        comult: Matrix,
        antipode: Matrix,
    ) -> Result<Self> {
        let d = labels.len();
        let shapes = [
            ("unit", unit.shape(), (d, 1)),
            ("counit", counit.shape(), (1, d)),
            ("mult", mult.shape(), (d, d * d)),
            ("comult", comult.shape(), (d * d, d)),
            ("antipode", antipode.shape(), (d, d)),
        ];
        for (what, got, want) in shapes {
            if got != want {
                return Err(Error::Dimension(format!("{what} is {}x{}, expected {}x{}", got.0, got.1, want.0, want.1)));
            }
        }
        let antipode_inv = solve(&antipode, &Matrix::identity(field, d)).map_err(|_| Error::Validation {
            axiom: "antipode invertibility".into(),
            witness: "antipode matrix is singular".into(),
        })?;
        if !antipode.mul(&antipode_inv).sub(&Matrix::identity(field, d)).is_zero() {
            return Err(Error::Validation {
                axiom: "antipode invertibility".into(),
                witness: "antipode matrix is singular".into(),
            });
        }
        let cache = Cache::build(d, &unit, &counit, &mult, &comult, &antipode, &antipode_inv);
        let mut h = HopfAlgebra {
            name: name.into(),
            field,
            labels,
            unit,
            counit,
            mult,
            comult,
            antipode,
            antipode_inv,
            generators: vec![],
            cache,
            dual_generators: OnceCell::new(),
        };
        h.generators = h.greedy_generators();
        Ok(h)
    }

    /// Replaces the generating set (basis indices). Grouplike generators are
    /// moved to the front since their constraints are the cheapest.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Self {
        let mut gens = gens;
        gens.sort_by_key(|&g| !self.is_grouplike(g));
        self.generators = gens;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum::zero(self.field)
    }

    pub fn one_scalar(&self) -> CycloNum {
        CycloNum::one(self.field)
    }

    /// `h_i h_j`
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.cache.products[i * self.dim() + j]
    }

    /// `Delta(h_i)` in `H (x) H` coordinates.
    pub fn coproduct(&self, i: usize) -> &SparseVec {
        &self.cache.coproducts[i]
    }

    pub fn antipode_of(&self, i: usize) -> &SparseVec {
        &self.cache.antipode_cols[i]
    }

    pub fn antipode_inv_of(&self, i: usize) -> &SparseVec {
        &self.cache.antipode_inv_cols[i]
    }

    pub fn counit_of(&self, i: usize) -> &CycloNum {
        &self.cache.counit_vals[i]
    }

    pub fn one(&self) -> &SparseVec {
        &self.cache.unit_vec
    }

    pub fn basis_elem(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field)
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.one();
        (u.nnz() == 1 && u.first().unwrap().1.is_one()).then(|| u.first().unwrap().0)
    }

    pub fn is_grouplike(&self, i: usize) -> bool {
        let d = self.dim();
        let c = self.coproduct(i);
        c.nnz() == 1 && c.first().unwrap().0 == i * d + i && c.first().unwrap().1.is_one()
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let c = x * y;
                acc.add_vec(&c, self.product(i, j));
            }
        }
        acc.finish()
    }

    pub fn apply_antipode(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            acc.add_vec(x, self.antipode_of(i));
        }
        acc.finish()
    }

    pub fn apply_antipode_inv(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, x) in a.iter() {
            acc.add_vec(x, self.antipode_inv_of(i));
        }
        acc.finish()
    }

    pub fn counit_value(&self, a: &SparseVec) -> CycloNum {
        let mut acc = self.zero();
        for (i, x) in a.iter() {
            acc += &(x * self.counit_of(i));
        }
        acc
    }

    pub fn power(&self, a: &SparseVec, e: usize) -> SparseVec {
        let mut acc = self.one().clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `d^n`
    pub fn tensor_dim(&self, n: usize) -> usize {
        self.dim().pow(n as u32)
    }

    /// Digits of a multi-index of `H^{(x) n}`, first tensor slot first.
    pub fn split_index(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let d = self.dim();
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            out[k] = idx % d;
            idx /= d;
        }
        out
    }

    pub fn join_index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &i| acc * self.dim() + i)
    }

    /// Componentwise product in `H^{(x) n}`.
    pub fn mul_tensors(&self, n: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, a) in x.iter() {
            let di = self.split_index(i, n);
            for (j, b) in y.iter() {
                let dj = self.split_index(j, n);
                let mut partial: Vec<(usize, CycloNum)> = vec![(0, a * b)];
                for k in 0..n {
                    let p = self.product(di[k], dj[k]);
                    let mut next = Vec::with_capacity(partial.len() * p.nnz());
                    for (idx, c) in &partial {
                        for (t, e) in p.iter() {
                            next.push((idx * self.dim() + t, c * e));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    acc.add_owned(idx, c);
                }
            }
        }
        acc.finish()
    }

    /// Applies `Delta` to tensor slot `slot` (0-based) of `x` in `H^{(x) n}`.
    pub fn coproduct_at(&self, n: usize, slot: usize, x: &SparseVec) -> SparseVec {
        let d = self.dim();
        let low_size = d.pow((n - 1 - slot) as u32);
        let mut acc = Accum::new();
        for (idx, c) in x.iter() {
            let low = idx % low_size;
            let rest = idx / low_size;
            let i = rest % d;
            let high = rest / d;
            for (ab, e) in self.coproduct(i).iter() {
                let (a, b) = (ab / d, ab % d);
                let new = ((high * d + a) * d + b) * low_size + low;
                acc.add_owned(new, c * e);
            }
        }
        acc.finish()
    }

    /// `Delta^(n)`: `-1` gives the counit, `0` the identity, and
    /// `Delta^(n) = (Delta (x) id) Delta^(n-1)` lands in `H^{(x)(n+1)}`.
    pub fn iterated_coproduct(&self, n: i32, x: &SparseVec) -> SparseVec {
        match n {
            i32::MIN..=-2 => panic!("iterated coproduct of order {n}"),
            -1 => SparseVec::single(0, self.counit_value(x)),
            0 => x.clone(),
            _ => {
                let prev = self.iterated_coproduct(n - 1, x);
                self.coproduct_at(n as usize, 0, &prev)
            }
        }
    }

    /// `1 (x) x` and `x (x) 1` for `x` in `H^{(x) n}`.
    pub fn unit_left(&self, n: usize, x: &SparseVec) -> SparseVec {
        let shift = self.tensor_dim(n);
        let mut acc = Accum::new();
        for (u, a) in self.one().iter() {
            for (i, c) in x.iter() {
                acc.add_owned(u * shift + i, a * c);
            }
        }
        acc.finish()
    }

    pub fn unit_right(&self, _n: usize, x: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut acc = Accum::new();
        for (i, c) in x.iter() {
            for (u, a) in self.one().iter() {
                acc.add_owned(i * d + u, c * a);
            }
        }
        acc.finish()
    }

    /// Matrix of `x -> a x` on `H`.
    pub fn left_mult_matrix(&self, a: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.mul(a, &self.basis_elem(j))).collect();
        Matrix::from_cols(self.field, self.dim(), &cols)
    }

    /// Matrix of `x -> x a` on `H`.
    pub fn right_mult_matrix(&self, a: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.mul(&self.basis_elem(j), a)).collect();
        Matrix::from_cols(self.field, self.dim(), &cols)
    }

    /// Subalgebra generated by the given elements.
    pub fn generated_subalgebra(&self, gens: &[SparseVec]) -> Subspace {
        let d = self.dim();
        let mut span = Subspace::span(self.field, d, vec![self.one().clone()]);
        loop {
            let mut new = span.basis().to_vec();
            for b in span.basis() {
                for g in gens {
                    new.push(self.mul(g, b));
                }
            }
            let next = Subspace::span(self.field, d, new);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let d = self.dim();
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.generated_subalgebra(&[]);
        // grouplikes first, then the rest in basis order
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&i| !self.is_grouplike(i));
        for i in order {
            if span.dim() == d {
                break;
            }
            if span.contains(&self.basis_elem(i)) {
                continue;
            }
            gens.push(i);
            let elems: Vec<SparseVec> = gens.iter().map(|&g| self.basis_elem(g)).collect();
            span = self.generated_subalgebra(&elems);
        }
        gens
    }

    /// Generators of `(H*)^op` as dual-basis indices, computed on first use.
    pub fn dual_generators(&self) -> &[usize] {
        self.dual_generators.get_or_init(|| super::dual::dual_op(self).generators().to_vec())
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &SparseVec) -> String {
        format_terms(x.iter().map(|(i, c)| (self.label(i).to_string(), c.clone())))
    }

    /// Same for `H^{(x) n}` with `(x)` between factors.
    pub fn format_tensor(&self, n: usize, x: &SparseVec) -> String {
        format_terms(x.iter().map(|(i, c)| {
            let lab: Vec<&str> = self.split_index(i, n).iter().map(|&k| self.label(k)).collect();
            (lab.join("(x)"), c.clone())
        }))
    }
}

pub fn format_terms(terms: impl Iterator<Item = (String, CycloNum)>) -> String {
    let mut out = String::new();
    for (lab, c) in terms {
        let coef = c.pretty();
        let simple = !coef.contains(' ');
        let (sign, body) = if simple && coef.starts_with('-') { ("-", &coef[1..]) } else { ("+", &coef[..]) };
        let factor = if body == "1" {
            String::new()
        } else if simple {
            format!("{body}*")
        } else {
            format!("({body})*")
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        out.push_str(&factor);
        out.push_str(&lab);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {}, {:?})", self.name, self.dim(), self.field)
    }
}
