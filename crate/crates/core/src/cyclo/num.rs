use super::field::CycloField;
use super::rat::Rat;
use crate::error::{Error, Result};
use smallvec::{smallvec, SmallVec};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

pub type Coeffs = SmallVec<[Rat; 2]>;

/// An element of `Q(zeta_n)`, stored as its coefficient vector in the power
/// basis `1, z, ..., z^(phi(n)-1)`.
#[derive(Clone)]
pub struct CycloNum {
    field: &'static CycloField,
    coeffs: Coeffs,
}

fn same_field(a: &CycloNum, b: &CycloNum) {
    if !std::ptr::eq(a.field, b.field) {
        panic!(
            "{}",
            Error::FieldMismatch { left: a.field.conductor(), right: b.field.conductor() }
        );
    }
}

impl CycloNum {
    pub fn zero(field: &'static CycloField) -> Self {
        CycloNum { field, coeffs: smallvec![Rat::ZERO; field.degree()] }
    }

    pub fn one(field: &'static CycloField) -> Self {
        Self::from_rat(field, Rat::ONE)
    }

    pub fn from_int(field: &'static CycloField, n: i64) -> Self {
        Self::from_rat(field, Rat::int(n))
    }

    pub fn from_rat(field: &'static CycloField, r: Rat) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = r;
        z
    }

    pub fn frac(field: &'static CycloField, n: i64, d: i64) -> Self {
        Self::from_rat(field, Rat::new(n, d))
    }

    /// Builds from a coefficient list of length exactly `phi(n)`.
    pub fn from_coeffs(field: &'static CycloField, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::Parse(format!(
                "expected {} coefficients for conductor {}, found {}",
                field.degree(),
                field.conductor(),
                coeffs.len()
            )));
        }
        Ok(CycloNum { field, coeffs: coeffs.into_iter().collect() })
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(field: &'static CycloField, k: i64) -> Self {
        let n = field.conductor() as i64;
        let k = k.rem_euclid(n) as usize;
        // reduce x^k by repeated multiplication by x
        let mut acc = Self::one(field);
        let x = Self::x(field);
        for _ in 0..k {
            acc = &acc * &x;
        }
        acc
    }

    pub fn zeta(field: &'static CycloField) -> Self {
        Self::zeta_pow(field, 1)
    }

    fn x(field: &'static CycloField) -> Self {
        let mut z = Self::zero(field);
        let p = field.power_of_x(1);
        for (c, v) in z.coeffs.iter_mut().zip(p) {
            *c = Rat::int(*v);
        }
        z
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycloNum { field: self.field, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rat(self.field, r.recip()));
        }
        Ok(CycloNum { field: self.field, coeffs: poly_inverse_mod(&self.coeffs, self.field) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one(self.field);
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// `self -= a * b` without an intermediate allocation in the rational case.
    pub fn sub_mul(&mut self, a: &CycloNum, b: &CycloNum) {
        if self.field.degree() == 1 {
            same_field(a, b);
            self.coeffs[0].sub_mul(&a.coeffs[0], &b.coeffs[0]);
        } else {
            let p = a * b;
            *self -= &p;
        }
    }

    /// Human-readable form as a polynomial in `z = zeta_n`.
    pub fn pretty(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let s = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == Rat::int(-1) {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    /// Canonical machine form: the coefficient strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Rat::to_string).collect()
    }

    pub fn from_strings(field: &'static CycloField, parts: &[String]) -> Result<Self> {
        let coeffs = parts
            .iter()
            .map(|s| s.parse::<Rat>().map_err(|e| Error::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(field, coeffs)
    }
}

/// Polynomial helpers over Q, low degree first, trailing zeros trimmed.
fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_scaled(a: &mut Vec<Rat>, b: &[Rat], c: &Rat, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, Rat::ZERO);
    }
    for (k, bk) in b.iter().enumerate() {
        a[k + shift].sub_mul(c, bk);
    }
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut q = vec![Rat::ZERO; r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        poly_sub_scaled(&mut r, &b, &c, k);
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let p = x * y;
            out[i + j] = &out[i + j] + &p;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let z = Rat::ZERO;
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect())
}

/// Inverse of `a` modulo `Phi_n` by the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[Rat], field: &CycloField) -> Coeffs {
    let m: Vec<Rat> = field.modulus().iter().map(|&c| Rat::int(c)).collect();
    let (mut r0, mut r1) = (m, trim(a.to_vec()));
    let (mut s0, mut s1): (Vec<Rat>, Vec<Rat>) = (vec![], vec![Rat::ONE]);
    while r1.len() > 1 {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r1 is a nonzero constant since Phi_n is irreducible
    let c = r1[0].recip();
    let (_, s) = poly_divrem(&s1, &field.modulus().iter().map(|&c| Rat::int(c)).collect::<Vec<_>>());
    let mut out: Coeffs = smallvec![Rat::ZERO; field.degree()];
    for (k, v) in s.iter().enumerate() {
        out[k] = v * &c;
    }
    out
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl Hash for CycloNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        same_field(self, o);
        CycloNum {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        same_field(self, o);
        CycloNum {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, o: &CycloNum) {
        same_field(self, o);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, o: &CycloNum) {
        same_field(self, o);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a = &*a - b;
            }
        }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, o: &CycloNum) -> CycloNum {
        same_field(self, o);
        let f = self.field;
        let d = f.degree();
        if d == 1 {
            return CycloNum { field: f, coeffs: smallvec![&self.coeffs[0] * &o.coeffs[0]] };
        }
        if let Some(r) = o.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(r);
        }
        // schoolbook product, then fold x^k (k >= d) back with the power table
        let mut prod: SmallVec<[Rat; 4]> = smallvec![Rat::ZERO; 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let p = a * b;
                    prod[i + j] = &prod[i + j] + &p;
                }
            }
        }
        let mut out: Coeffs = prod[..d].iter().cloned().collect();
        for k in d..2 * d - 1 {
            if prod[k].is_zero() {
                continue;
            }
            for (t, &c) in f.power_of_x(k).iter().enumerate() {
                if c != 0 {
                    let p = &prod[k] * &Rat::int(c);
                    out[t] = &out[t] + &p;
                }
            }
        }
        CycloNum { field: f, coeffs: out }
    }
}

impl<'a> Div<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn div(self, o: &CycloNum) -> CycloNum {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $f(self, o: CycloNum) -> CycloNum { (&self).$f(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}
