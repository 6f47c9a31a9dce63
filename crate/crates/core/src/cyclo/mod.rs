//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.

mod field;
mod num;
mod rat;

pub use field::{cyclotomic_poly, CycloField};
pub use num::CycloNum;
pub use rat::{ParseRatError, Rat};

use crate::error::{Error, Result};

impl CycloNum {
    pub fn checked_add(&self, o: &CycloNum) -> Result<CycloNum> {
        same_conductor(self, o)?;
        Ok(self + o)
    }

    pub fn checked_mul(&self, o: &CycloNum) -> Result<CycloNum> {
        same_conductor(self, o)?;
        Ok(self * o)
    }
}

pub fn same_conductor(a: &CycloNum, b: &CycloNum) -> Result<()> {
    if a.field() == b.field() {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left: a.field().conductor(), right: b.field().conductor() })
    }
}

/// Gaussian integer `(k)_q = 1 + q + ... + q^(k-1)`.
pub fn q_int(q: &CycloNum, k: u32) -> CycloNum {
    let mut acc = CycloNum::zero(q.field());
    let mut p = CycloNum::one(q.field());
    for _ in 0..k {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// `(k)_q! = (1)_q (2)_q ... (k)_q`.
pub fn q_factorial(q: &CycloNum, k: u32) -> CycloNum {
    (1..=k).fold(CycloNum::one(q.field()), |acc, j| &acc * &q_int(q, j))
}

/// Symmetric quantum integer `[k] = (q^k - q^-k) / (q - q^-1)`.
pub fn q_bracket(q: &CycloNum, k: i64) -> CycloNum {
    let num = &q.pow(k) - &q.pow(-k);
    let den = &q.pow(1) - &q.pow(-1);
    &num / &den
}
