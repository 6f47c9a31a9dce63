use super::algebra::HopfAlgebra;
use crate::linalg::{Accum, SparseVec};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    /// First failing input, if any.
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn into_result(self) -> crate::Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(crate::Error::Validation {
                axiom: c.axiom.to_string(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{:<24} ok", c.axiom)?,
                Some(w) => writeln!(f, "{:<24} FAILS at {w}", c.axiom)?,
            }
        }
        Ok(())
    }
}

/// Checks every Hopf algebra axiom on basis elements, naming a witness for
/// each failure.
pub fn validate_hopf(h: &HopfAlgebra) -> ValidationReport {
    let d = h.dim();
    let lab = |i: usize| h.label(i).to_string();
    let mut checks = Vec::new();

    let mut triples = (0..d).flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))));
    let assoc_w = triples
        .find(|&(i, j, k)| h.mul(h.product(i, j), &h.basis_elem(k)) != h.mul(&h.basis_elem(i), h.product(j, k)))
        .map(|(i, j, k)| format!("({}, {}, {})", lab(i), lab(j), lab(k)));
    checks.push(AxiomCheck { axiom: "associativity", witness: assoc_w });

    let unit = (0..d)
        .find(|&i| {
            let e = h.basis_elem(i);
            h.mul(h.one(), &e) != e || h.mul(&e, h.one()) != e
        })
        .map(lab);
    checks.push(AxiomCheck { axiom: "unit", witness: unit });

    let coassoc = (0..d)
        .find(|&i| {
            let c = h.coproduct(i);
            h.coproduct_at(2, 0, c) != h.coproduct_at(2, 1, c)
        })
        .map(lab);
    checks.push(AxiomCheck { axiom: "coassociativity", witness: coassoc });

    let counit = (0..d)
        .find(|&i| {
            let e = h.basis_elem(i);
            let c = h.coproduct(i);
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (ab, x) in c.iter() {
                let (a, b) = (ab / d, ab % d);
                left.add_owned(b, x * h.counit_of(a));
                right.add_owned(a, x * h.counit_of(b));
            }
            left.finish() != e || right.finish() != e
        })
        .map(lab);
    checks.push(AxiomCheck { axiom: "counit", witness: counit });

    let mut bialg = None;
    let one_one = h.unit_right(1, h.one());
    if coproduct_of(h, h.one()) != one_one {
        bialg = Some("Delta(1) != 1(x)1".to_string());
    } else if !h.counit_value(h.one()).is_one() {
        bialg = Some("epsilon(1) != 1".to_string());
    } else {
        'outer: for i in 0..d {
            for j in 0..d {
                let prod = h.product(i, j);
                if coproduct_of(h, prod) != h.mul_tensors(2, h.coproduct(i), h.coproduct(j)) {
                    bialg = Some(format!("Delta({} {})", lab(i), lab(j)));
                    break 'outer;
                }
                if h.counit_value(prod) != h.counit_of(i) * h.counit_of(j) {
                    bialg = Some(format!("epsilon({} {})", lab(i), lab(j)));
                    break 'outer;
                }
            }
        }
    }
    checks.push(AxiomCheck { axiom: "bialgebra", witness: bialg });

    let antipode = (0..d)
        .find(|&i| {
            let c = h.coproduct(i);
            let eps_one = h.one().scale(h.counit_of(i));
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (ab, x) in c.iter() {
                let (a, b) = (ab / d, ab % d);
                left.add_vec(x, &h.mul(h.antipode_of(a), &h.basis_elem(b)));
                right.add_vec(x, &h.mul(&h.basis_elem(a), h.antipode_of(b)));
            }
            left.finish() != eps_one || right.finish() != eps_one
        })
        .map(lab);
    checks.push(AxiomCheck { axiom: "antipode", witness: antipode });

    ValidationReport { checks }
}

fn coproduct_of(h: &HopfAlgebra, x: &SparseVec) -> SparseVec {
    h.coproduct_at(1, 0, x)
}
