//! JSON file format for Hopf algebras.
//!
//! ```text
//! {
//!   "name": "T_3",
//!   "conductor": 3,
//!   "dim": 9,
//!   "labels": ["1", "g", ...],
//!   "generators": [3, 1],
//!   "unit":     [[row, col, ["p/q", ...]], ...],
//!   "counit":   [...],
//!   "mult":     [...],
//!   "comult":   [...],
//!   "antipode": [...]
//! }
//! ```
//!
//! Each coefficient is the list of its `phi(n)` rational coordinates in the
//! power basis of `zeta_n`, written canonically. Entries are sorted by
//! `(row, col)` and never zero, so serialization is byte-deterministic.

use super::algebra::HopfAlgebra;
use super::validate::validate_hopf;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};
use std::path::Path;

type Triplet = (usize, usize, Vec<String>);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    conductor: u32,
    dim: usize,
    labels: Vec<String>,
    #[serde(default)]
    generators: Option<Vec<usize>>,
    unit: Vec<Triplet>,
    counit: Vec<Triplet>,
    mult: Vec<Triplet>,
    comult: Vec<Triplet>,
    antipode: Vec<Triplet>,
}

fn triplets(m: &Matrix) -> Vec<Triplet> {
    m.triplets().map(|(i, j, c)| (i, j, c.to_strings())).collect()
}

pub fn to_json(h: &HopfAlgebra) -> String {
    let file = AlgebraFile {
        name: h.name().to_string(),
        conductor: h.field().conductor(),
        dim: h.dim(),
        labels: h.labels().to_vec(),
        generators: Some(h.generators().to_vec()),
        unit: triplets(h.unit()),
        counit: triplets(h.counit()),
        mult: triplets(h.mult()),
        comult: triplets(h.comult()),
        antipode: triplets(h.antipode()),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("algebra serializes");
    s.push('\n');
    s
}

fn read_matrix(
    field: &'static CycloField,
    what: &str,
    shape: (usize, usize),
    entries: Vec<Triplet>,
) -> Result<Matrix> {
    let mut prev: Option<(usize, usize)> = None;
    let mut out = Vec::with_capacity(entries.len());
    for (k, (i, j, coeffs)) in entries.into_iter().enumerate() {
        let at = |msg: String| Error::Parse(format!("{what}[{k}]: {msg}"));
        if i >= shape.0 || j >= shape.1 {
            return Err(at(format!("index ({i}, {j}) outside {}x{}", shape.0, shape.1)));
        }
        if prev.is_some_and(|p| p >= (i, j)) {
            return Err(at("entries must be strictly increasing in (row, col)".into()));
        }
        prev = Some((i, j));
        let c = CycloNum::from_strings(field, &coeffs).map_err(|e| at(e.to_string()))?;
        if c.is_zero() {
            return Err(at("explicit zero entry".into()));
        }
        out.push((i, j, c));
    }
    Ok(Matrix::from_triplets(field, shape.0, shape.1, out))
}

/// Parses and validates an algebra; any failing axiom is reported by name.
pub fn from_json(text: &str) -> Result<HopfAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if file.conductor == 0 {
        return Err(Error::Parse("conductor: must be positive".into()));
    }
    let d = file.dim;
    if file.labels.len() != d {
        return Err(Error::Parse(format!("labels: {} labels for dimension {d}", file.labels.len())));
    }
    let f = CycloField::get(file.conductor);
    let unit = read_matrix(f, "unit", (d, 1), file.unit)?;
    let counit = read_matrix(f, "counit", (1, d), file.counit)?;
    let mult = read_matrix(f, "mult", (d, d * d), file.mult)?;
    let comult = read_matrix(f, "comult", (d * d, d), file.comult)?;
    let antipode = read_matrix(f, "antipode", (d, d), file.antipode)?;
    let mut h = HopfAlgebra::new(file.name, f, file.labels, unit, counit, mult, comult, antipode)?;
    validate_hopf(&h).into_result()?;
    if let Some(gens) = file.generators {
        if let Some(&bad) = gens.iter().find(|&&g| g >= d) {
            return Err(Error::Parse(format!("generators: index {bad} out of range")));
        }
        let elems: Vec<_> = gens.iter().map(|&g| h.basis_elem(g)).collect();
        if h.generated_subalgebra(&elems).dim() != d {
            return Err(Error::Validation {
                axiom: "generators span".into(),
                witness: format!("{gens:?} generate a proper subalgebra"),
            });
        }
        h = h.with_generators(gens);
    }
    Ok(h)
}

pub fn save(h: &HopfAlgebra, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(h))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<HopfAlgebra> {
    from_json(&std::fs::read_to_string(path)?)
}
