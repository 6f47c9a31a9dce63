//! Sparse Gauss-Jordan elimination.
//!
//! Columns are visited in a fixed order; at each column the pivot is the
//! sparsest live row carrying that column, and the column is cleared from
//! every other row. Visiting columns left to right yields the reduced row
//! echelon form; right to left yields the mirror form in which each row's
//! pivot is its last nonzero entry.

use super::matrix::Matrix;
use super::sparse::SparseVec;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PivotOrder {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Debug)]
pub struct Echelon {
    /// Pivot rows, normalized to 1 at the pivot and sorted by pivot column.
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
    /// Rows that vanish on the pivot-eligible columns but not beyond them.
    pub residual: Vec<SparseVec>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Eliminates `rows`, allowing pivots only in columns `< pivot_limit`.
pub fn echelonize(rows: Vec<SparseVec>, ncols: usize, pivot_limit: usize, order: PivotOrder) -> Echelon {
    let mut rows: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_zero()).collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (j, _) in row.iter() {
            col_rows[j].push(r as u32);
        }
    }
    let mut pivot_col: Vec<Option<usize>> = vec![None; rows.len()];
    let columns: Vec<usize> = match order {
        PivotOrder::Forward => (0..pivot_limit).collect(),
        PivotOrder::Reverse => (0..pivot_limit).rev().collect(),
    };
    let unprocessed = |j: usize, c: usize| match order {
        PivotOrder::Forward => j > c,
        PivotOrder::Reverse => j < c,
    };
    for &c in &columns {
        let mut cand = std::mem::take(&mut col_rows[c]);
        cand.sort_unstable();
        cand.dedup();
        cand.retain(|&r| rows[r as usize].get(c).is_some());
        let Some(&piv) = cand
            .iter()
            .filter(|&&r| pivot_col[r as usize].is_none())
            .min_by_key(|&&r| (rows[r as usize].nnz(), r))
        else {
            continue;
        };
        let piv = piv as usize;
        let inv = rows[piv].get(c).unwrap().inv().expect("nonzero pivot");
        rows[piv].scale_mut(&inv);
        let prow = rows[piv].clone();
        let fill: Vec<usize> = prow.iter().map(|(j, _)| j).filter(|&j| j != c && unprocessed(j, c)).collect();
        for &r in &cand {
            let r = r as usize;
            if r == piv {
                continue;
            }
            let f = rows[r].get(c).unwrap().clone();
            rows[r].sub_scaled(&f, &prow);
            for &j in &fill {
                col_rows[j].push(r as u32);
            }
        }
        pivot_col[piv] = Some(c);
    }
    let mut pivoted: Vec<(usize, SparseVec)> = Vec::new();
    let mut residual = Vec::new();
    for (r, row) in rows.into_iter().enumerate() {
        match pivot_col[r] {
            Some(c) => pivoted.push((c, row)),
            None if !row.is_zero() => residual.push(row),
            None => {}
        }
    }
    pivoted.sort_by_key(|(c, _)| *c);
    let (pivots, rows) = pivoted.into_iter().unzip();
    Echelon { rows, pivots, residual, ncols }
}

pub fn rref(m: &Matrix) -> Echelon {
    echelonize(m.rows().to_vec(), m.ncols(), m.ncols(), PivotOrder::Forward)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank()
}

/// Null space basis read off a reduced form whose pivots are leading entries.
///
/// The returned vectors are already in canonical (trailing-pivot) form.
pub fn kernel_from_rref(e: &Echelon, field: &'static CycloField) -> Vec<SparseVec> {
    let n = e.ncols;
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut cols: Vec<Vec<(u32, CycloNum)>> = vec![Vec::new(); n];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        for (j, c) in row.iter() {
            if j != p {
                cols[j].push((p as u32, -c));
            }
        }
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = std::mem::take(&mut cols[f]);
            v.push((f as u32, CycloNum::one(field)));
            v.sort_by_key(|(i, _)| *i);
            SparseVec::from_sorted(v)
        })
        .collect()
}

pub fn kernel(m: &Matrix) -> Vec<SparseVec> {
    kernel_from_rref(&rref(m), m.field())
}

/// Kernel of the map whose columns are `images` (each a vector in some
/// target space): all coefficient vectors `a` with `sum a_j images[j] = 0`.
pub fn kernel_of_columns(images: &[SparseVec], field: &'static CycloField) -> Vec<SparseVec> {
    let k = images.len();
    let mut buckets: std::collections::BTreeMap<u32, Vec<(u32, CycloNum)>> = Default::default();
    for (j, col) in images.iter().enumerate() {
        for (i, c) in col.iter() {
            buckets.entry(i as u32).or_default().push((j as u32, c.clone()));
        }
    }
    let rows: Vec<SparseVec> = buckets.into_values().map(SparseVec::from_sorted).collect();
    let e = echelonize(rows, k, k, PivotOrder::Forward);
    kernel_from_rref(&e, field)
}

/// Solves `A X = B`. Free variables are set to zero; `order` selects which
/// variables are free and so which particular solution is returned.
pub fn solve_with(a: &Matrix, b: &Matrix, order: PivotOrder) -> Result<Matrix> {
    if a.nrows() != b.nrows() {
        return Err(Error::Dimension(format!("solve: {} rows vs {} rows", a.nrows(), b.nrows())));
    }
    let n = a.ncols();
    let k = b.ncols();
    let rows = a.hstack(b).into_rows();
    let e = echelonize(rows, n + k, n, order);
    if !e.residual.is_empty() {
        return Err(Error::Inconsistent);
    }
    let mut out = vec![SparseVec::new(); n];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        out[p] = SparseVec::from_sorted(
            row.iter().filter(|(j, _)| *j >= n).map(|(j, c)| ((j - n) as u32, c.clone())).collect(),
        );
    }
    Ok(Matrix::from_rows(a.field(), k, out))
}

pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    solve_with(a, b, PivotOrder::Forward)
}

/// Solves `A x = b` for a single right-hand side.
pub fn solve_vec(a: &Matrix, b: &SparseVec) -> Result<SparseVec> {
    let bm = Matrix::from_cols(a.field(), a.nrows(), std::slice::from_ref(b));
    Ok(solve(a, &bm)?.col(0))
}
