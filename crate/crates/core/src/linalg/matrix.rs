use super::sparse::{Accum, SparseVec};
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::fmt;

/// Row-sparse matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: &'static CycloField,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(field: &'static CycloField, nrows: usize, ncols: usize) -> Self {
        Matrix { field, nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Self {
        Matrix { field, nrows: n, ncols: n, rows: (0..n).map(|i| SparseVec::unit(i, field)).collect() }
    }

    pub fn from_rows(field: &'static CycloField, ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < ncols)));
        Matrix { field, nrows: rows.len(), ncols, rows }
    }

    /// Builds a matrix from column vectors.
    pub fn from_cols(field: &'static CycloField, nrows: usize, cols: &[SparseVec]) -> Self {
        Matrix::from_rows(field, nrows, cols.to_vec()).transpose()
    }

    pub fn from_triplets(
        field: &'static CycloField,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, CycloNum)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, CycloNum)>> = vec![Vec::new(); nrows];
        for (i, j, c) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) outside {nrows}x{ncols}");
            buckets[i].push((j, c));
        }
        Matrix { field, nrows, ncols, rows: buckets.into_iter().map(SparseVec::from_unsorted).collect() }
    }

    pub fn from_dense(field: &'static CycloField, rows: &[Vec<CycloNum>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Matrix { field, nrows: rows.len(), ncols, rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn from_ints(field: &'static CycloField, rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<CycloNum>> =
            rows.iter().map(|r| r.iter().map(|&x| CycloNum::from_int(field, x)).collect()).collect();
        Matrix::from_dense(field, &dense)
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> CycloNum {
        self.rows[i].get(j).cloned().unwrap_or_else(|| CycloNum::zero(self.field))
    }

    pub fn set(&mut self, i: usize, j: usize, c: CycloNum) {
        let mut items: Vec<(usize, CycloNum)> =
            self.rows[i].iter().filter(|(k, _)| *k != j).map(|(k, x)| (k, x.clone())).collect();
        items.push((j, c));
        self.rows[i] = SparseVec::from_unsorted(items);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &CycloNum)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, j, c)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut buckets: Vec<Vec<(u32, CycloNum)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r.iter() {
                buckets[j].push((i as u32, c.clone()));
            }
        }
        Matrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows: buckets.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Column `j` as a sparse vector of length `nrows`.
    pub fn col(&self, j: usize) -> SparseVec {
        SparseVec::from_sorted(
            self.rows.iter().enumerate().filter_map(|(i, r)| r.get(j).map(|c| (i as u32, c.clone()))).collect(),
        )
    }

    pub fn cols(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn to_dense(&self) -> Vec<Vec<CycloNum>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols, self.field)).collect()
    }

    fn check(&self, other: &Matrix, what: &str, ok: bool) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.conductor(), right: other.field.conductor() });
        }
        if !ok {
            return Err(Error::Dimension(format!(
                "{what}: {}x{} vs {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other, "product", self.ncols == other.nrows)?;
        let rows: Vec<SparseVec> = self
            .rows
            .par_iter()
            .map(|r| {
                let mut acc = Accum::new();
                for (k, a) in r.iter() {
                    acc.add_vec(a, &other.rows[k]);
                }
                acc.finish()
            })
            .collect();
        Ok(Matrix { field: self.field, nrows: self.nrows, ncols: other.ncols, rows })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap()
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other, "sum", self.shape() == other.shape())?;
        Ok(Matrix {
            field: self.field,
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).unwrap()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.map_rows(|r| r.neg())
    }

    pub fn scale(&self, c: &CycloNum) -> Matrix {
        self.map_rows(|r| r.scale(c))
    }

    fn map_rows(&self, f: impl Fn(&SparseVec) -> SparseVec) -> Matrix {
        Matrix { field: self.field, nrows: self.nrows, ncols: self.ncols, rows: self.rows.iter().map(f).collect() }
    }

    /// `M v` for a sparse column vector `v`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let d = r.dot(v, self.field);
                    (!d.is_zero()).then_some((i as u32, d))
                })
                .collect(),
        )
    }

    /// `v^T M` for a sparse row vector `v`.
    pub fn vec_mul(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accum::new();
        for (i, c) in v.iter() {
            acc.add_vec(c, &self.rows[i]);
        }
        acc.finish()
    }

    /// Kronecker product with index `(i * b.rows + k, j * b.cols + l)`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        assert_eq!(self.field, b.field);
        let mut rows = Vec::with_capacity(self.nrows * b.nrows);
        for ra in &self.rows {
            for rb in &b.rows {
                let mut e = Vec::with_capacity(ra.nnz() * rb.nnz());
                for (j, x) in ra.iter() {
                    for (l, y) in rb.iter() {
                        e.push(((j * b.ncols + l) as u32, x * y));
                    }
                }
                rows.push(SparseVec::from_sorted(e));
            }
        }
        Matrix { field: self.field, nrows: self.nrows * b.nrows, ncols: self.ncols * b.ncols, rows }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { field: self.field, nrows: rows.len(), ncols: self.ncols, rows }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.nrows, other.nrows);
        let off = self.ncols;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut e = a.entries().to_vec();
                e.extend(b.iter().map(|(j, c)| ((j + off) as u32, c.clone())));
                SparseVec::from_sorted(e)
            })
            .collect();
        Matrix { field: self.field, nrows: self.nrows, ncols: self.ncols + other.ncols, rows }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_rows(self.field, self.ncols, idx.iter().map(|&i| self.rows[i].clone()).collect())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut pos = vec![u32::MAX; self.ncols];
        for (k, &j) in idx.iter().enumerate() {
            pos[j] = k as u32;
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                SparseVec::from_unsorted(
                    r.iter().filter(|(j, _)| pos[*j] != u32::MAX).map(|(j, c)| (pos[j] as usize, c.clone())).collect(),
                )
            })
            .collect();
        Matrix { field: self.field, nrows: self.nrows, ncols: idx.len(), rows }
    }

    pub fn trace(&self) -> CycloNum {
        let mut t = CycloNum::zero(self.field);
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(c) = r.get(i) {
                t += c;
            }
        }
        t
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.nrows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row-major flattening, as used for unknown matrices in linear systems.
    pub fn flatten(&self) -> SparseVec {
        let n = self.ncols;
        SparseVec::from_sorted(
            self.triplets().map(|(i, j, c)| ((i * n + j) as u32, c.clone())).collect(),
        )
    }

    pub fn unflatten(field: &'static CycloField, nrows: usize, ncols: usize, v: &SparseVec) -> Matrix {
        Matrix::from_triplets(field, nrows, ncols, v.iter().map(|(k, c)| (k / ncols, k % ncols, c.clone())))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.nrows, self.ncols, self.field)?;
        if self.nrows * self.ncols <= 400 {
            for r in self.to_dense() {
                let s: Vec<String> = r.iter().map(CycloNum::pretty).collect();
                writeln!(f, "  [{}]", s.join(", "))?;
            }
        }
        Ok(())
    }
}
