use crate::cyclo::{CycloField, CycloNum};
use std::collections::BTreeMap;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(u32, CycloNum)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: &'static CycloField) -> Self {
        SparseVec { entries: vec![(i as u32, CycloNum::one(field))] }
    }

    pub fn single(i: usize, c: CycloNum) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i as u32, c)] }
        }
    }

    /// Accepts unsorted input with repeats; sums duplicates and drops zeros.
    pub fn from_unsorted(mut items: Vec<(usize, CycloNum)>) -> Self {
        items.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(u32, CycloNum)> = Vec::with_capacity(items.len());
        for (i, c) in items {
            match entries.last_mut() {
                Some((j, acc)) if *j as usize == i => *acc += &c,
                _ => entries.push((i as u32, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    /// Caller guarantees sorted, distinct, nonzero.
    pub fn from_sorted(entries: Vec<(u32, CycloNum)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn from_map(map: BTreeMap<usize, CycloNum>) -> Self {
        SparseVec {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u32, c)).collect(),
        }
    }

    pub fn from_dense(v: &[CycloNum]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize, field: &'static CycloField) -> Vec<CycloNum> {
        let mut out = vec![CycloNum::zero(field); n];
        for (i, c) in &self.entries {
            out[*i as usize] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(u32, CycloNum)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(u32, CycloNum)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &CycloNum)> + '_ {
        self.entries.iter().map(|(i, c)| (*i as usize, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&CycloNum> {
        self.entries
            .binary_search_by_key(&(i as u32), |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn first(&self) -> Option<(usize, &CycloNum)> {
        self.entries.first().map(|(i, c)| (*i as usize, c))
    }

    pub fn last(&self) -> Option<(usize, &CycloNum)> {
        self.entries.last().map(|(i, c)| (*i as usize, c))
    }

    pub fn scale(&self, c: &CycloNum) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn scale_mut(&mut self, c: &CycloNum) {
        if c.is_one() {
            return;
        }
        for (_, x) in &mut self.entries {
            *x = &*x * c;
        }
        self.entries.retain(|(_, x)| !x.is_zero());
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &CycloNum, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (Some(_), Some(_)) => {
                    let (i, mut x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    x += &(c * y);
                    if !x.is_zero() {
                        out.push((i, x));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    /// `self -= c * other`
    pub fn sub_scaled(&mut self, c: &CycloNum, other: &SparseVec) {
        self.add_scaled(&-c, other);
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        if let Some((_, c)) = other.entries.first() {
            out.add_scaled(&CycloNum::one(c.field()), other);
        }
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        if let Some((_, c)) = other.entries.first() {
            out.add_scaled(&-CycloNum::one(c.field()), other);
        }
        out
    }

    pub fn dot(&self, other: &SparseVec, field: &'static CycloField) -> CycloNum {
        let mut acc = CycloNum::zero(field);
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, x) = &self.entries[p];
            let (j, y) = &other.entries[q];
            if i < j {
                p += 1;
            } else if i > j {
                q += 1;
            } else {
                acc += &(x * y);
                p += 1;
                q += 1;
            }
        }
        acc
    }

    /// Reindex entries through `f`; colliding targets are summed.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_unsorted(self.entries.iter().map(|(i, c)| (f(*i as usize), c.clone())).collect())
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i as usize)
    }
}

/// Accumulator for building sparse vectors out of many scattered terms.
#[derive(Default)]
pub struct Accum {
    map: std::collections::HashMap<u32, CycloNum>,
}

impl Accum {
    pub fn new() -> Self {
        Accum::default()
    }

    pub fn add(&mut self, i: usize, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&(i as u32)) {
            Some(x) => *x += c,
            None => {
                self.map.insert(i as u32, c.clone());
            }
        }
    }

    pub fn add_owned(&mut self, i: usize, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&(i as u32)) {
            Some(x) => *x += &c,
            None => {
                self.map.insert(i as u32, c);
            }
        }
    }

    pub fn add_vec(&mut self, c: &CycloNum, v: &SparseVec) {
        for (i, x) in v.iter() {
            self.add_owned(i, c * x);
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut e: Vec<(u32, CycloNum)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        e.sort_unstable_by_key(|(i, _)| *i);
        SparseVec::from_sorted(e)
    }
}
