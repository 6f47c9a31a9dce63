//! Straightforward dense Gauss-Jordan, kept as an independent reference for
//! the sparse engine and used for tiny systems.

use crate::cyclo::{CycloField, CycloNum};

pub type Dense = Vec<Vec<CycloNum>>;

/// Returns the reduced row echelon form and its pivot columns.
pub fn rref_dense(mut m: Dense) -> (Dense, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    x.sub_mul(&f, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_dense(m: &Dense) -> usize {
    rref_dense(m.clone()).1.len()
}

pub fn kernel_dense(m: &Dense, ncols: usize, field: &'static CycloField) -> Vec<Vec<CycloNum>> {
    let (r, pivots) = rref_dense(m.clone());
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycloNum::zero(field); ncols];
            v[f] = CycloNum::one(field);
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}
