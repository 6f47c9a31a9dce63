use super::dense::{kernel_dense, rank_dense};
use super::*;
use crate::cyclo::{CycloField, CycloNum, Rat};
use proptest::prelude::*;

fn q4() -> &'static CycloField {
    CycloField::get(4)
}

fn entry() -> impl Strategy<Value = CycloNum> {
    prop_oneof![
        3 => Just(CycloNum::zero(q4())),
        2 => ((-3i64..4), (-2i64..3), (1i64..4)).prop_map(|(a, b, d)| {
            CycloNum::from_coeffs(q4(), vec![Rat::new(a, d), Rat::int(b)]).unwrap()
        }),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<CycloNum>>> {
    (1..max, 1..max).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(entry(), c), r))
}

#[test]
fn kron_indexing() {
    let f = CycloField::get(1);
    let a = Matrix::from_ints(f, &[&[1, 2], &[3, 4]]);
    let b = Matrix::from_ints(f, &[&[0, 5, 6]]);
    let k = a.kron(&b);
    assert_eq!(k.shape(), (2, 6));
    // (i*b.rows + k, j*b.cols + l) = a[i][j] * b[k][l]
    assert_eq!(k.get(1, 3 + 2), CycloNum::from_int(f, 4 * 6));
    assert_eq!(k.get(0, 1), CycloNum::from_int(f, 5));
}

#[test]
fn solve_and_pivot_orders() {
    let f = CycloField::get(1);
    let a = Matrix::from_ints(f, &[&[1, 1, 0], &[0, 1, 1]]);
    let b = Matrix::from_ints(f, &[&[2], &[3]]);
    let x1 = solve_with(&a, &b, PivotOrder::Forward).unwrap();
    let x2 = solve_with(&a, &b, PivotOrder::Reverse).unwrap();
    assert_eq!(a.mul(&x1), b);
    assert_eq!(a.mul(&x2), b);
    assert_ne!(x1, x2);
    let bad = Matrix::from_ints(f, &[&[1, 1], &[1, 1]]);
    let rhs = Matrix::from_ints(f, &[&[1], &[2]]);
    assert!(solve(&bad, &rhs).is_err());
}

#[test]
fn subspace_ops() {
    let f = CycloField::get(1);
    let e = |i| SparseVec::unit(i, f);
    let u = Subspace::span(f, 4, vec![e(0).add(&e(1)), e(2)]);
    let w = Subspace::span(f, 4, vec![e(1).add(&e(0)).add(&e(2)), e(3)]);
    let cap = u.intersect(&w);
    assert_eq!(cap.dim(), 1);
    assert!(cap.contains(&e(0).add(&e(1)).add(&e(2))));
    assert_eq!(u.sum(&w).dim(), 3);
    // spans of different generating sets compare equal
    let u2 = Subspace::span(f, 4, vec![e(2).add(&e(0)).add(&e(1)), e(2).scale(&CycloNum::from_int(f, 5))]);
    assert_eq!(u, u2);
    let q = u.quotient_coords(&e(1));
    assert_eq!(q.nnz(), 1);
}

#[test]
fn incremental_kernel_matches_stacked() {
    let f = CycloField::get(1);
    let a = Matrix::from_ints(f, &[&[1, -1, 0, 0, 0], &[0, 0, 1, 0, -1]]);
    let b = Matrix::from_ints(f, &[&[0, 1, -1, 0, 0], &[0, 0, 0, 2, 0]]);
    let op_a = |v: &SparseVec| a.mul_vec(v);
    let op_b = |v: &SparseVec| b.mul_vec(v);
    let inc = common_kernel(f, 5, &[&op_a, &op_b]);
    let stacked = kernel(&a.vstack(&b));
    assert_eq!(inc, Subspace::span(f, 5, stacked));
    assert_eq!(inc.dim(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(9)) {
        let a = Matrix::from_dense(q4(), &m);
        let ker = kernel(&a);
        prop_assert_eq!(rank(&a) + ker.len(), a.ncols());
        for v in &ker {
            prop_assert!(a.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn sparse_matches_dense(m in matrix(9)) {
        let a = Matrix::from_dense(q4(), &m);
        prop_assert_eq!(rank(&a), rank_dense(&m));
        let ks = Subspace::span(q4(), a.ncols(), kernel(&a));
        let kd = Subspace::span(q4(), a.ncols(), kernel_dense(&m, a.ncols(), q4()).iter().map(|v| SparseVec::from_dense(v)).collect());
        prop_assert_eq!(ks, kd);
    }

    #[test]
    fn reverse_order_same_rank(m in matrix(9)) {
        let a = Matrix::from_dense(q4(), &m);
        let e = echelonize(a.rows().to_vec(), a.ncols(), a.ncols(), PivotOrder::Reverse);
        prop_assert_eq!(e.rank(), rank(&a));
    }

    #[test]
    fn kernel_is_canonical(m in matrix(9)) {
        let a = Matrix::from_dense(q4(), &m);
        let k = kernel(&a);
        let s = Subspace::span(q4(), a.ncols(), k.clone());
        prop_assert_eq!(s.basis(), &k[..]);
    }

    #[test]
    fn transpose_and_product(m in matrix(7), n in matrix(7)) {
        let a = Matrix::from_dense(q4(), &m);
        let b = Matrix::from_dense(q4(), &n);
        if a.ncols() == b.nrows() {
            prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        }
        prop_assert_eq!(a.transpose().transpose(), a);
    }
}
