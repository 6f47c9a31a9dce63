use super::*;
use crate::cyclo::{q_factorial, CycloNum};
use crate::linalg::{Matrix, SparseVec};
use crate::dy::{Cochain, DyComplex, Mode};
use crate::examples::{bk_cocycle, BarUi, BkExample, TaftExample};
use crate::linalg::PivotOrder;
use crate::yd::YdModule;


#[test]
fn bar_differential_squares_to_zero() {
    let ex = TaftExample::new(3).unwrap();
    let v = ex.v_module(0, 0).unwrap();
    for n in 1..3 {
        assert!(bar_differential(&v, n - 1).mul(&bar_differential(&v, n)).is_zero(), "d_{} d_{n}", n - 1);
    }
}

#[test]
fn bar_steps_are_equivariant() {
    let ex = BkExample::new(1).unwrap();
    let v = ex.extension_module(1, true).unwrap();
    for n in 0..2 {
        let step = bar_step(&v, n).unwrap();
        assert_eq!(step.module.dim(), 4usize.pow(n as u32 + 1) * 2);
        assert!(step.module.validate().ok());
    }
}

#[test]
fn degree_zero_bar_module_is_induced() {
    let ex = TaftExample::new(3).unwrap();
    let v = ex.v_module(2, 1).unwrap();
    let p0 = bar_module(&v, 1).unwrap();
    let induced = YdModule::induced(ex.double().clone(), v.actions()).unwrap();
    assert!(p0.same_structure(&induced));
}

fn trivial_ratio(double: &std::sync::Arc<crate::yd::Double>, c: &Cochain, x: &crate::linalg::SparseVec) -> CycloNum {
    let complex = DyComplex::trivial(double.clone(), Mode::Identity);
    let expected = Cochain::from_tensor(double.algebra(), c.degree(), x);
    complex.class_ratio(c, &expected).unwrap().expect("classes are proportional")
}

#[test]
fn bk_products_of_sequences() {
    let ex = BkExample::new(2).unwrap();
    let h = ex.algebra();
    for i in 1..=2 {
        for j in 1..=2 {
            let seqs = ex.product_sequences(i, j).unwrap();
            let c = sequence_to_dy(&seqs, PivotOrder::Forward).unwrap();
            assert_eq!(c, Cochain::from_tensor(h, 2, &bk_cocycle(h, i, j)), "S_{i}^- o S_{j}^+");
        }
    }
}

#[test]
fn single_bk_sequence_gives_degree_one_class() {
    let ex = BkExample::new(1).unwrap();
    let seq = ex.sequence(1, true).unwrap();
    let lift = lift_ses_to_bar_cocycle(&seq, PivotOrder::Forward).unwrap();
    assert_eq!(lift.dy.degree(), 1);
    let complex = DyComplex::new(seq.quotient().clone(), seq.sub().clone(), Mode::Identity).unwrap();
    assert!(complex.is_cocycle(&lift.dy));
    assert!(complex.coboundary_preimage(&lift.dy).unwrap().is_none());
}

#[test]
fn split_sequence_gives_trivial_class() {
    let ex = BkExample::new(1).unwrap();
    let seq = AllowableSES::split(ex.character(false).unwrap(), ex.character(true).unwrap()).unwrap();
    let lift = lift_ses_to_bar_cocycle(&seq, PivotOrder::Forward).unwrap();
    assert!(lift.dy.is_zero());
}

#[test]
fn mismatched_chain_is_rejected() {
    let ex = BkExample::new(1).unwrap();
    let seqs = [ex.sequence(1, true).unwrap(), ex.sequence(1, true).unwrap()];
    assert!(matches!(sequence_to_dy(&seqs, PivotOrder::Forward), Err(crate::Error::ChainMismatch(_))));
    assert!(matches!(sequence_to_dy(&[], PivotOrder::Forward), Err(crate::Error::InvalidParameter(_))));
}

#[test]
fn non_equivariant_maps_are_rejected() {
    let ex = BkExample::new(1).unwrap();
    let f = ex.algebra().field();
    let one = CycloNum::one(f);
    let wrong = crate::Matrix::from_triplets(f, 2, 1, [(0, 0, one.clone())]);
    let proj = crate::Matrix::from_triplets(f, 1, 2, [(0, 0, one)]);
    let r = AllowableSES::new(
        ex.character(false).unwrap(),
        ex.extension_module(1, true).unwrap(),
        ex.character(true).unwrap(),
        wrong,
        proj,
    );
    assert!(matches!(r, Err(crate::Error::NotEquivariant(_))));
}

#[test]
fn allowable_maps() {
    let ex = TaftExample::new(3).unwrap();
    let (v00, k, incl) = ex.radical().unwrap();
    assert!(is_allowable(&k, &v00, &incl).unwrap().is_some());
    let cover = ex.cover().unwrap();
    let s = is_allowable(&cover.module, &cover.target, &cover.map).unwrap().unwrap();
    assert_eq!(cover.map.mul(&s).mul(&cover.map), cover.map);
}

#[test]
fn taft_composite_spans_second_cohomology() {
    for n in [3, 4] {
        let ex = TaftExample::new(n).unwrap();
        let seqs = ex.sequences().unwrap();
        let c = sequence_to_dy(&seqs, PivotOrder::Forward).unwrap();
        assert!(trivial_ratio(ex.double(), &c, &ex.explicit_cocycle()).is_one(), "T_{n}");
    }
}

#[test]
fn taft_lifts_are_unique() {
    let ex = TaftExample::new(3).unwrap();
    for seq in ex.sequences().unwrap() {
        let fwd = lift_ses_to_bar_cocycle(&seq, PivotOrder::Forward).unwrap();
        let rev = lift_ses_to_bar_cocycle(&seq, PivotOrder::Reverse).unwrap();
        assert_eq!(fwd.section, rev.section);
        assert_eq!(fwd.dy, rev.dy);
    }
}

#[test]
fn bar_ui_composite_is_multiple_of_first_cocycle() {
    let ex = BarUi::new().unwrap();
    let f = ex.algebra().field();
    let seqs = ex.sequences().unwrap();
    let c = sequence_to_dy(&seqs, PivotOrder::Forward).unwrap();
    let [c1, _, _] = ex.explicit_cocycles();
    assert_eq!(trivial_ratio(ex.double(), &c, &c1), CycloNum::zeta(f));
}

#[test]
fn bar_ui_distinct_lifts_give_same_class() {
    let ex = BarUi::new().unwrap();
    let [_, middle, _] = ex.sequences().unwrap();
    let ambiguity = lift_ambiguity(&middle).unwrap();
    assert_eq!(ambiguity.len(), 1);
    let fwd = lift_ses_to_bar_cocycle(&middle, PivotOrder::Forward).unwrap();
    let rev = lift_ses_to_bar_cocycle(&middle, PivotOrder::Reverse).unwrap();
    let shifted = lift_from_eta0(&middle, fwd.eta0.add(&ambiguity[0])).unwrap();
    assert_ne!(fwd.eta0, shifted.eta0);
    assert_ne!(fwd.section, shifted.section);
    // the difference factors through the augmentation, so it dies on d_1
    assert_eq!(fwd.cocycle, shifted.cocycle);
    let complex = DyComplex::new(middle.quotient().clone(), middle.sub().clone(), Mode::Identity).unwrap();
    assert!(complex.class_equal(&fwd.dy, &shifted.dy).unwrap());
    assert!(complex.class_equal(&fwd.dy, &rev.dy).unwrap());
}

#[test]
fn taft_lift_has_no_ambiguity() {
    let ex = TaftExample::new(3).unwrap();
    for seq in ex.sequences().unwrap() {
        assert!(lift_ambiguity(&seq).unwrap().is_empty());
    }
}

#[test]
fn foreign_eta0_is_rejected() {
    let ex = BkExample::new(1).unwrap();
    let seq = ex.sequence(1, true).unwrap();
    let lift = lift_ses_to_bar_cocycle(&seq, PivotOrder::Forward).unwrap();
    let doubled = lift.eta0.scale(&CycloNum::from_int(ex.algebra().field(), 2));
    assert!(matches!(lift_from_eta0(&seq, doubled), Err(crate::Error::LiftFailed(_))));
}

#[test]
fn taft_eta0_on_fourier_basis() {
    let ex = TaftExample::new(3).unwrap();
    let hd = ex.double().dual();
    let [_, second] = ex.sequences().unwrap();
    let lift = lift_ses_to_bar_cocycle(&second, PivotOrder::Forward).unwrap();
    let f = hd.field();
    for i in 0..3 {
        for j in 0..3 {
            let x = hd.mul(&hd.power(ex.y(), i), &ex.phi(j as i64));
            let image = lift.eta0.mul_vec(&x);
            let expected = if j == 0 { SparseVec::unit(i, f) } else { SparseVec::new() };
            assert_eq!(image, expected, "y^{i} phi_{j}");
        }
    }
}

#[test]
fn taft_single_sequence_cochains() {
    let n = 3;
    let ex = TaftExample::new(n).unwrap();
    let h = ex.algebra();
    let f = h.field();
    let q = ex.q();
    let [first, second] = ex.sequences().unwrap();
    let xg = |a: usize, b: usize| h.basis_elem(a * n + b % n);
    let inv_fact = |k: usize| q_factorial(&q, k as u32).inv().unwrap();

    // 1 -> -sum_i 1/(i)_q! x^i (x) s_(i-1)
    let mut s2 = Matrix::zeros(f, h.dim() * (n - 1), 1);
    for i in 1..n {
        for (t, _) in xg(i, 0).iter() {
            s2.set(t * (n - 1) + i - 1, 0, -inv_fact(i));
        }
    }
    let got = lift_ses_to_bar_cocycle(&second, PivotOrder::Forward).unwrap().dy;
    assert_eq!(got, Cochain::new(1, n - 1, s2));

    // s_k -> -1/(n-k-1)_q! x^(n-k-1) g^(k+1) (x) 1
    let mut s1 = Matrix::zeros(f, h.dim(), n - 1);
    for k in 0..n - 1 {
        for (t, _) in xg(n - k - 1, k + 1).iter() {
            s1.set(t, k, -inv_fact(n - k - 1));
        }
    }
    let got = lift_ses_to_bar_cocycle(&first, PivotOrder::Forward).unwrap().dy;
    assert_eq!(got, Cochain::new(1, 1, s1));
}

#[test]
fn bar_ui_cover_from_counit_contains_phi0() {
    let ex = BarUi::new().unwrap();
    let cover = Cover::of_unit(ex.double().clone()).unwrap();
    assert_eq!(cover.module.dim(), 8);
    assert!(cover.verify().certified());
    assert!(cover.contains(&ex.phi(0)) && cover.contains(&ex.phi(2)));
    assert!(!cover.contains(&ex.phi(1)));
}

#[test]
fn bar_ui_dimension_formulas() {
    let ex = BarUi::new().unwrap();
    let cover = ex.cover().unwrap();
    let expected = [(2, vec![2, 2], 0), (3, vec![10, 9, 2], 3), (4, vec![44, 54, 10], 0)];
    for (n, terms, dim) in expected {
        for via in [Via::Hom, Via::Invariants] {
            let r = dim_formula(&cover, n, via).unwrap();
            assert_eq!((r.term_dims(), r.dim), (terms.clone(), dim), "n = {n} via {via:?}");
        }
    }
    assert_eq!(dim_formula(&cover, 3, Via::Hom).unwrap().expression(), "10 - 9 + 2 = 3");
    assert_eq!(dim_formula(&cover, 2, Via::Hom).unwrap().expression(), "2 - 2 = 0");
}

#[test]
fn formula_agrees_with_direct_complex() {
    let taft = TaftExample::new(3).unwrap();
    let bk1 = BkExample::new(1).unwrap();
    let cases = [(taft.cover().unwrap(), vec![2, 3]), (Cover::of_unit(bk1.double().clone()).unwrap(), vec![2, 3, 4])];
    for (cover, degrees) in cases {
        let complex = DyComplex::trivial(cover.module.double().clone(), Mode::Identity);
        for n in degrees {
            let r = dim_formula(&cover, n, Via::Hom).unwrap();
            assert_eq!(r.dim, complex.cohomology(n).dim, "{} n = {n}: {}", cover.module.double().algebra().name(), r.expression());
        }
    }
}

#[test]
fn formula_with_coefficients_agrees_with_direct_complex() {
    let ex = BkExample::new(1).unwrap();
    let unit_cover = Cover::of_unit(ex.double().clone()).unwrap();
    let chars = [ex.character(true).unwrap(), ex.character(false).unwrap()];
    for v in &chars {
        let source_cover = Cover::of_module(v).unwrap();
        assert!(source_cover.verify().certified());
        for w in &chars {
            let complex = DyComplex::new(v.clone(), w.clone(), Mode::Identity).unwrap();
            for n in 2..=3 {
                let r = dim_formula_with_coefficients(&unit_cover, &source_cover, w, n, Via::Hom).unwrap();
                assert_eq!(r.dim, complex.cohomology(n).dim, "n = {n}: {}", r.expression());
            }
        }
    }
}

#[test]
fn formula_rejects_bad_input() {
    let ex = BarUi::new().unwrap();
    let mut cover = ex.cover().unwrap();
    assert!(matches!(dim_formula(&cover, 1, Via::Hom), Err(crate::Error::InvalidParameter(_))));
    cover.map = cover.map.scale(&CycloNum::zero(ex.algebra().field()));
    assert!(matches!(dim_formula(&cover, 2, Via::Hom), Err(crate::Error::UnverifiedCover(_))));
}

fn uq3_blocks() -> Blocks {
    let h = std::sync::Arc::new(crate::hopf::builders::uq_sl2(3).unwrap());
    let simples = uq_simples(&h, 3).unwrap();
    blocks_and_principal(h, &simples).unwrap()
}

#[test]
fn uq_block_idempotents_are_central_orthogonal_and_complete() {
    let b = uq3_blocks();
    let h = b.q1.algebra().clone();
    assert_eq!(b.idempotents.len(), 2);
    assert_eq!(b.simples, vec![vec![0, 1], vec![2]]);
    let total = b.idempotents.iter().fold(SparseVec::new(), |acc, e| acc.add(e));
    assert_eq!(&total, h.one());
    for (i, e) in b.idempotents.iter().enumerate() {
        assert!(b.center.contains(e));
        for (j, f) in b.idempotents.iter().enumerate() {
            let p = h.mul(e, f);
            if i == j {
                assert_eq!(&p, e);
            } else {
                assert!(p.is_zero());
            }
        }
    }
    assert!(b.blocks_indecomposable().unwrap());
}

#[test]
fn uq_principal_block_data() {
    let b = uq3_blocks();
    assert_eq!((b.q1.dim(), b.k1.dim(), b.t.dim()), (18, 17, 17));
    let iso = b.t_to_k1_dual.as_ref().expect("T is isomorphic to the dual of K_1");
    assert!(b.t.is_morphism(&b.k1.dual(), iso));
}

#[test]
fn uq_factorizable_formula() {
    let b = uq3_blocks();
    let two = facto_dim_formula(&b, 2).unwrap();
    assert_eq!(two.term_dims(), vec![2, 2]);
    assert_eq!(two.dim, 0);
    let three = facto_dim_formula(&b, 3).unwrap();
    assert_eq!(three.expression(), "8 - 9 + 2 = 1");
    assert!(facto_dim_formula(&b, 1).is_err());
}

#[test]
fn semisimple_group_algebra_has_trivial_principal_data() {
    let h = std::sync::Arc::new(crate::hopf::builders::bk(0).unwrap());
    let simples = bk_simples(&h).unwrap();
    let b = blocks_and_principal(h, &simples).unwrap();
    assert_eq!(b.idempotents.len(), 2);
    assert_eq!((b.q1.dim(), b.k1.dim(), b.t.dim()), (1, 0, 0));
    assert_eq!(facto_dim_formula(&b, 2).unwrap().dim, 0);
    assert_eq!(facto_dim_formula(&b, 3).unwrap().dim, 0);
}
