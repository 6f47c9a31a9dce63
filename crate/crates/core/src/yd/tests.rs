use super::*;
use crate::examples::{BarUi, TaftExample};
use crate::hopf::builders::{bar_ui, bk, taft, uq_sl2};
use crate::linalg::{rank, Subspace};
use crate::{CycloNum, Error, Matrix, SparseVec};
use once_cell::sync::Lazy;

static BAR: Lazy<BarUi> = Lazy::new(|| BarUi::new().unwrap());

fn is_ok(v: &YdModule) -> bool {
    let r = v.validate();
    if !r.ok() {
        eprintln!("{r}");
    }
    r.ok()
}

fn cover_parts() -> (YdModule, YdModule, YdModule, YdModule) {
    let cov = BAR.cover().unwrap();
    let (k, _) = cov.kernel().unwrap();
    let kd = k.dual().unwrap();
    (cov.ambient, cov.module, k, kd)
}

#[test]
fn trivial_and_coadjoint_validate() {
    for h in [bk(1).unwrap(), taft(3).unwrap(), bar_ui().unwrap(), uq_sl2(3).unwrap()] {
        let d = h.dim();
        let dbl = Double::new(h);
        assert!(is_ok(&YdModule::trivial(dbl.clone())));
        let fc = YdModule::coadjoint(dbl);
        assert_eq!(fc.dim(), d);
        assert!(is_ok(&fc));
    }
}

#[test]
fn constant_coaction_breaks_exchange_relation() {
    let fc = BAR.coadjoint();
    let f = fc.field();
    let h = BAR.algebra();
    let blocks = (0..h.dim())
        .map(|a| match h.one().get(a) {
            Some(c) => Matrix::identity(f, fc.dim()).scale(c),
            None => Matrix::zeros(f, fc.dim(), fc.dim()),
        })
        .collect();
    let bad = fc.with_coaction(blocks).unwrap();
    let report = bad.validate();
    assert!(report.checks[0].passed() && report.checks[1].passed());
    assert!(!report.checks[2].passed());
}

#[test]
fn dual_basis_in_terms_of_fourier_elements() {
    let h = BAR.algebra();
    let i = CycloNum::zeta(h.field());
    let idx = |l: &str| h.labels().iter().position(|s| s == l).unwrap();
    let pow = |p: &str, l: i64| match l {
        0 if p.is_empty() => "1".to_string(),
        0 => p.to_string(),
        1 => format!("{p}K"),
        _ => format!("{p}K^{l}"),
    };
    for l in 0..4i64 {
        let unit = |lab: String| SparseVec::unit(idx(&lab), h.field());
        assert_eq!(unit(pow("", l)), BAR.phi(-l));
        assert_eq!(unit(pow("E", l)), BAR.monomial(1, 0, -l).scale(&i.pow(l)));
        assert_eq!(unit(pow("F", l)), BAR.monomial(0, 1, 1 - l).scale(&i.pow(-l)));
        assert_eq!(unit(pow("EF", l)), BAR.monomial(1, 1, 1 - l));
    }
}

#[test]
fn coadjoint_action_on_fourier_elements() {
    // E phi_0 = (c phi_0 + c phi_2)/2, F phi_0 = (i/2)(b phi_0 + b phi_2)
    let fc = BAR.coadjoint();
    let h = BAR.algebra();
    let [e, fi, _] = crate::hopf::builders::sl2_generator_indices(h);
    let f = h.field();
    let half = CycloNum::frac(f, 1, 2);
    let ihalf = &CycloNum::zeta(f) * &half;
    let c_sum = BAR.monomial(0, 1, 0).add(&BAR.monomial(0, 1, 2));
    let b_sum = BAR.monomial(1, 0, 0).add(&BAR.monomial(1, 0, 2));
    assert_eq!(fc.action(e).mul_vec(&BAR.phi(0)), c_sum.scale(&half));
    assert_eq!(fc.action(e).mul_vec(&BAR.phi(2)), c_sum.scale(&-half.clone()));
    assert_eq!(fc.action(fi).mul_vec(&BAR.phi(0)), b_sum.scale(&ihalf));
    assert_eq!(fc.action(fi).mul_vec(&BAR.phi(2)), b_sum.scale(&-ihalf));
}

#[test]
fn cover_of_trivial_module() {
    let cov = BAR.cover().unwrap();
    assert_eq!(cov.module.dim(), 8);
    assert!(is_ok(&cov.module));
    // spanned by b^i c^j phi_0, b^i c^j phi_2
    let expected: Vec<SparseVec> = (0..2)
        .flat_map(|i| (0..2).flat_map(move |j| [(i, j, 0), (i, j, 2)]))
        .map(|(i, j, l)| BAR.monomial(i, j, l))
        .collect();
    let span = Subspace::span(cov.module.field(), 16, expected);
    assert_eq!(span, Subspace::span(cov.module.field(), 16, cov.incl.cols()));
    let report = cov.verify();
    assert!(report.certified(), "{report:?}");
    let (k, _) = cov.kernel().unwrap();
    assert_eq!(k.dim(), 7);
    assert!(is_ok(&k));
}

#[test]
fn full_coadjoint_module_is_not_a_cover() {
    let cov = BAR.cover().unwrap();
    let ambient = cov.ambient.clone();
    let full = crate::examples::Cover {
        module: ambient.clone(),
        map: BAR.counit_map(),
        target: cov.target.clone(),
        incl: Matrix::identity(ambient.field(), 16),
        ambient,
    };
    let report = full.verify();
    assert!(report.is_summand && report.surjective && report.h_split);
    assert!(!report.indecomposable && !report.certified());
    let parts = full.module.decompose().unwrap();
    let mut dims: Vec<usize> = parts.iter().map(|(p, _)| p.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![4, 4, 8]);
    let counit = BAR.counit_map();
    let carrying: Vec<_> = parts.iter().filter(|(_, i)| !counit.mul(i).is_zero()).collect();
    assert_eq!(carrying.len(), 1);
    let f = cov.module.field();
    assert_eq!(Subspace::span(f, 16, carrying[0].1.cols()), Subspace::span(f, 16, cov.incl.cols()));
}

#[test]
fn duals_of_cover_and_kernel() {
    let (_, r, k, kd) = cover_parts();
    for v in [&r, &k, &kd] {
        assert!(is_ok(v));
    }
    assert!(is_ok(&r.dual().unwrap()));
    assert!(r.find_isomorphism(&r.dual().unwrap()).unwrap().is_some());
    let cov = BAR.cover().unwrap();
    let bc_phi2 = BAR.monomial(1, 1, 2);
    let coords = Subspace::span(r.field(), 16, cov.incl.cols()).coords(&bc_phi2).unwrap();
    // coordinates relative to the canonical basis equal those relative to incl columns
    let line = r.generated_subspace(&[coords]);
    assert_eq!(line.dim(), 1);
    let (quot, _) = r.quotient(&line).unwrap();
    assert!(is_ok(&quot));
    let iso = kd.find_isomorphism(&quot).unwrap().expect("K dual is R / <bc phi_2>");
    assert!(kd.is_morphism(&quot, &iso) && rank(&iso) == 7);
}

#[test]
fn hom_dimensions_for_degree_two() {
    let (_, r, k, kd) = cover_parts();
    assert_eq!(k.hom_dim(&kd).unwrap(), 2);
    assert_eq!(r.hom_dim(&kd).unwrap(), 2);
    assert!(r.hom_dim(&r).unwrap() >= 1);
}

#[test]
fn invariant_dimensions_for_degrees_three() {
    let (_, r, _, kd) = cover_parts();
    let kd2 = kd.tensor(&kd).unwrap();
    assert_eq!(kd2.dim(), 49);
    assert_eq!(kd2.invariants_dim(), 2);
    assert_eq!(kd2.tensor_invariants(&kd).unwrap().dim(), 10);
    assert_eq!(kd2.tensor_invariants(&r).unwrap().dim(), 9);
}

#[test]
fn hom_tensor_adjunction() {
    let (_, r, k, kd) = cover_parts();
    let triv = YdModule::trivial(r.double().clone());
    let mods = [triv, k, r, kd];
    for v in &mods {
        let vd = v.dual().unwrap();
        for w in &mods {
            let by_hom = v.hom_dim(w).unwrap();
            let by_inv = w.tensor(&vd).unwrap().invariants_dim();
            assert_eq!(by_hom, by_inv);
        }
        assert_eq!(YdModule::trivial(v.double().clone()).hom_dim(v).unwrap(), v.invariants_dim());
    }
}

#[test]
fn dual_coaction_matches_closed_form() {
    // lambda(f)(v) = S^-1(v_(-1)) f(v_(0)), i.e. coact_dual[x] = sum_y [S^-1 h_y]_x coact[y]^T
    let (_, r, _, _) = cover_parts();
    let h = r.double().algebra();
    let rd = r.dual().unwrap();
    for x in 0..h.dim() {
        let mut want = Matrix::zeros(r.field(), r.dim(), r.dim());
        for y in 0..h.dim() {
            if let Some(c) = h.antipode_inv_of(y).get(x) {
                want = want.add(&r.dual_action(y).transpose().scale(c));
            }
        }
        assert_eq!(*rd.dual_action(x), want);
    }
}

#[test]
fn tensoring_with_unit_changes_nothing() {
    let (_, r, _, _) = cover_parts();
    let triv = YdModule::trivial(r.double().clone());
    for t in [r.tensor(&triv).unwrap(), triv.tensor(&r).unwrap()] {
        assert_eq!(t.actions(), r.actions());
        assert_eq!(t.dual_actions(), r.dual_actions());
    }
    assert_eq!(triv.dual().unwrap().actions(), triv.actions());
    assert_eq!(triv.dual().unwrap().dual_actions(), triv.dual_actions());
}

#[test]
fn summands_and_non_summands() {
    let cov = BAR.cover().unwrap();
    let pi = cov.ambient.summand_complement(&cov.module, &cov.incl).unwrap();
    assert_eq!(pi.mul(&pi), pi);
    assert_eq!(pi.mul(&cov.incl), cov.incl);
    assert!(cov.ambient.is_morphism(&cov.ambient, &pi));
    let r = &cov.module;
    let socle = r.invariants();
    assert_eq!(socle.dim(), 1);
    let (line, incl) = r.submodule(&socle).unwrap();
    assert!(matches!(r.summand_complement(&line, &incl), Err(Error::NotASummand)));
    let report = r.end_radical_indecomposable();
    assert!(matches!(report.verdict, Verdict::Indecomposable));
    assert_eq!(report.end_dim - report.rad_dim, 1);
}

#[test]
fn induced_module_adjunction() {
    // Hom(F(X), W) = Hom_H(X, W)
    let (_, r, k, _) = cover_parts();
    let h = r.double().algebra();
    let triv = YdModule::trivial(r.double().clone());
    let fc = BAR.coadjoint();
    for w in [&r, &k, &triv] {
        let h_gens = |m: &YdModule| h.generators().iter().map(|&g| m.action(g).clone()).collect::<Vec<_>>();
        let (a, b) = (h_gens(&triv), h_gens(w));
        let direct = intertwiners(r.field(), &a.iter().collect::<Vec<_>>(), &b.iter().collect::<Vec<_>>(), 1, w.dim());
        assert_eq!(fc.hom_dim(w).unwrap(), direct.len());
    }
}

#[test]
fn taft_cover_and_induced_decomposition() {
    for n in [2usize, 3] {
        let t = TaftExample::new(n).unwrap();
        assert_eq!(t.phi(0), SparseVec::unit(t.algebra().unit_index().unwrap(), t.algebra().field()));
        let cov = t.cover().unwrap();
        assert_eq!(cov.module.dim(), n);
        assert!(cov.verify().certified());
        let v00 = t.v_module(0, 0).unwrap();
        assert!(cov.module.find_isomorphism(&v00).unwrap().is_some());
        for s in 0..n as i64 {
            let fx = t.induced_simple(s).unwrap();
            assert!(is_ok(&fx));
            let parts = fx.decompose().unwrap();
            assert_eq!(parts.len(), n);
            for (tt, _) in (0..n as i64).zip(0..) {
                let v = t.v_module(s, tt).unwrap();
                let hits = parts.iter().filter(|(p, _)| p.find_isomorphism(&v).unwrap().is_some()).count();
                assert_eq!(hits, 1, "V^({s},{tt}) in F(X_1^({s}))");
            }
        }
    }
}

#[test]
fn mismatched_algebras_are_rejected() {
    let a = YdModule::trivial(Double::new(bk(1).unwrap()));
    let b = YdModule::trivial(Double::new(bk(1).unwrap()));
    assert!(matches!(a.tensor(&b), Err(Error::AlgebraMismatch(_))));
    assert!(matches!(a.hom_dim(&b), Err(Error::AlgebraMismatch(_))));
}

#[test]
fn phi_0_alone_misses_phi_2() {
    let fc = BAR.coadjoint();
    let sp = fc.generated_subspace(&[BAR.phi(0)]);
    assert_eq!(sp.dim(), 7);
    assert!(!sp.contains(&BAR.phi(2)));
}
