//! Seeded property checks shared by the `properties` and `acceptance`
//! targets. Each returns a description of the first counterexample.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ydcoh::dy::{DyComplex, Mode};
use ydcoh::examples::{BarUi, BkExample, TaftExample};
use ydcoh::linalg::{kernel, rank, Matrix, SparseVec};
use ydcoh::yd::YdModule;
use ydcoh::{CycloField, CycloNum, Rat};

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_num(rng: &mut ChaCha8Rng, f: &'static CycloField) -> CycloNum {
    let coeffs = (0..f.degree())
        .map(|_| if rng.gen_bool(0.3) { Rat::int(0) } else { Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)) })
        .collect();
    CycloNum::from_coeffs(f, coeffs).expect("degree-many coefficients")
}

pub fn field_axioms(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    for &n in &[1u32, 3, 4, 5, 8, 12] {
        let f = CycloField::get(n);
        for _ in 0..cases {
            let (a, b, c) = (random_num(&mut r, f), random_num(&mut r, f), random_num(&mut r, f));
            ensure(&(&a + &b) + &c == &a + &(&b + &c), || format!("additive associativity in Q(zeta_{n})"))?;
            ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("multiplicative associativity in Q(zeta_{n})"))?;
            ensure(&a * &b == &b * &a, || format!("commutativity in Q(zeta_{n})"))?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity in Q(zeta_{n}): {a}, {b}, {c}"))?;
            ensure(&(&b + &a) - &a == b, || format!("additive inverse in Q(zeta_{n})"))?;
            if !a.is_zero() {
                let inv = a.inv().map_err(|e| e.to_string())?;
                ensure((&a * &inv).is_one(), || format!("inverse of {a} in Q(zeta_{n})"))?;
            }
            ensure(CycloNum::from_strings(f, &a.to_strings()).ok() == Some(a.clone()), || format!("string round trip of {a}"))?;
        }
    }
    Ok(())
}

pub fn random_matrix(r: &mut ChaCha8Rng, f: &'static CycloField, max: usize) -> Matrix {
    let (m, n) = (r.gen_range(1..=max), r.gen_range(1..=max));
    let mut trip = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if r.gen_bool(0.35) {
                trip.push((i, j, random_num(r, f)));
            }
        }
    }
    // low-rank products make dependencies common
    let a = Matrix::from_triplets(f, m, n, trip);
    if r.gen_bool(0.5) {
        let k = r.gen_range(1..=m.min(n));
        let left = Matrix::from_triplets(f, m, k, (0..m).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| (i, j, CycloNum::from_int(f, ((i * 7 + j * 3) % 5) as i64 - 2))).collect::<Vec<_>>());
        left.mul(&a.select_rows(&(0..k).collect::<Vec<_>>()))
    } else {
        a
    }
}

pub fn rank_nullity(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    let f = CycloField::get(3);
    for _ in 0..cases {
        let a = random_matrix(&mut r, f, 9);
        let ker = kernel(&a);
        ensure(rank(&a) + ker.len() == a.ncols(), || format!("rank {} + nullity {} != {}", rank(&a), ker.len(), a.ncols()))?;
        for v in &ker {
            ensure(a.mul_vec(v).is_zero(), || "kernel vector not annihilated".into())?;
        }
        ensure(rank(&a) == rank(&a.transpose()), || "row rank differs from column rank".into())?;
    }
    Ok(())
}

fn random_combination(r: &mut ChaCha8Rng, f: &'static CycloField, basis: &[SparseVec]) -> SparseVec {
    let mut acc = SparseVec::new();
    for b in basis {
        if r.gen_bool(0.5) {
            acc.add_scaled(&CycloNum::from_int(f, r.gen_range(-3..=3)), b);
        }
    }
    acc
}

pub fn differential_squares_to_zero(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    let algebras = [
        BkExample::new(1).unwrap().double().clone(),
        TaftExample::new(3).unwrap().double().clone(),
        BarUi::new().unwrap().double().clone(),
    ];
    for double in algebras {
        let f = double.field();
        for mode in [Mode::Identity, Mode::Forgetful] {
            let c = DyComplex::trivial(double.clone(), mode);
            let top = if double.algebra().dim() > 9 { 1 } else { 2 };
            for n in 0..=top {
                let basis = c.cochains(n);
                for _ in 0..cases {
                    let x = random_combination(&mut r, f, basis.basis());
                    let dx = c.coboundary_flat(n, &x);
                    ensure(c.cochains(n + 1).contains(&dx), || format!("{}: delta leaves C^{}", double.algebra().name(), n + 1))?;
                    ensure(c.coboundary_flat(n + 1, &dx).is_zero(), || {
                        format!("{} ({}): delta^2 != 0 in degree {n}", double.algebra().name(), mode.name())
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// The weight modules `W(l, m)` of the BarUi family that exist over `Q(i)`.
pub fn bar_ui_family(bar: &BarUi) -> Vec<(String, YdModule)> {
    let f = bar.algebra().field();
    let units: Vec<CycloNum> = (0..4).map(|k| CycloNum::zeta_pow(f, k)).collect();
    let mut out = vec![("1".to_string(), YdModule::trivial(bar.double().clone()))];
    for l in &units {
        for m in &units {
            if let Ok(w) = bar.weight_module(l, m) {
                out.push((format!("W({l}, {m})"), w));
            }
        }
    }
    let cover = bar.cover().unwrap();
    let (k, _) = cover.kernel().unwrap();
    out.push(("K^v".into(), k.dual().unwrap()));
    out.push(("K".into(), k));
    out.push(("R".into(), cover.module));
    out
}

pub fn yd_validation(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    let bar = BarUi::new().unwrap();
    let family = bar_ui_family(&bar);
    for (name, m) in &family {
        ensure(m.validate().ok(), || format!("{name} is not a YD module"))?;
        ensure(m.dual().map(|d| d.validate().ok()).unwrap_or(false), || format!("dual of {name} is not a YD module"))?;
    }
    let small: Vec<_> = family.iter().filter(|(_, m)| m.dim() <= 4).collect();
    for _ in 0..cases {
        let (a, b) = (small[r.gen_range(0..small.len())], small[r.gen_range(0..small.len())]);
        let t = a.1.tensor(&b.1).map_err(|e| e.to_string())?;
        ensure(t.validate().ok(), || format!("{} (x) {} is not a YD module", a.0, b.0))?;
    }
    Ok(())
}

pub fn graded_commutativity(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    for double in [BkExample::new(2).unwrap().double().clone(), TaftExample::new(3).unwrap().double().clone()] {
        let h = double.algebra().clone();
        let f = h.field();
        let c = DyComplex::trivial(double.clone(), Mode::Identity);
        let mut reps = Vec::new();
        for n in 0..=2 {
            let report = c.cohomology(n);
            // shift representatives by random coboundaries
            let bounds = if n == 0 { vec![] } else { c.cochains(n - 1).basis().to_vec() };
            for b in report.basis {
                for _ in 0..cases {
                    let shift = c.coboundary_flat(n - usize::from(n > 0), &random_combination(&mut r, f, &bounds));
                    let shifted = if n == 0 { b.clone() } else { ydcoh::dy::Cochain::from_flat(&h, n, 1, 1, &b.flatten().add(&shift)) };
                    reps.push(shifted);
                }
            }
        }
        for a in &reps {
            for b in reps.iter().take(cases * 2) {
                let ab = ydcoh::dy::yoneda_product(&c, a, &c, b).map_err(|e| e.to_string())?;
                let ba = ydcoh::dy::yoneda_product(&c, b, &c, a).map_err(|e| e.to_string())?;
                let sign = CycloNum::from_int(f, if a.degree() * b.degree() % 2 == 0 { 1 } else { -1 });
                ensure(c.class_equal(&ab, &ba.scale(&sign)).map_err(|e| e.to_string())?, || {
                    format!("{}: products of degrees {} and {} do not graded-commute", h.name(), a.degree(), b.degree())
                })?;
            }
        }
    }
    Ok(())
}

pub fn hom_tensor_adjunction(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    let bar = BarUi::new().unwrap();
    let family = bar_ui_family(&bar);
    for _ in 0..cases {
        let (v, w) = (&family[r.gen_range(0..family.len())], &family[r.gen_range(0..family.len())]);
        let by_hom = v.1.hom_dim(&w.1).map_err(|e| e.to_string())?;
        let vd = v.1.dual().map_err(|e| e.to_string())?;
        let by_inv = w.1.tensor(&vd).map_err(|e| e.to_string())?.invariants_dim();
        ensure(by_hom == by_inv, || format!("hom({}, {}) = {by_hom} but inv = {by_inv}", v.0, w.0))?;
    }
    Ok(())
}

