use crate::algebra::{AlgebraSpec, Loaded};
use crate::report::Report;
use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use serde_json::json;
use ydcoh::dy::{Cochain, CohomologyReport, DyComplex, Mode};
use ydcoh::examples::{bk_cocycle, Cover};
use ydcoh::hopf::validate_hopf;
use ydcoh::linalg::PivotOrder;
use ydcoh::relext::{
    blocks_and_principal, bk_simples, dim_formula, facto_dim_formula, lift_ses_to_bar_cocycle, sequence_to_dy,
    uq_simples, AllowableSES, DimFormula, Via,
};

/// How a dimension is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Cohomology of the cochain complex itself.
    Direct,
    /// Relative-Ext formula from a certified cover, Hom spaces solved directly.
    Cover,
    /// Same formula with each Hom space computed as tensor invariants.
    Invariants,
    /// Principal-block formula for factorizable algebras.
    Blocks,
}

impl Route {
    pub fn provenance(self) -> &'static str {
        match self {
            Route::Direct => "direct complex",
            Route::Cover => "dimension formula (hom)",
            Route::Invariants => "dimension formula (invariants)",
            Route::Blocks => "principal block formula",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Identity,
    Forgetful,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Identity => Mode::Identity,
            ModeArg::Forgetful => Mode::Forgetful,
        }
    }
}

/// Degrees requested on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degrees(pub Vec<usize>);

/// `N`, `A..B` (inclusive) or a comma-separated list.
pub fn parse_degrees(s: &str) -> std::result::Result<Degrees, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad degree {t:?}"));
    let out: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty degree range {s:?}"));
        }
        (a..=b).collect()
    } else {
        s.split(',').map(num).collect::<std::result::Result<_, _>>()?
    };
    Ok(Degrees(out))
}

pub fn validate(alg: &Loaded) -> Report {
    let mut r = Report::default();
    let checks = validate_hopf(alg.algebra());
    for c in &checks.checks {
        match &c.witness {
            None => r.line(format!("{:<24} ok", c.axiom)),
            Some(w) => r.line(format!("{:<24} FAILS at {w}", c.axiom)),
        }
        r.push("axioms", json!({ "axiom": c.axiom, "passed": c.passed(), "witness": c.witness }));
    }
    r.failed = !checks.ok();
    r.line(if checks.ok() { "all axioms hold" } else { "axiom check failed" });
    r
}

fn cohomology_json(c: &CohomologyReport) -> serde_json::Value {
    json!({
        "degree": c.degree,
        "route": Route::Direct.provenance(),
        "mode": c.mode.name(),
        "cochains": c.dim_cochains,
        "cocycles": c.dim_kernel,
        "coboundaries": c.dim_image_prev,
        "dim": c.dim,
    })
}

fn formula_json(f: &DimFormula, route: Route) -> serde_json::Value {
    let terms: Vec<_> =
        f.terms.iter().map(|t| json!({ "space": t.space, "dim": t.dim, "sign": if t.negative { -1 } else { 1 } })).collect();
    json!({
        "degree": f.degree,
        "route": route.provenance(),
        "terms": terms,
        "expression": f.expression(),
        "dim": f.dim,
    })
}

fn cover_of(alg: &Loaded) -> Result<Cover> {
    Ok(match alg {
        Loaded::Taft(t) => t.cover()?,
        Loaded::BarUi(b) => b.cover()?,
        _ => Cover::of_unit(alg.double().clone())?,
    })
}

fn formula(alg: &Loaded, n: usize, route: Route) -> Result<DimFormula> {
    Ok(match route {
        Route::Cover => dim_formula(&cover_of(alg)?, n, Via::Hom)?,
        Route::Invariants => dim_formula(&cover_of(alg)?, n, Via::Invariants)?,
        Route::Blocks => {
            let simples = simples_of(alg)?;
            facto_dim_formula(&blocks_and_principal(alg.arc_algebra(), &simples)?, n)?
        }
        Route::Direct => unreachable!("direct route has no formula"),
    })
}

pub fn dy_dim(alg: &Loaded, degrees: &[usize], route: Route, mode: Mode) -> Result<Report> {
    let mut r = Report::default();
    if route == Route::Direct {
        let complex = DyComplex::trivial(alg.double().clone(), mode);
        for &n in degrees {
            let c = complex.cohomology(n);
            r.line(format!("dim H^{n} = {}", c.dim));
            r.push("degrees", cohomology_json(&c));
        }
        return Ok(r);
    }
    if mode != Mode::Identity {
        bail!("dimension formulas compute the identity-functor cohomology only; use --via direct for {}", mode.name());
    }
    for &n in degrees {
        let f = formula(alg, n, route)?;
        for t in &f.terms {
            r.line(format!("{} = {}", t.space, t.dim));
        }
        r.line(f.expression());
        r.line(format!("dim H^{n} = {}", f.dim));
        r.push("degrees", formula_json(&f, route));
    }
    Ok(r)
}

pub fn dim_formula_cmd(alg: &Loaded, degrees: &[usize], route: Route) -> Result<Report> {
    if route == Route::Direct {
        bail!("dim-formula needs --via cover, invariants or blocks");
    }
    dy_dim(alg, degrees, route, Mode::Identity)
}

pub fn dy_basis(alg: &Loaded, degrees: &[usize], mode: Mode) -> Report {
    let mut r = Report::default();
    let complex = DyComplex::trivial(alg.double().clone(), mode);
    let h = alg.algebra();
    for &n in degrees {
        let c = complex.cohomology(n);
        r.line(format!("dim H^{n} = {}", c.dim));
        let mut reps = Vec::new();
        for (k, b) in c.basis.iter().enumerate() {
            let shown = b.display(h);
            r.line(format!("  [{}] {shown}", k + 1));
            reps.push(shown);
        }
        let mut entry = cohomology_json(&c);
        entry["basis"] = json!(reps);
        r.push("degrees", entry);
    }
    r
}

pub fn cover(alg: &Loaded) -> Result<Report> {
    let mut r = Report::default();
    let cov = cover_of(alg)?;
    let rep = cov.verify();
    let (kernel, _) = cov.kernel()?;
    let self_dual = cov.module.find_isomorphism(&cov.module.dual()?)?.is_some();
    r.line(format!("cover dim = {} inside an ambient of dim {}", rep.dim, cov.ambient.dim()));
    for (name, ok) in [
        ("direct summand", rep.is_summand),
        ("surjective", rep.surjective),
        ("H-split", rep.h_split),
        ("indecomposable", rep.indecomposable),
        ("nonzero", rep.nonzero),
        ("D(H)-linear", rep.morphism),
    ] {
        r.line(format!("{name:<16} {}", if ok { "yes" } else { "no" }));
        r.push("checks", json!({ "check": name, "passed": ok }));
    }
    r.line(format!("kernel dim = {}", kernel.dim()));
    r.line(format!("self-dual = {}", if self_dual { "yes" } else { "no" }));
    r.line(format!("certified = {}", if rep.certified() { "yes" } else { "no" }));
    r.set("dim", rep.dim);
    r.set("ambient_dim", cov.ambient.dim());
    r.set("kernel_dim", kernel.dim());
    r.set("self_dual", self_dual);
    r.set("certified", rep.certified());
    r.failed = !rep.certified();
    Ok(r)
}

fn sequences_of(alg: &Loaded, pair: (usize, usize)) -> Result<(Vec<AllowableSES>, Cochain, &'static str)> {
    let h = alg.algebra();
    Ok(match alg {
        Loaded::Bk(b) => {
            let (i, j) = pair;
            if i == 0 || j == 0 || i > b.k() || j > b.k() {
                bail!("--pair indices must lie in 1..={}", b.k());
            }
            let reference = Cochain::from_tensor(h, 2, &bk_cocycle(h, i, j));
            (b.product_sequences(i, j)?.to_vec(), reference, "x_j (x) x_i g")
        }
        Loaded::Taft(t) => (t.sequences()?.to_vec(), Cochain::from_tensor(h, 2, &t.explicit_cocycle()), "explicit 2-cocycle"),
        Loaded::BarUi(b) => {
            let [c1, _, _] = b.explicit_cocycles();
            (b.sequences()?.to_vec(), Cochain::from_tensor(h, 3, &c1), "c_1")
        }
        Loaded::Plain { .. } => bail!("no allowable sequences are shipped for this algebra"),
    })
}

pub fn sequence_to_cocycle(alg: &Loaded, pair: (usize, usize)) -> Result<Report> {
    let mut r = Report::default();
    let (seqs, reference, ref_name) = sequences_of(alg, pair)?;
    let fwd = sequence_to_dy(&seqs, PivotOrder::Forward)?;
    let rev = sequence_to_dy(&seqs, PivotOrder::Reverse)?;
    let first = seqs.first().expect("non-empty chain");
    let last = seqs.last().expect("non-empty chain");
    let complex = DyComplex::new(last.quotient().clone(), first.sub().clone(), Mode::Identity)?;
    let is_cocycle = complex.is_cocycle(&fwd);
    let independent = complex.class_equal(&fwd, &rev)?;
    let ambiguity: Vec<usize> = seqs.iter().map(|s| ydcoh::relext::lift_ambiguity(s).map(|a| a.len())).collect::<ydcoh::Result<_>>()?;
    for (k, s) in seqs.iter().enumerate() {
        let lift = lift_ses_to_bar_cocycle(s, PivotOrder::Forward)?;
        r.push("sequences", json!({
            "index": k + 1,
            "dims": [s.sub().dim(), s.middle().dim(), s.quotient().dim()],
            "lift_ambiguity": ambiguity[k],
            "cocycle": lift.dy.display(alg.algebra()),
        }));
    }
    let ratio = complex.class_ratio(&fwd, &reference)?;
    let shown = fwd.display(alg.algebra());
    r.line(format!("degree = {}", fwd.degree()));
    r.line(format!("cocycle = {shown}"));
    r.line(format!("is cocycle = {}", if is_cocycle { "yes" } else { "no" }));
    r.line(format!("pivot orders agree in cohomology = {}", if independent { "yes" } else { "no" }));
    r.line(format!("lift ambiguity per sequence = {ambiguity:?}"));
    let ratio_text = ratio.as_ref().map_or("not a multiple".to_string(), |t| t.to_string());
    r.line(format!("class / [{ref_name}] = {ratio_text}"));
    r.set("degree", fwd.degree());
    r.set("cocycle", shown);
    r.set("is_cocycle", is_cocycle);
    r.set("pivot_orders_agree", independent);
    r.set("reference", ref_name);
    r.set("ratio", ratio_text);
    r.failed = !is_cocycle || !independent || ratio.is_none();
    Ok(r)
}

fn simples_of(alg: &Loaded) -> Result<Vec<Vec<ydcoh::Matrix>>> {
    let h = alg.algebra();
    Ok(match alg {
        Loaded::Plain { uq: Some(p), .. } => uq_simples(h, *p)?,
        Loaded::Bk(b) if b.k() == 0 => bk_simples(h)?,
        _ => return Err(anyhow!("no list of simple modules is shipped for this algebra; blocks needs uq:P or bk:0")),
    })
}

pub fn blocks(alg: &Loaded, degrees: &[usize]) -> Result<Report> {
    let mut r = Report::default();
    let simples = simples_of(alg)?;
    let b = blocks_and_principal(alg.arc_algebra(), &simples)?;
    let h = alg.algebra();
    r.line(format!("center dim = {}", b.center.dim()));
    for (k, (e, s)) in b.idempotents.iter().zip(&b.simples).enumerate() {
        let dims: Vec<usize> = s.iter().map(|&i| simples[i][0].nrows()).collect();
        let mark = if k == b.principal { " (principal)" } else { "" };
        r.line(format!("block {k}{mark}: simples of dims {dims:?}, e = {}", h.format_element(e)));
        r.push("blocks", json!({ "index": k, "principal": k == b.principal, "simple_dims": dims, "idempotent": h.format_element(e) }));
    }
    let indecomposable = b.blocks_indecomposable()?;
    let iso = b.t_to_k1_dual.is_some();
    r.line(format!("dim Q_1 = {}, dim K_1 = {}, dim T = {}", b.q1.dim(), b.k1.dim(), b.t.dim()));
    r.line(format!("T isomorphic to K_1^v = {}", if iso { "yes" } else { "no" }));
    r.line(format!("blocks indecomposable = {}", if indecomposable { "yes" } else { "no" }));
    r.set("center_dim", b.center.dim());
    r.set("principal", b.principal);
    r.set("q1_dim", b.q1.dim());
    r.set("k1_dim", b.k1.dim());
    r.set("t_dim", b.t.dim());
    r.set("t_iso_k1_dual", iso);
    r.set("blocks_indecomposable", indecomposable);
    for &n in degrees {
        let f = facto_dim_formula(&b, n)?;
        for t in &f.terms {
            r.line(format!("{} = {}", t.space, t.dim));
        }
        r.line(f.expression());
        r.line(format!("dim H^{n} = {}", f.dim));
        r.push("degrees", formula_json(&f, Route::Blocks));
    }
    r.failed = !iso || !indecomposable;
    Ok(r)
}

pub fn describe(spec: &AlgebraSpec, alg: &Loaded) -> serde_json::Value {
    let h = alg.algebra();
    json!({
        "spec": spec.to_string(),
        "name": h.name(),
        "dim": h.dim(),
        "conductor": h.field().conductor(),
    })
}
