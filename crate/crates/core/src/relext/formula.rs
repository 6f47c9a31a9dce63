use super::cover::Cover;
use crate::error::{Error, Result};
use crate::yd::YdModule;
use serde::Serialize;

/// How each `Hom` term is evaluated: directly, or as the invariants of
/// `M (x) A^v` using `Hom(A, M) = Inv(M (x) A^v)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Via {
    #[default]
    Hom,
    Invariants,
}

impl Via {
    pub fn name(self) -> &'static str {
        match self {
            Via::Hom => "hom",
            Via::Invariants => "invariants",
        }
    }
}

impl std::str::FromStr for Via {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hom" => Ok(Via::Hom),
            "invariants" | "inv" => Ok(Via::Invariants),
            _ => Err(Error::InvalidParameter(format!("unknown evaluation route {s:?}"))),
        }
    }
}

/// One evaluated term: `sign * dim`, with a description of the space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub space: String,
    pub dim: usize,
    pub negative: bool,
}

/// An evaluated alternating sum of Hom (or invariant) dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimFormula {
    pub degree: usize,
    pub via: Via,
    pub terms: Vec<Term>,
    pub dim: usize,
}

impl DimFormula {
    pub(crate) fn assemble(degree: usize, via: Via, terms: Vec<Term>) -> Result<Self> {
        let total: i64 = terms.iter().map(|t| if t.negative { -(t.dim as i64) } else { t.dim as i64 }).sum();
        let dim = usize::try_from(total)
            .map_err(|_| Error::UnverifiedCover(format!("dimension formula evaluates to {total}")))?;
        Ok(DimFormula { degree, via, terms, dim })
    }

    /// `10 - 9 + 2 = 3`.
    pub fn expression(&self) -> String {
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            match (k, t.negative) {
                (0, false) => s.push_str(&t.dim.to_string()),
                (0, true) => s.push_str(&format!("-{}", t.dim)),
                (_, false) => s.push_str(&format!(" + {}", t.dim)),
                (_, true) => s.push_str(&format!(" - {}", t.dim)),
            }
        }
        format!("{s} = {}", self.dim)
    }

    pub fn term_dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim).collect()
    }
}

fn hom_term(src: &YdModule, src_name: &str, tgt: &YdModule, tgt_name: &str, via: Via) -> Result<(String, usize)> {
    match via {
        Via::Hom => Ok((format!("Hom({src_name}, {tgt_name})"), src.hom_dim(tgt)?)),
        Via::Invariants => {
            let dual = src.dual()?;
            Ok((format!("Inv({tgt_name} (x) {src_name}^v)"), tgt.tensor_invariants(&dual)?.dim()))
        }
    }
}

fn require_presentation(cover: &Cover, what: &str) -> Result<()> {
    if cover.is_rel_proj_presentation() {
        Ok(())
    } else {
        Err(Error::UnverifiedCover(format!("{what}: {:?}", cover.verify())))
    }
}

/// `dim Hom(K, M) - dim Hom(P, M) + dim Hom(1, M)` for `0 -> K -> P -> 1 -> 0`
/// and coefficient module `M`, with the three terms evaluated in parallel.
fn three_terms(
    degree: usize,
    via: Via,
    k: &YdModule,
    p: &YdModule,
    m: &YdModule,
    m_name: &str,
) -> Result<DimFormula> {
    let unit = YdModule::trivial(m.double().clone());
    let ((a, b), c) = rayon::join(
        || rayon::join(|| hom_term(k, "K", m, m_name, via), || hom_term(p, "P", m, m_name, via)),
        || hom_term(&unit, "1", m, m_name, via),
    );
    let terms = [(a?, false), (b?, true), (c?, false)]
        .into_iter()
        .map(|((space, dim), negative)| Term { space, dim, negative })
        .collect();
    DimFormula::assemble(degree, via, terms)
}

fn tensor_name(base: &str, power: usize) -> String {
    match power {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("({base})^{power}"),
    }
}

/// `dim H^n` with trivial coefficients from a relatively projective
/// presentation `0 -> K -> P -> 1 -> 0`, for `n >= 2`. When `P` is a genuine
/// cover (indecomposable) the degree-two formula drops its vanishing last term.
pub fn dim_formula(cover: &Cover, n: usize, via: Via) -> Result<DimFormula> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("dimension formula needs degree >= 2, got {n}")));
    }
    require_presentation(cover, "cover of the unit")?;
    let (k, _) = cover.kernel()?;
    let k_dual = k.dual()?;
    let p = &cover.module;
    if n == 2 && cover.verify().certified() {
        let (a, b) = rayon::join(|| hom_term(&k, "K", &k_dual, "K^v", via), || hom_term(p, "P", &k_dual, "K^v", via));
        let terms = [(a?, false), (b?, true)]
            .into_iter()
            .map(|((space, dim), negative)| Term { space, dim, negative })
            .collect();
        return DimFormula::assemble(n, via, terms);
    }
    let m = k_dual.tensor_power(n - 1);
    three_terms(n, via, &k, p, &m, &tensor_name("K^v", n - 1))
}

/// `dim H^n(V, W)` from a presentation `0 -> K -> P -> 1 -> 0` of the unit
/// and one `0 -> L -> Q -> V -> 0` of `V`, using `M = W (x) L^v (x) (K^v)^(n-2)`.
pub fn dim_formula_with_coefficients(
    unit_cover: &Cover,
    source_cover: &Cover,
    target: &YdModule,
    n: usize,
    via: Via,
) -> Result<DimFormula> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("dimension formula needs degree >= 2, got {n}")));
    }
    require_presentation(unit_cover, "cover of the unit")?;
    require_presentation(source_cover, "cover of the source")?;
    let (k, _) = unit_cover.kernel()?;
    let (l, _) = source_cover.kernel()?;
    let mut m = target.tensor(&l.dual()?)?;
    if n > 2 {
        m = m.tensor(&k.dual()?.tensor_power(n - 2))?;
    }
    let name = if n > 2 { format!("W (x) L^v (x) {}", tensor_name("K^v", n - 2)) } else { "W (x) L^v".into() };
    three_terms(n, via, &k, &unit_cover.module, &m, &name)
}
