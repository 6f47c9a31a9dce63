//! Resolving `--algebra` into a Hopf algebra plus whatever builtin extras
//! (covers, sequences, simples) the commands need.

use anyhow::{Context, Result};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use ydcoh::examples::{BarUi, BkExample, TaftExample};
use ydcoh::hopf::{builders, io, HopfAlgebra};
use ydcoh::yd::Double;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Bk(usize),
    Taft(usize),
    BarUi,
    Uq(usize),
    File(PathBuf),
}

impl FromStr for AlgebraSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let param = |p: &str| p.parse::<usize>().map_err(|_| format!("bad parameter {p:?} in {s:?}"));
        match s.split_once(':') {
            Some(("bk", p)) => Ok(Self::Bk(param(p)?)),
            Some(("taft", p)) => Ok(Self::Taft(param(p)?)),
            Some(("uq", p)) => Ok(Self::Uq(param(p)?)),
            _ if s.eq_ignore_ascii_case("barui") => Ok(Self::BarUi),
            _ if std::path::Path::new(s).is_file() => Ok(Self::File(s.into())),
            _ => Err(format!("unknown algebra {s:?}: expected bk:K, taft:N, barUi, uq:P or an existing file")),
        }
    }
}

impl std::fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Bk(k) => write!(f, "bk:{k}"),
            Self::Taft(n) => write!(f, "taft:{n}"),
            Self::BarUi => write!(f, "barUi"),
            Self::Uq(p) => write!(f, "uq:{p}"),
            Self::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// A loaded algebra with its double. Builtins keep their example wrapper.
pub enum Loaded {
    Bk(BkExample),
    Taft(TaftExample),
    BarUi(BarUi),
    Plain { double: Arc<Double>, uq: Option<usize> },
}

impl Loaded {
    pub fn load(spec: &AlgebraSpec) -> Result<Self> {
        Ok(match spec {
            AlgebraSpec::Bk(k) => Self::Bk(BkExample::new(*k)?),
            AlgebraSpec::Taft(n) => Self::Taft(TaftExample::new(*n)?),
            AlgebraSpec::BarUi => Self::BarUi(BarUi::new()?),
            AlgebraSpec::Uq(p) => Self::Plain { double: Double::new(builders::uq_sl2(*p)?), uq: Some(*p) },
            AlgebraSpec::File(path) => {
                let h = io::load(path).with_context(|| format!("loading {}", path.display()))?;
                Self::Plain { double: Double::new(h), uq: None }
            }
        })
    }

    pub fn double(&self) -> &Arc<Double> {
        match self {
            Self::Bk(b) => b.double(),
            Self::Taft(t) => t.double(),
            Self::BarUi(b) => b.double(),
            Self::Plain { double, .. } => double,
        }
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        self.double().algebra()
    }

    pub fn arc_algebra(&self) -> Arc<HopfAlgebra> {
        Arc::new(self.algebra().clone())
    }
}
