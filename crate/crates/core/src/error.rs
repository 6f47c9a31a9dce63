use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed conductors: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("linear system has no solution")]
    Inconsistent,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{axiom} fails at {witness}")]
    Validation { axiom: String, witness: String },

    #[error("exact sequences do not compose: {0}")]
    ChainMismatch(String),

    #[error("not an allowable sequence: {0}")]
    NotAllowable(String),

    #[error("no nonzero two-sided cointegral (algebra is not unimodular)")]
    NotUnimodular,

    #[error("space of two-sided cointegrals has dimension {0}")]
    AmbiguousIntegral(usize),

    #[error("not grouplike: {0}")]
    NotGrouplike(String),

    #[error("Q(zeta_{conductor}) has no primitive {order}-th root of unity")]
    MissingRootOfUnity { conductor: u32, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("modules live over different algebras: {0}")]
    AlgebraMismatch(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("map is not D(H)-linear: {0}")]
    NotEquivariant(String),

    #[error("not a subspace: {0}")]
    NotASubspace(String),

    #[error("submodule is not a direct summand")]
    NotASummand,

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("lift failed: {0}")]
    LiftFailed(String),

    #[error("cover not verified: {0}")]
    UnverifiedCover(String),

    #[error("center does not split over the ground field: {0}")]
    NonSplitCenter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
