use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {label} is outside 1..={max}")]
    LabelOutOfRange { label: i64, max: usize },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("invalid isotropic index for n = {n}: {reason}")]
    InvalidIsotropic { n: usize, reason: String },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a partition: {0:?}")]
    NotPartition(Vec<i64>),

    #[error("not a strict partition: {0:?}")]
    NotStrict(Vec<usize>),

    #[error("strict partition {parts:?} does not lie in M_{n}")]
    NotInM { parts: Vec<usize>, n: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("not a type C root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("no nonzero homogeneous component up to order {0}")]
    TruncationOrder(u32),

    #[error("coordinate ({a}, {b}) is not in the chart index set")]
    NotACoordinate { a: usize, b: usize },

    #[error("box ({row}, {col}) lies outside the ambient shifted diagram")]
    OutsideAmbient { row: usize, col: usize },

    #[error("subset is not the image of a shifted tableau: {0}")]
    NotInImage(String),

    #[error("too many components for inclusion-exclusion: {components} > {limit}")]
    TooManyComponents { components: usize, limit: usize },

    #[error("positive-root certificate violated: {0}")]
    Certificate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
