use thiserror::Error;

/// Errors raised by the integer algebra and the topology bookkeeping built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error("matrix rows are ragged: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("expected an even, positive dimension, got {0}")]
    OddDimension(usize),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix does not preserve the intersection form")]
    NotSymplectic,

    #[error("invalid slide {slider} over {over} on a {components}-component link")]
    InvalidSlide {
        slider: usize,
        over: usize,
        components: usize,
    },

    #[error("slide sign must be +1 or -1, got {0}")]
    InvalidSign(i64),

    #[error("the zero class has no descent representative")]
    ZeroClass,

    #[error("invalid constraint: lower {lower} > upper {upper}")]
    InvalidConstraint { lower: i64, upper: i64 },

    #[error("invalid bound {0}: must be at least 1")]
    InvalidBound(i64),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid surface or curve: {0}")]
    InvalidSurface(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn neg(a: i64, ctx: &'static str) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow(ctx))
}
