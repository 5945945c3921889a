use thiserror::Error;

use crate::shapes::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell {0} is outside the shape")]
    CellOutsideShape(Cell),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("limit q -> 1 diverges (net factor degree {0})")]
    DivergentLimit(i64),

    #[error("expected an integer, got {0}")]
    NonInteger(String),

    #[error("product does not reduce to a polynomial: {0}")]
    NotPolynomial(String),

    #[error("series known only through q^{horizon}, requested q^{requested}")]
    BeyondHorizon { requested: i64, horizon: i64 },

    #[error("q-integral terms do not decrease geometrically: {0}")]
    DivergenceSuspected(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("no filling has the requested diagonal")]
    InfeasibleDiagonal,

    #[error("parse error: {0}")]
    Parse(String),
}
