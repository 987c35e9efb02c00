use thiserror::Error;

use crate::rootsys::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: Series, rank: usize },

    #[error("unknown series {0:?}")]
    UnknownSeries(String),

    #[error("matrix dimensions must be at least 1x1 and match the entry count")]
    BadDimensions,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular over the rationals")]
    Singular,

    #[error("vector length {got} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("group of order {needed} exceeds cap {cap}")]
    CapExceeded { cap: u64, needed: u64 },

    #[error("parameter {0} outside [0, 1]")]
    ParameterOutOfRange(String),

    #[error("point is not in the closed fundamental alcove")]
    NotInAlcove,

    #[error("group is not abelian")]
    NonAbelian,

    #[error("invariant factors must be > 1 and form a divisibility chain: {0:?}")]
    BadInvariantFactors(Vec<u64>),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
