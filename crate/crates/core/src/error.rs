use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid letter {0:?} in word, expected '1' or '2'")]
    InvalidLetter(char),

    #[error("moment order must be 1 or 2, got {0}")]
    MomentOrder(u32),

    #[error("level must be at least 1")]
    ZeroLevel,

    #[error("point with abscissa {x} is not on S_{j}")]
    OffConstraint { j: u64, x: Rational },

    #[error("{t} is outside the image of S_{j} under U_{j}")]
    OutsideImage { j: u64, t: Rational },

    #[error("constraint index must be positive")]
    ZeroIndex,

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("point on S_{found} in a point set for n = {n}")]
    WrongConstraint { n: u64, found: u64 },

    #[error("point set holds {count} distinct points, more than n = {n}")]
    TooManyPoints { n: u64, count: usize },

    #[error("invalid split set for n = {n}: {reason}")]
    InvalidSplitSet { n: u64, reason: String },

    #[error("refinement passed depth {max_depth} without separating boundary {boundary}")]
    DepthExceeded { max_depth: u32, boundary: Rational },

    #[error("Voronoi cell {index} has zero probability")]
    EmptyCell { index: usize },

    #[error("cannot split 2^{level} intervals into {n} groups")]
    TooManyGroups { n: u64, level: u32 },

    #[error("cut indices {boundaries:?} are not increasing inside 1..2^{level}")]
    InvalidPartition { level: u32, boundaries: Vec<usize> },

    #[error("level {level} exceeds the enumeration limit {limit}")]
    LevelTooLarge { level: u32, limit: u32 },
}
