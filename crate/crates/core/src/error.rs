use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero vector has no primitive form")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no generators given")]
    EmptyGenerators,

    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),

    #[error("generators span a subspace of rank {rank} in dimension {dim}; the cone is not full-dimensional")]
    FullDimRequired { rank: usize, dim: usize },

    /// `index` is `None` when the generators do not even have full rank.
    #[error("generators do not generate Z^{dim} ({})", describe_index(.rank, .index))]
    GroupNotFull {
        dim: usize,
        rank: usize,
        index: Option<BigInt>,
    },

    #[error("operation requires a pointed semigroup")]
    PointedRequired,

    #[error("bad lambda: {0}")]
    BadLambda(String),

    #[error("argument out of range: {0}")]
    BadRange(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("value {0} is too large for a membership table")]
    LimitTooLarge(BigInt),
}

fn describe_index(rank: &usize, index: &Option<BigInt>) -> String {
    match index {
        Some(i) => format!("sublattice of index {i}"),
        None => format!("rank {rank}"),
    }
}
