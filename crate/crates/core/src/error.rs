use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Dynkin type {letter}{rank}")]
    InvalidType { letter: String, rank: usize },
    #[error("invalid isogeny: {0}")]
    InvalidIsogeny(String),
    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("{0} is not dominant")]
    NotDominant(String),
    #[error("{0} is not in the chosen lattice")]
    NotInLattice(String),
    #[error("{0} is not minuscule")]
    NotMinuscule(String),
    #[error("node index {index} out of range (affine rank {nodes})")]
    NodeOutOfRange { index: usize, nodes: usize },
    #[error("length {length} exceeds the enumeration bound {bound}")]
    BoundExceeded { length: usize, bound: usize },
    #[error("facet {0:?} generates an infinite subgroup")]
    InfiniteParabolic(Vec<usize>),
    #[error("element is not of length zero")]
    NotLengthZero,
    #[error("character levels differ: {0} vs {1}")]
    LevelMismatch(i64, i64),
    #[error("line bundle is not ample on {0}")]
    NotAmple(String),
    #[error("invalid q-sequence: {0}")]
    InvalidQ(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("malformed input: {0}")]
    Parse(String),
}
