use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {n} exceeds the cap of {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("index ({i}, {j}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("{0} is not invertible in characteristic {1}")]
    NotInvertible(String, u64),
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not in row canonical form")]
    NotRcf,
    #[error("no rational preimage of {residue} mod {p} with denominator dividing {bound}")]
    NoRationalPreimage { residue: u64, p: u64, bound: u64 },
    #[error("structure algebra: {0}")]
    Algebra(String),
    #[error("rank did not stabilize after {iterations} iterations (last rank {rank})")]
    RankUnstable { iterations: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
