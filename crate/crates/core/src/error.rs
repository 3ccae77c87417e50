use thiserror::Error;

use crate::rootdata::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("weight has {actual} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("Weyl orbit exceeds the element cap of {cap}")]
    OrbitCapacity { cap: usize },

    #[error("exhaustive subset enumeration needs n <= {max}, got n = {n}; use the closed-form counts instead")]
    SubsetCapacity { n: usize, max: usize },

    #[error("pair {label} is not defined over {group}")]
    PairMismatch { label: String, group: String },

    #[error("invalid pair parameters: {0}")]
    InvalidParameters(String),

    #[error("not an involution on 1..={0}")]
    NotInvolution(usize),

    #[error("subset {0} is not invariant under sigma")]
    NotInvariant(String),

    #[error("fixed points {fixed} and transpositions {transpositions} do not fill n = {n}")]
    CycleTypeMismatch {
        fixed: usize,
        transpositions: usize,
        n: usize,
    },

    #[error("rank bound {requested} exceeds the supported maximum {max}")]
    RankBound { requested: usize, max: usize },

    #[error("unknown {what}: {value}")]
    Parse { what: &'static str, value: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Capacity and resource errors are reported separately from bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::OrbitCapacity { .. } | Error::SubsetCapacity { .. } | Error::Overflow(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "invalid-rank",
            Error::NodeOutOfRange { .. } => "node-out-of-range",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::Overflow(_) => "overflow",
            Error::OrbitCapacity { .. } => "orbit-capacity",
            Error::SubsetCapacity { .. } => "subset-capacity",
            Error::PairMismatch { .. } => "pair-mismatch",
            Error::InvalidParameters(_) => "invalid-parameters",
            Error::NotInvolution(_) => "not-involution",
            Error::NotInvariant(_) => "not-invariant",
            Error::CycleTypeMismatch { .. } => "cycle-type-mismatch",
            Error::RankBound { .. } => "rank-bound",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
