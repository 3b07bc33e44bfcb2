use thiserror::Error;

/// Every failure the engine can report. The variant name is the stable
/// identifier surfaced by the CLI and the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid Dynkin type `{0}`")]
    InvalidType(String),
    #[error("vector {0:?} is not a root of {1}")]
    NotARoot(Vec<i64>, String),
    #[error("weight {0:?} is not in the root lattice")]
    NonIntegral(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("expected a vector of length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("character peeling produced a negative multiplicity at {0:?}")]
    NotACharacter(Vec<i64>),
    #[error("half-convolution produced an odd numerator at {0:?}")]
    InternalParity(Vec<i64>),
    #[error("level {level} of deletion ({ambient}, {node}) has {roots} roots but the identified module has dimension {dim}")]
    IrreducibilityMismatch {
        ambient: String,
        node: usize,
        level: i64,
        roots: usize,
        dim: String,
    },
    #[error("level {0} is empty")]
    EmptyLevel(i64),
    #[error("level {0} has {1} primitive vectors")]
    NonUniquePrimitive(i64, usize),
    #[error("weight/root correspondence failed at level {0}: {1}")]
    BijectionFailure(i64, String),
    #[error("not a diagram embedding: {0}")]
    BadEmbedding(String),
    #[error("the first graded level must not be the trivial module")]
    TrivialFirstLevel,
    #[error("node {node} is out of range for rank {rank}")]
    BadNode { node: usize, rank: usize },
    #[error("multiplicity at {0:?} exceeds 64-bit range")]
    Overflow(Vec<i64>),
    #[error("{0}")]
    Parse(String),
}

impl LieError {
    /// Short machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            LieError::InvalidType(_) => "InvalidType",
            LieError::NotARoot(..) => "NotARoot",
            LieError::NonIntegral(_) => "NonIntegral",
            LieError::NotDominant(_) => "NotDominant",
            LieError::RankMismatch { .. } => "RankMismatch",
            LieError::NotACharacter(_) => "NotACharacter",
            LieError::InternalParity(_) => "InternalParity",
            LieError::IrreducibilityMismatch { .. } => "IrreducibilityMismatch",
            LieError::EmptyLevel(_) => "EmptyLevel",
            LieError::NonUniquePrimitive(..) => "NonUniquePrimitive",
            LieError::BijectionFailure(..) => "BijectionFailure",
            LieError::BadEmbedding(_) => "BadEmbedding",
            LieError::TrivialFirstLevel => "TrivialFirstLevel",
            LieError::BadNode { .. } => "BadNode",
            LieError::Overflow(_) => "Overflow",
            LieError::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, LieError>;
