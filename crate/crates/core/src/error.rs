use thiserror::Error;

use crate::algebra::Triple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a remainder; a claimed divisibility does not hold.
    #[error("division leaves a nonzero remainder of degree {remainder_degree}")]
    NonzeroRemainder { remainder_degree: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{triple} is not a valid input here: {reason}")]
    NotAnEmbedding { triple: Triple, reason: &'static str },

    #[error("{0} has no component equal to 1")]
    NoUnitComponent(Triple),

    #[error("({0}, {1}) are not coprime")]
    NotCoprime(u64, u64),

    #[error("angle {k}pi/{n} lies on the boundary of [0, pi]")]
    BoundaryAngle { k: u64, n: u64 },

    #[error("height function takes equal values at both preimages of node {node}")]
    ZFailsToSeparate { node: usize },

    #[error("invalid crossing sequence: {0}")]
    InvalidSequence(String),

    #[error("unrealizable Gauss code: {0}")]
    UnrealizableCode(String),

    #[error("diagram has {crossings} crossings, above the bracket cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },

    #[error("witness identity has degree {degree}, above the expansion cap of {cap}")]
    WitnessTooLarge { degree: u64, cap: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A state the algorithms should never reach; signals a violated precondition upstream.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooManyCrossings { .. } | Error::WitnessTooLarge { .. } => 3,
            _ => 2,
        }
    }
}
