use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("vertex set must be a nonempty proper subset of the host")]
    EmptyOrFullSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not cubic: {0}")]
    NotCubic(String),
    #[error("graph has loops or parallel edges: {0}")]
    NotSimple(String),
    #[error("not a minimum cycle-separating cut: {0}")]
    NotMinimumCut(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("not a valid cyclic part: {0}")]
    NotAValidPart(String),
    #[error("not a permutation of the boundary vertices")]
    NotAPermutation,
    #[error("the part is a cycle of length five")]
    IsFiveCycle,
    #[error("distribution violated: {0}")]
    DistributionViolated(String),
    #[error("repair failed: {0}")]
    RepairFailed(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("input exceeds the oracle size budget: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
