use thiserror::Error;

/// Coarse classification used for process exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Unreadable or malformed input (exit code 2).
    Input,
    /// Structurally valid input that violates an operation precondition (exit code 3).
    Precondition,
    /// A configurable safety cap was exceeded (exit code 4).
    CapExceeded,
    /// A cross-check between two computation paths failed (exit code 5).
    Verification,
}

impl ErrorCategory {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::Input => 2,
            ErrorCategory::Precondition => 3,
            ErrorCategory::CapExceeded => 4,
            ErrorCategory::Verification => 5,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("invalid weight assignment: {0}")]
    InvalidWeights(String),
    #[error("invalid coin configuration: {0}")]
    InvalidCoinConfig(String),
    #[error("invalid vertex {vertex} for {m} vertices")]
    InvalidVertex { vertex: usize, m: usize },
    #[error("invalid empty-vertex set: {0}")]
    InvalidEmptySet(String),
    #[error("polynomial degree {degree} exceeds edge count {edges}; the symmetrized sum is not a constant")]
    DegreeExceedsEdges { degree: usize, edges: usize },
    #[error("degree precondition violated: {0}")]
    DegreePrecondition(String),
    #[error("evaluation point must have pairwise distinct coordinates")]
    NonDistinctPoint,
    #[error("{0}")]
    PreconditionViolated(String),
    #[error("permutation cap exceeded: {m} variables (max {cap}); raise the cap to allow {m}! permutations")]
    PermutationCapExceeded { m: usize, cap: usize },
    #[error("state cap exceeded: more than {cap} reachable states")]
    StateCapExceeded { cap: usize },
    #[error("step cap exceeded: trial {trial} did not terminate within {cap} steps")]
    StepCapExceeded { trial: u64, cap: u64 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("singular linear system: absorption probabilities are not determined")]
    SingularSystem,
    #[error("cannot rob vertex {vertex}: it has {coins} coin(s), need at least 2")]
    RobUnderflow { vertex: usize, coins: u64 },
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
    #[error("unsupported format version {0}, expected 1")]
    FormatVersion(u32),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            InvalidRational(_) | InvalidPolynomial(_) | InvalidGraph(_) | InvalidWeights(_)
            | InvalidCoinConfig(_) | Json(_) | Io(_) | FormatVersion(_) => ErrorCategory::Input,
            VarCountMismatch(_, _)
            | NotATree(_)
            | EdgeNotInGraph(_, _)
            | InvalidVertex { .. }
            | InvalidEmptySet(_)
            | DegreeExceedsEdges { .. }
            | DegreePrecondition(_)
            | NonDistinctPoint
            | PreconditionViolated(_)
            | RobUnderflow { .. }
            | SingularSystem => ErrorCategory::Precondition,
            PermutationCapExceeded { .. } | StateCapExceeded { .. } | StepCapExceeded { .. } => {
                ErrorCategory::CapExceeded
            }
            VerificationFailed(_) => ErrorCategory::Verification,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
