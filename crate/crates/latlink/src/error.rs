use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("disjointness violation: label `{0}` occurs in both operands")]
    DisjointnessViolation(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}` in ground set")]
    DuplicateLabel(String),
    #[error("ground sets do not match: {0}")]
    GroundMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("problem too large for exhaustive check: {0}")]
    TooLargeForExhaustiveCheck(String),
    #[error("vector is not in the restriction of the space")]
    NotInRestriction,
    #[error("no lattice member has the requested restriction")]
    NoPreimage,
    #[error("vector is not in the projection lattice")]
    NotInProjectionLattice,
    #[error("vector is not in the linked lattice")]
    NotInLinkedLattice,
    #[error("bases generate different lattices")]
    LatticeMismatch,
    #[error("port condition violated: {0}")]
    PortConditionViolated(String),
    #[error("expression is not regular: {0}")]
    NotRegular(String),
    #[error("unbound name `{0}` in expression")]
    UnboundName(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("not an involution: {0}")]
    NotInvolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
