use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {vertex} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("edge index {edge} out of range (graph has {edge_count} edges)")]
    InvalidEdge { edge: usize, edge_count: usize },

    #[error("too many edges: {0} (at most {max})", max = crate::graph::MAX_EDGES)]
    TooManyEdges(usize),

    #[error("cannot contract negative edge {0}; switch at an endpoint first")]
    NegativeContraction(usize),

    #[error("group shape mismatch: expected {expected} components, got {actual}")]
    ShapeMismatch { expected: usize, actual: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("polynomial is not divisible by ({var}-1)^{exp}")]
    NotDivisible { var: char, exp: u32 },

    #[error("ground set sizes differ: {0} vs {1}")]
    GroundSizeMismatch(usize, usize),

    #[error("ground set too large: {0} (at most {max})", max = crate::matroid::MAX_GROUND)]
    GroundTooLarge(usize),

    #[error("matroid axiom violated: {0}")]
    Axiom(#[from] crate::matroid::AxiomViolation),

    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("gamma must be nonzero")]
    ZeroGamma,

    #[error("u must be nonzero")]
    ZeroU,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid connected basis: {0}")]
    InvalidBasis(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
