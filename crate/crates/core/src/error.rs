use thiserror::Error;

/// What went wrong on a single line of an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("labeling domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("not a tree")]
    NotATree,
    #[error("not a connected unicyclic graph")]
    NotUnicyclic,
    #[error("unsupported graph: neither a tree nor a connected unicyclic graph")]
    Unsupported,
    #[error("order at least {required} required, got {actual}")]
    OrderTooSmall { required: usize, actual: usize },
    #[error("labeling is not distinguishing")]
    NotDistinguishing,
    #[error("size bound exceeded: n = {n} > {bound}")]
    SizeBound { n: usize, bound: usize },
    #[error("no distinguishing labeling exists: {0}")]
    NoDistinguishingLabeling(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
