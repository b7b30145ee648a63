use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a hypergraph needs at least one vertex")]
    EmptyVertexSet,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("hyperedge `{0}` is empty")]
    EmptyEdge(String),
    #[error("hyperedge `{edge}` mentions unknown vertex `{vertex}`")]
    UnknownVertexInEdge { edge: String, vertex: String },
    #[error("hyperedges `{first}` and `{second}` are the same vertex set")]
    DuplicateEdge { first: String, second: String },
    #[error("duplicate hyperedge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("a {k}-uniform cycle needs at least {k} vertices, got {n}")]
    CycleTooShort { n: usize, k: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown hyperedge `{0}`")]
    UnknownEdge(String),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vector is non-zero at `{0}`, outside the subset")]
    SupportOutsideSubset(String),
    #[error("vertex `{0}` lies in no hyperedge; the dual is undefined")]
    IsolatedVertex(String),
    #[error("instance has {size} elements, above the bound of {bound}")]
    InstanceTooLarge { size: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has non-integer entries")]
    NonIntegerEntries,
    #[error("element `{0}` appears in more than one set")]
    OverlappingSets(String),
    #[error("set `{0}` is empty")]
    EmptySet(String),
    #[error("subset must contain at least two vertices")]
    SubsetTooSmall,
    #[error("hyperedge `{0}` is a singleton, so 1/(|e|-1) is undefined")]
    SingletonEdgeWithBanerjeeWeight(String),
    #[error("bad weight: {0}")]
    BadWeight(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("partitions are over different ground sets")]
    GroundSetMismatch,
    #[error("partition is not finer than the matrix equivalence relation")]
    PartitionNotFiner,
    #[error("matrix relation is not transitive on `{0}`")]
    RelationNotTransitive(String),
    #[error("certificate kind `{0}` is not supported here")]
    UnsupportedKind(String),
    #[error("combinatorial and algebraic verdicts disagree: {0}")]
    InconsistentVerdict(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
