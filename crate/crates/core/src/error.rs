use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("label map is not injective: label {0} used twice")]
    NonInjectiveMap(usize),
    #[error("label map has {got} entries but the graph has {expected} vertices")]
    LabelMapLength { expected: usize, got: usize },
    #[error("Henneberg 0-extension in dimension {d} needs {d} attachment vertices, got {got}")]
    AttachCount { d: usize, got: usize },
    #[error("attachment vertex {0} repeated")]
    RepeatedAttach(usize),
    #[error("even hyperbanana requires even dimension, got {0}")]
    OddDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("embedding has {got} points but the graph has {expected} vertices")]
    PointCountMismatch { expected: usize, got: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix field mismatch: {0}")]
    FieldMismatch(String),
    #[error("embedding places two vertices at the same point")]
    CoincidentPoints,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("entry {value} is not reduced modulo {p}")]
    UnreducedEntry { value: i64, p: u64 },
    #[error(
        "graph has {n} vertices but dimension is {d}; a framework on fewer than d vertices \
         lies in a proper affine subspace and its nullity does not count trivial motions"
    )]
    BelowDimension { n: usize, d: usize },
    #[error("coordinate range {range} in dimension {d} cannot hold {n} distinct points")]
    RangeTooSmall { n: usize, d: usize, range: i64 },
    #[error(
        "subset enumeration over {n} vertices exceeds the cap of {cap}; raise the cap explicitly"
    )]
    EnumerationCap { n: usize, cap: usize },
    #[error("candidate ({0}, {1}) is already an edge")]
    CandidateIsEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(
        "nullity {nullity} is below the trivial-motion dimension {trivial}; the embedding is degenerate"
    )]
    TrivialMotionBound { nullity: usize, trivial: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
