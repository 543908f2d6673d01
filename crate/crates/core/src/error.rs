use thiserror::Error;

/// Errors raised while building or transforming graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {n} is outside 1..={max}")]
    VertexCount { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}; only simple graphs are supported")]
    Loop(usize),
    #[error("edge {0}-{1} lies inside one side of the bipartition")]
    NotBipartite(usize, usize),
    #[error("bipartition side sizes ({p}, {q}) do not match the graph")]
    SideMismatch { p: usize, q: usize },
}

/// Errors raised by the graph6 codec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 bit field truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 bit field has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("non-printable byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {constraint}")]
    InvalidParameters { family: &'static str, constraint: String },
    #[error("{0} has no canonical representative; it names a class of graphs")]
    NotConstructible(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the eigenvalue routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("dense eigensolver supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("bound requires at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
}

/// Errors raised by the exact Hamiltonicity oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle supports at most {max} vertices, got {n}")]
pub struct OracleError {
    pub n: usize,
    pub max: usize,
}

/// Errors raised by the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem selector `{0}`")]
    UnknownTheorem(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
