use thiserror::Error;

/// Errors produced while parsing graphs or evaluating spectral quantities.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: vertex index {index} out of range for {vertex_count} vertices")]
    IndexOutOfRange {
        line: usize,
        index: i64,
        vertex_count: usize,
    },

    #[error("input contains no edges or header")]
    EmptyInput,

    #[error("unsupported Matrix Market header: {0}")]
    UnsupportedHeader(String),

    #[error("matrix is not square ({rows} x {cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("missing OFF magic line")]
    MissingMagic,

    #[error("line {line}: face has {arity} vertices, at least 3 required")]
    FaceArityTooSmall { line: usize, arity: usize },

    #[error("truncated file: expected {expected}, found {found}")]
    TruncatedFile { expected: String, found: String },

    #[error("graph has no edges; its Laplacian density matrix is undefined")]
    EmptyGraph,

    #[error("matrix entries ({i}, {j}) and ({j}, {i}) differ")]
    NotSymmetric { i: usize, j: usize },

    #[error("density matrix trace is {0}, expected 1")]
    TraceNotOne(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0})")]
    NotPositiveSemidefinite(f64),

    #[error("eigenvalue iteration did not converge within {0} sweeps")]
    ConvergenceFailure(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("entropic index must be positive and finite, got {0}")]
    InvalidAlpha(f64),

    #[error("alpha-logarithm requires a positive argument, got {0}")]
    NonPositiveArgument(f64),

    #[error("Jensen gap {0} is negative beyond rounding tolerance")]
    NegativeDivergence(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
