use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("line {line}: expected at most two vertex names")]
    TooManyTokens { line: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooLarge(usize),
    #[error("vertex set is not contained in the vertex set of the graph")]
    NotSubset,
    #[error("{0}{1} is not an edge")]
    NotAnEdge(String, String),
    #[error("deletion set must lie in (N(x_i) ∪ N(x_j)) minus {{x_i, x_j}}")]
    Inadmissible,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals live over different variable lists")]
    AmbientMismatch,
    #[error("monomial has {got} exponents but the ambient ring has {expected} variables")]
    Arity { expected: usize, got: usize },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("power must be positive")]
    ZeroPower,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DepthError {
    #[error("the unit ideal has no proper quotient")]
    UnitIdeal,
    #[error("depth of the zero ideal as a module is undefined")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("polarized ring has {got} variables, above the cap of {cap}")]
    TooManyVariables { got: usize, cap: usize },
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("corpus line {line}")]
    Corpus { line: usize, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Depth(#[from] DepthError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
