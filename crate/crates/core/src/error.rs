use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible contexts")]
    IncompatibleContexts,
    #[error("leading term of zero")]
    LeadingTermOfZero,
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("parse error at column {column}: {message}")]
    PolynomialParse { column: usize, message: String },
    #[error("GB budget exhausted after {pairs} pair reductions")]
    BudgetExhausted { pairs: u64 },
    #[error("zero polynomial is not allowed here: {0}")]
    ZeroPolynomial(&'static str),
    #[error("empty ideal: at least one nonzero generator is required")]
    EmptyIdeal,
    #[error("unit ideal: {0}")]
    UnitIdeal(&'static str),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph file line {line}: {message}")]
    GraphParse { line: usize, message: String },
    #[error("edgeless graph")]
    EdgelessGraph,
    #[error("disconnected graph")]
    DisconnectedGraph,
    #[error("rooted labeling applies to trees")]
    NotATree,
    #[error("invalid structured prime: {0}")]
    InvalidPrime(String),
    #[error("no candidate list known for this graph")]
    NoCandidateList,
    #[error("unknown theorem tag `{0}`")]
    UnknownTheorem(String),
    #[error("range too large for {tag}: n <= {max} supported, requested {requested}")]
    RangeTooLarge {
        tag: String,
        max: usize,
        requested: usize,
    },
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
