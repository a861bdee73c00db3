use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not Eulerian: vertex {vertex} has odd degree {degree}")]
    NotEulerian { vertex: usize, degree: usize },

    #[error("orientation/local order not compatible: {0}")]
    NotCompatible(String),

    #[error("edge subset is not 2-regular at vertex {vertex} ({darts} darts)")]
    NotTwoRegular { vertex: usize, darts: usize },

    #[error("index {index} out of range 1..={dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },

    #[error("enumeration of {count} {what} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        count: BigUint,
        bound: u64,
    },

    #[error("tensor order/dimension mismatch: {0}")]
    OrderMismatch(String),

    #[error("fragment label mismatch: {left} vs {right} labels")]
    LabelMismatch { left: usize, right: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("fragment is not Eulerian: {0}")]
    NotEulerianFragment(String),

    #[error(
        "graph has {0} circle components; the ordinary partition function is undefined on circles"
    )]
    CirclesUnsupported(usize),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid directed matching: {0}")]
    InvalidMatching(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
