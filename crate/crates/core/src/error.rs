use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension vector: {0}")]
    InvalidDimVector(String),
    #[error("invalid ordered set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{upper} and {lower} are not adjacent")]
    NotAdjacent { upper: String, lower: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("d^2 != 0 in degree {degree}: entry ({row}, {col}) = {value}")]
    DifferentialSquare {
        degree: usize,
        row: String,
        col: String,
        value: i64,
    },
    #[error("inconsistent torsion verdict for D = {dims}: {detail}")]
    InconsistentVerdict { dims: String, detail: String },
    #[error("codimension mismatch: expected {expected}, found {found}")]
    CodimensionMismatch { expected: usize, found: usize },
    #[error("label is not a doubled class: {0}")]
    NotDoubled(String),
    #[error("N = {n} exceeds the size limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("unknown table: {0}")]
    UnknownTable(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
