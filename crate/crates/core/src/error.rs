use thiserror::Error;

use crate::interval::AxiomReport;

/// Errors produced by the library.
///
/// Verdicts (Koszul or not, sequentially Cohen-Macaulay or not) are never
/// errors; these variants cover malformed input, violated preconditions and
/// internal cross-check failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("cover relations contain a cycle through `{0}`")]
    Cycle(String),

    #[error("`{lo}` is not below `{hi}`")]
    NotComparable { lo: String, hi: String },

    #[error("identifier `{0}` is already in use")]
    IdentifierCollision(String),

    #[error("interval [{0},{1}] listed more than once")]
    IntervalListedTwice(String, String),

    #[error("element `{0}` has no semigroup coordinate")]
    MissingCoordinates(String),

    #[error("coordinate vectors have inconsistent lengths")]
    CoordinateDimension,

    #[error("positivity functional is not strictly positive on generator {0:?}")]
    NotPointed(Vec<i64>),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("face {0:?} is not a face of the complex")]
    NotAFace(Vec<String>),

    #[error("subcomplex is not contained in the ambient complex")]
    NotASubcomplex,

    #[error("vertex `{0}` occurs in both complexes of a join")]
    VertexCollision(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("relation fails axiom {}", .0.axiom)]
    AxiomViolation(Box<AxiomReport>),

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
