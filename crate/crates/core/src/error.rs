use thiserror::Error;

/// Errors raised by graph parsing, structural analysis and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge {left}-{right}: endpoint on the wrong side")]
    WrongSide { left: String, right: String },

    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid vertex identifier `{0}`")]
    InvalidName(String),

    /// The structural theory assumes a graph without isolated vertices.
    #[error("vertex `{0}` is isolated; structural classification requires a graph without isolated vertices")]
    IsolatedVertex(String),

    #[error("graph is not unmixed")]
    NotUnmixed,

    #[error("internal consistency violation: {0}")]
    Consistency(String),

    #[error("operation undefined on the empty complex")]
    EmptyComplex,

    #[error("vertex `{0}` occurs in both operands")]
    OverlappingVertices(String),

    #[error("vertex set is not a face of the complex")]
    NotAFace,

    #[error("expected {expected} multiplicities, got {found}")]
    MultiplicityLength { expected: usize, found: usize },

    #[error("multiplicity {0} is not positive")]
    NonPositiveMultiplicity(i64),

    #[error("base graph is not Cohen-Macaulay (its pure order has a cross)")]
    BaseNotCohenMacaulay,

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("negative or out-of-range argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
