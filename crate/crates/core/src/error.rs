use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative lower index {0} in binomial coefficient")]
    NegativeIndex(i64),

    #[error("index set elements must be positive, got {0}")]
    NonPositiveElement(i64),

    #[error("index set contains {0} more than once")]
    DuplicateElement(u32),

    #[error("element {element} is out of range (maximum {max})")]
    OutOfRange { element: u32, max: u32 },

    #[error("side length at position {position} is not positive")]
    InvalidLength { position: usize },

    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(usize),

    #[error("length vector is not generic")]
    NotGeneric,

    #[error("the moduli space is empty: the longest side is longer than the rest combined")]
    EmptySpace,

    #[error("genetic code is not monogenic ({genes} genes)")]
    NotMonogenic { genes: usize },

    #[error("{what} is {size}, above the limit {limit}")]
    SizeLimit { what: &'static str, size: u128, limit: u128 },

    #[error("no length vector with total length <= {bound} realizes the gee")]
    NotFound { bound: u64 },

    #[error("theta entry {index} is {value}, but its block only has {block} elements")]
    InfeasibleTheta { index: usize, value: u32, block: u32 },

    #[error("expected a vector of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("gee increments must be positive")]
    ZeroIncrement,

    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),

    #[error("{0} does not index a relation (must be a nonempty subgee)")]
    InvalidRelationIndex(String),

    #[error("an empty gee has no relations")]
    NoRelations,

    #[error("arithmetic overflow while scaling lengths to integers")]
    Overflow,
}
