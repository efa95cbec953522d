use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("poset must have between 1 and {max} elements, got {n}")]
    InvalidSize { n: usize, max: usize },

    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate cover ({0}, {1})")]
    DuplicateCover(usize, usize),

    #[error("cover relation contains a cycle")]
    CycleDetected,

    #[error("cover ({lower}, {upper}) is not a cover: {lower} < {middle} < {upper}")]
    NotTransitivelyReduced {
        lower: usize,
        middle: usize,
        upper: usize,
    },

    #[error("poset has no unique minimal element")]
    NoUniqueMinimum,

    #[error("operation would leave an empty poset")]
    EmptyResult,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("poset is not a rooted tree")]
    NotRootedTree,

    #[error("poset is not ranked")]
    NotRanked,

    #[error("expected {expected} labels, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("labeling is not m-packed: {0}")]
    NotPacked(String),

    #[error("labeling is not a natural labeling")]
    NotNatural,

    #[error("toggle index {i} out of range 1..={max}")]
    ToggleOutOfRange { i: usize, max: usize },

    #[error("element set is not an order ideal")]
    NotAnIdeal,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("operator is not a bijection on the state set: {0}")]
    NotABijection(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
