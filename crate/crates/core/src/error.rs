use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid descent {descent} for a composition of size {size}")]
    InvalidDescent { descent: usize, size: usize },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("restriction window selects no cells of a composition of size {size}")]
    EmptyRestriction { size: usize },

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("harmonicity check is missing vertex {0}")]
    IncompleteInput(String),

    #[error("paintbox of a composition of size {0} is undefined (need size >= 2)")]
    UndefinedPaintbox(usize),

    #[error("invalid interval system: {0}")]
    InvalidIntervalSystem(String),

    #[error("degenerate paintbox sample: {0}")]
    DegenerateSample(String),

    #[error("cell {cell} is not a valley of {composition}")]
    InvalidValley { cell: usize, composition: String },

    #[error("cell {cell} is not a peak of {composition}")]
    InvalidPeak { cell: usize, composition: String },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("configuration does not match the experiment: {0}")]
    ConfigMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
