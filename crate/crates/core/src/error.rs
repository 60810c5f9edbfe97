use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("part count k must be positive")]
    NoParts,

    #[error("document declares k={declared} but lists {found} parts")]
    PartCount { declared: usize, found: usize },

    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),

    #[error("edge {edge} has {found} entries, expected {expected}")]
    EdgeArity {
        edge: usize,
        found: usize,
        expected: usize,
    },

    #[error("edge {edge}: unknown vertex {name:?}")]
    UnknownVertex { edge: usize, name: String },

    #[error("edge {edge}: two vertices from part {part}")]
    RepeatedPart { edge: usize, part: usize },

    #[error("edge {edge}: vertex {name:?} at position {position} is not in part {position}")]
    WrongPart {
        edge: usize,
        name: String,
        position: usize,
    },

    #[error("vertex {0:?} is contained in no hyperedge")]
    IsolatedVertex(String),

    #[error("edges {first} and {second} are identical")]
    DuplicateEdge { first: usize, second: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("hypergraph has {parts} parts but C({d},{ell}) = {expected}")]
    PartCountMismatch {
        parts: usize,
        d: usize,
        ell: usize,
        expected: usize,
    },

    #[error("fixed labeling mode requires a labeling for ell = {0}")]
    MissingLabeling(usize),

    #[error("invalid point set: {0}")]
    InvalidPoints(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("instance size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("projection failed after {0} attempts")]
    RetriesExhausted(usize),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Malformed(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
