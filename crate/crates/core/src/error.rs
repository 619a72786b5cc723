use thiserror::Error;

/// Errors produced by graph construction, parsing and matroid queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}; only simple graphs are supported")]
    SelfLoop(usize),

    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("{u} and {v} are adjacent")]
    Adjacent { u: usize, v: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("row width {found} does not match basis width {expected}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{what} = {value} exceeds the supported bound {bound}")]
    TooLarge {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
