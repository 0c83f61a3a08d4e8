use thiserror::Error;

/// Errors produced by tree construction, stem analysis, the extremal
/// formulas and the enumeration oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a tree of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("operation undefined for a tree of order 1")]
    DegenerateOrder,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid stem: {0}")]
    InvalidStem(String),
    #[error("stem is not a diametral path")]
    StemNotDiametral,
    #[error("vertex {0} lies on the stem")]
    LeafOnStem(usize),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("no vertex of degree at least 3 between leaf {0} and the stem")]
    NoBigVertex(usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("spider has no legs")]
    EmptySpider,
    #[error("Prüfer entry {entry} out of range for order {n}")]
    EntryOutOfRange { entry: usize, n: usize },
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
