use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n_vertices} vertices")]
    InvalidVertex { vertex: usize, n_vertices: usize },
    #[error("invalid edge ({0}, {1}): self-loops are not allowed")]
    InvalidEdge(usize, usize),
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("k = {k} outside [1, {n}]")]
    InvalidK { k: usize, n: usize },
    #[error("vertices {0} and {1} are not adjacent in the source graph")]
    NotAClique(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance too large: {what} = {value} exceeds guard {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
