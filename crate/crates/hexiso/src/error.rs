use crate::hexgrid::Vertex;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid edge: {0} and {1} are not adjacent")]
    InvalidEdge(Vertex, Vertex),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("operation not defined for the empty set")]
    EmptySet,
    #[error("vertex set is not contained in the region")]
    Containment,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("normalization diagnostic: {0}")]
    NonTermination(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
