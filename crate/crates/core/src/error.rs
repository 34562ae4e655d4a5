use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binary sequence must be nonempty")]
    EmptyBeta,
    #[error("degree sequence {0:?} is not the degree sequence of a threshold graph")]
    NotThreshold(Vec<usize>),
    #[error("graph needs at least one edge: n must be at least 1")]
    TooSmall,
    #[error("netflow has {got} entries, graph needs {expected}")]
    NetflowLength { expected: usize, got: usize },
    #[error("netflow entries must be positive, got {0:?}")]
    NonPositiveNetflow(Vec<i64>),
    #[error("flow has {support} nonzero entries, fewer than n = {n}")]
    SupportTooSmall { support: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("elements {0} and {1} are not comparable in the poset")]
    Incomparable(usize, usize),
    #[error("operation requires the complete graph")]
    NotComplete,
    #[error("edge ({0}, {1}) is not an edge i -> j with i > j on this vertex set")]
    BadEdge(usize, usize),
    #[error("parent array does not describe a spanning tree rooted at 0")]
    NotATree,
    #[error("{0} is not a parking function of this graph")]
    NotParking(String),
}

pub type Result<T> = std::result::Result<T, Error>;
