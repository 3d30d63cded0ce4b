use thiserror::Error;

/// Errors produced by graph construction, simulation and certification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not 3-regular")]
    NotThreeRegular,
    #[error("graph contains a triangle; triangle-free required")]
    TriangleFound,
    #[error("cut length {cut} does not match vertex count {n}")]
    CutSizeMismatch { cut: usize, n: usize },
    #[error("vertex count {0} exceeds the exact-enumeration budget of {1}")]
    TooManyVertices(usize, usize),
    #[error("random regular graph needs even n >= 4, got {0}")]
    BadRegularOrder(usize),
    #[error("pairing model failed to produce a simple graph after {0} attempts")]
    PairingExhausted(usize),
    #[error("environment matches no catalog entry")]
    NoMatch,
    #[error("expected a tree, but the graph contains a cycle or is disconnected")]
    NotATree,
    #[error("observable support lies outside the marked region")]
    SupportOutsideMarked,
    #[error("level p={0} outside the supported range 1..=6")]
    UnsupportedLevel(usize),
    #[error("objective returned a non-finite value")]
    NonFiniteObjective,
    #[error("shots must be >= 1")]
    ZeroShots,
    #[error("no witness angles stored for method={0} p={1}")]
    MissingAngles(String, usize),
    #[error("post-processing failed to increase the cut size (logic error)")]
    NoProgress,
    #[error("invalid edge list: {0}")]
    BadEdgeList(String),
    #[error("invalid cut string: {0}")]
    BadCutString(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
