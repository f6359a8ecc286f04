use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polygon must have at least 3 vertices, got n = {0}")]
    PolygonTooSmall(usize),

    #[error("vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invariant E4 violated: {end} is the counterclockwise neighbor of {start} (|delta| = 2)")]
    NeighborChord { start: usize, end: usize },

    #[error("edges belong to different polygons (n = {0} and n = {1})")]
    PolygonMismatch(usize, usize),

    #[error("position ({column},{level}) is outside the fundamental domain for n = {n}")]
    PositionOutOfRange { column: i64, level: i64, n: usize },

    #[error("cannot parse tagged edge {0:?}: expected \"a-b\", \"a|+\" or \"a|-\"")]
    EdgeSyntax(String),

    #[error("empty column range")]
    EmptyRange,

    #[error("mesh window did not close for source {source_edge} after growing to {columns} columns")]
    WindowNotClosed { source_edge: String, columns: i64 },

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("{first} and {second} cross (e = {crossing}); not a triangulation")]
    Crossing {
        first: String,
        second: String,
        crossing: u8,
    },

    #[error("edge set is not maximal: {0} can be added")]
    NotMaximal(String),

    #[error("edge {0} is not in the triangulation")]
    NotInTriangulation(String),

    #[error("flip of {edge} is not unique: candidates {candidates:?}")]
    FlipNotUnique { edge: String, candidates: Vec<String> },

    #[error("enumeration for n = {n} exceeds the configured bound {bound}")]
    EnumerationBound { n: usize, bound: usize },

    #[error("no approximation of {0} with multiplicities at most 2 exists")]
    NoApproximation(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
