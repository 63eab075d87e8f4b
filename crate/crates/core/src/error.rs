use thiserror::Error;

use crate::tree::{ArcId, PathId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("arcs do not form a tree (cycle or disconnected vertices)")]
    NotATree,
    #[error("arc ({tail}, {head}) duplicates an earlier arc between the same vertices")]
    DuplicateArc { tail: VertexId, head: VertexId },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex id {0} out of range")]
    BadVertexId(VertexId),
    #[error("arc between {from} and {to} is oriented against the direction of travel")]
    NotADipath { from: VertexId, to: VertexId },
    #[error("vertices {from} and {to} are not adjacent")]
    NotAdjacent { from: VertexId, to: VertexId },
    #[error("dipaths need at least one arc")]
    EmptyPath,
    #[error("dipath {path} does not belong to this tree")]
    PathTreeMismatch { path: PathId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("dipath {path} does not pass through vertex {center}")]
    PathNotThroughCenter { path: PathId, center: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("palette of {palette} colors is smaller than the maximum degree {max_degree}")]
    PaletteTooSmall { palette: usize, max_degree: usize },
    #[error("precolored edges do not share a common vertex")]
    PrecoloringNotStarShaped,
    #[error("precoloring reuses color {color} or exceeds the palette")]
    PrecoloringConflict { color: usize },
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(usize),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    EdgeNotIncident { edge: usize, vertex: usize },
    #[error("vertex {0} is not covered by every maximum matching")]
    AnchorNotInEveryMaxMatching(usize),
    #[error("preference list of vertex {0} is not a permutation of its incident edges")]
    BadPreferences(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PriorityError {
    #[error("order for arc {arc} does not list exactly the dipaths using it")]
    IncompleteOrder { arc: ArcId },
    #[error("global ranking is not a permutation of the dipath ids")]
    IncompleteRanking,
    #[error("dipaths {first} and {second} are ordered differently on arcs {arc_a} and {arc_b}")]
    InconsistentOrder { first: PathId, second: PathId, arc_a: ArcId, arc_b: ArcId },
}

/// Failure of one of the tree solvers. Everything except the input errors
/// indicates a bug in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Priority(#[from] PriorityError),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl From<BipartiteError> for SolveError {
    fn from(e: BipartiteError) -> Self {
        SolveError::InternalInvariantViolation(e.to_string())
    }
}

impl From<StarError> for SolveError {
    fn from(e: StarError) -> Self {
        SolveError::InternalInvariantViolation(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for exhaustive search: {what} = {size} exceeds {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
}
