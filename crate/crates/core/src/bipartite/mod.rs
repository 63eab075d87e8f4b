//! Bipartite primitives behind the three tree algorithms: edge coloring
//! with precoloring extension, maximum matchings and anchored König covers,
//! and stable matchings.

mod edge_color;
mod graph;
mod matching;
mod stable;

pub use edge_color::{edge_color_extend, is_proper_edge_coloring};
pub use graph::{BiEdge, BipartiteMultigraph, EdgeId, NodeId, Side};
pub use matching::{
    edge_in_some_max_matching, max_matching, min_cover_with_anchor, min_vertex_cover,
    vertices_in_every_max_matching, Matching, VertexCover,
};
pub use stable::{
    blocking_edge, edge_survives_test, is_stable, stable_matching, stable_matching_from, EdgePreferences,
};

pub(crate) use edge_color::edge_color_extend_counted;
pub(crate) use matching::{
    max_matching_counted, max_matching_masked, min_cover_with_anchor_counted, min_vertex_cover_counted,
    missable_vertices, Mask,
};
pub(crate) use stable::{deferred_acceptance, dominator, survives_masked};
