//! The dipaths through one vertex, seen as a bipartite multigraph.
//!
//! Left vertices stand for arcs entering the center, right vertices for arcs
//! leaving it. A dipath through the center becomes the edge joining its
//! entering and leaving arc. A dipath that starts (ends) at the center gets
//! a private dummy left (right) endpoint, so dummies never touch two edges.

use crate::bipartite::{BipartiteMultigraph, EdgeId, NodeId};
use crate::error::StarError;
use crate::tree::{ArcId, Dipath, DirectedTree, PathId, PathIndex, VertexId, Visit};
use crate::Steps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Arc(ArcId),
    /// Dummy left vertex of a dipath starting at the center.
    Source(PathId),
    /// Dummy right vertex of a dipath ending at the center.
    Sink(PathId),
}

#[derive(Debug, Clone)]
pub struct StarGraph<'t> {
    tree: &'t DirectedTree,
    center: VertexId,
    graph: BipartiteMultigraph,
    labels: Vec<Endpoint>,
    // indexed by the arc's slot in the center's adjacency
    slot_node: Vec<Option<NodeId>>,
}

impl<'t> StarGraph<'t> {
    pub(crate) fn from_visits(
        tree: &'t DirectedTree,
        paths: &[Dipath],
        center: VertexId,
        visits: impl IntoIterator<Item = Visit>,
        steps: &mut Steps,
    ) -> Self {
        let mut slot_node: Vec<Option<usize>> = vec![None; tree.degree(center)];
        let mut left_labels = Vec::new();
        let mut right_labels = Vec::new();
        let mut pending = Vec::new();
        let real = |a: ArcId, labels: &mut Vec<Endpoint>, slot_node: &mut Vec<Option<usize>>| {
            let slot = tree.slot_of(center, a).expect("arc incident to the center");
            *slot_node[slot].get_or_insert_with(|| {
                labels.push(Endpoint::Arc(a));
                labels.len() - 1
            })
        };
        for Visit { path, pos } in visits {
            steps.tick(1);
            let p = &paths[path];
            let l = match p.arc_into(pos) {
                Some(a) => real(a, &mut left_labels, &mut slot_node),
                None => {
                    left_labels.push(Endpoint::Source(path));
                    left_labels.len() - 1
                }
            };
            let r = match p.arc_out_of(pos) {
                Some(a) => real(a, &mut right_labels, &mut slot_node),
                None => {
                    right_labels.push(Endpoint::Sink(path));
                    right_labels.len() - 1
                }
            };
            pending.push((l, r, path));
        }
        let mut graph = BipartiteMultigraph::new(left_labels.len(), right_labels.len());
        for (l, r, path) in pending {
            graph.add_edge(l, r, path);
        }
        // right-side indices become unified node ids
        for (slot, node) in slot_node.iter_mut().enumerate() {
            if let Some(i) = node {
                if !tree.incident(center)[slot].outgoing {
                    continue;
                }
                *i += left_labels.len();
            }
        }
        let mut labels = left_labels;
        labels.extend(right_labels);
        Self { tree, center, graph, labels, slot_node }
    }

    pub fn center(&self) -> VertexId {
        self.center
    }

    pub fn graph(&self) -> &BipartiteMultigraph {
        &self.graph
    }

    pub fn label(&self, v: NodeId) -> Endpoint {
        self.labels[v]
    }

    /// Tree arc represented by `v`, `None` for dummies.
    pub fn arc_of(&self, v: NodeId) -> Option<ArcId> {
        match self.labels[v] {
            Endpoint::Arc(a) => Some(a),
            _ => None,
        }
    }

    /// Node standing for arc `a`, if `a` is incident to the center and used
    /// by some in-scope dipath.
    pub fn node_of_arc(&self, a: ArcId) -> Option<NodeId> {
        self.tree.slot_of(self.center, a).and_then(|s| self.slot_node[s])
    }

    pub fn path_of(&self, e: EdgeId) -> PathId {
        self.graph.edge(e).tag
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Builds the star graph at `center` for the dipaths `path_ids`, each of
/// which must pass through `center`.
pub fn build_star_bipartite<'t>(
    tree: &'t DirectedTree,
    index: &PathIndex,
    paths: &[Dipath],
    center: VertexId,
    path_ids: &[PathId],
) -> Result<StarGraph<'t>, StarError> {
    let here = index.at_vertex(center);
    let mut visits = Vec::with_capacity(path_ids.len());
    for &path in path_ids {
        // by_vertex lists are sorted by path id
        let i = here
            .binary_search_by_key(&path, |v| v.path)
            .map_err(|_| StarError::PathNotThroughCenter { path, center })?;
        visits.push(here[i]);
    }
    Ok(StarGraph::from_visits(tree, paths, center, visits, &mut Steps::default()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> (DirectedTree, Vec<Dipath>) {
        // 1 -> 0 -> 2
        let t = DirectedTree::new(3, &[(1, 0), (0, 2)]).unwrap();
        let p = t.resolve_dipath(1, 2).unwrap();
        let r = t.resolve_dipath(1, 0).unwrap();
        (t, vec![p.clone(), p, r])
    }

    #[test]
    fn parallel_edges_for_repeated_paths() {
        let (t, paths) = star();
        let rooted = t.root(0).unwrap();
        let idx = PathIndex::new(&rooted, &paths).unwrap();
        let s = build_star_bipartite(&t, &idx, &paths, 0, &[0, 1]).unwrap();
        let g = s.graph();
        assert_eq!((g.left_count(), g.right_count(), g.edge_count()), (1, 1, 2));
        assert_eq!(g.endpoints(0), g.endpoints(1));
    }

    #[test]
    fn path_ending_at_center_gets_dummy() {
        let (t, paths) = star();
        let rooted = t.root(0).unwrap();
        let idx = PathIndex::new(&rooted, &paths).unwrap();
        let s = build_star_bipartite(&t, &idx, &paths, 0, &[2]).unwrap();
        let (l, r) = s.graph().endpoints(0);
        assert_eq!(s.label(l), Endpoint::Arc(0));
        assert_eq!(s.label(r), Endpoint::Sink(2));
        assert_eq!(s.node_of_arc(0), Some(l));
        assert_eq!(s.node_of_arc(1), None);
    }

    #[test]
    fn path_not_through_center() {
        let (t, paths) = star();
        let rooted = t.root(0).unwrap();
        let idx = PathIndex::new(&rooted, &paths).unwrap();
        assert_eq!(
            build_star_bipartite(&t, &idx, &paths, 2, &[2]).unwrap_err(),
            StarError::PathNotThroughCenter { path: 2, center: 2 }
        );
    }
}
