//! Stable matchings under per-vertex strict edge orders.

use std::collections::VecDeque;

use super::graph::{BipartiteMultigraph, EdgeId, NodeId, Side};
use super::matching::Matching;
use crate::error::BipartiteError;
use crate::Steps;

/// A strict total order on the edges at each vertex, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePreferences {
    order: Vec<Vec<EdgeId>>,
    rank_at_left: Vec<usize>,
    rank_at_right: Vec<usize>,
}

impl EdgePreferences {
    /// `order[v]` must list every edge incident to `v` exactly once.
    pub fn new(g: &BipartiteMultigraph, order: Vec<Vec<EdgeId>>) -> Result<Self, BipartiteError> {
        if order.len() != g.vertex_count() {
            return Err(BipartiteError::BadPreferences(order.len().min(g.vertex_count())));
        }
        let mut rank_at_left = vec![usize::MAX; g.edge_count()];
        let mut rank_at_right = vec![usize::MAX; g.edge_count()];
        for (v, list) in order.iter().enumerate() {
            if list.len() != g.degree(v) {
                return Err(BipartiteError::BadPreferences(v));
            }
            let ranks = if g.side(v) == Side::Left { &mut rank_at_left } else { &mut rank_at_right };
            for (r, &e) in list.iter().enumerate() {
                if e >= g.edge_count() || !g.is_incident(e, v) || ranks[e] != usize::MAX {
                    return Err(BipartiteError::BadPreferences(v));
                }
                ranks[e] = r;
            }
        }
        Ok(Self { order, rank_at_left, rank_at_right })
    }

    /// Orders every vertex's edges by a key, smallest key first.
    pub fn by_key<K: Ord>(g: &BipartiteMultigraph, mut key: impl FnMut(NodeId, EdgeId) -> K) -> Self {
        let order = (0..g.vertex_count())
            .map(|v| {
                let mut list = g.incident(v).to_vec();
                list.sort_by_cached_key(|&e| key(v, e));
                list
            })
            .collect();
        Self::new(g, order).expect("sorted incidence lists are permutations")
    }

    pub fn order(&self, v: NodeId) -> &[EdgeId] {
        &self.order[v]
    }

    /// Position of `e` in the order at its endpoint on `side` (0 = best).
    pub fn rank(&self, side: Side, e: EdgeId) -> usize {
        match side {
            Side::Left => self.rank_at_left[e],
            Side::Right => self.rank_at_right[e],
        }
    }

    fn rank_at(&self, g: &BipartiteMultigraph, v: NodeId, e: EdgeId) -> usize {
        self.rank(g.side(v), e)
    }

    /// `f ⪰_v e`: `f` is at least as preferred as `e` at `v`.
    pub fn weakly_prefers(&self, g: &BipartiteMultigraph, v: NodeId, f: EdgeId, e: EdgeId) -> bool {
        self.rank_at(g, v, f) <= self.rank_at(g, v, e)
    }
}

/// Deferred acceptance with incomplete lists on the subgraph of edges
/// accepted by `edge_ok`. Vertices of `proposers` propose in preference
/// order; free proposers are served in increasing id order.
pub(crate) fn deferred_acceptance(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    proposers: Side,
    edge_ok: &dyn Fn(EdgeId) -> bool,
    steps: &mut Steps,
) -> Matching {
    let n = g.vertex_count();
    let mut next = vec![0usize; n];
    let mut held: Vec<Option<EdgeId>> = vec![None; n];
    let mut queue: VecDeque<NodeId> = (0..n).filter(|&v| g.side(v) == proposers && g.degree(v) > 0).collect();
    steps.tick(n);
    while let Some(p) = queue.pop_front() {
        let list = prefs.order(p);
        while next[p] < list.len() {
            let e = list[next[p]];
            next[p] += 1;
            steps.tick(1);
            if !edge_ok(e) {
                continue;
            }
            let q = g.other_end(e, p);
            match held[q] {
                None => {
                    held[q] = Some(e);
                    break;
                }
                Some(cur) if prefs.weakly_prefers(g, q, e, cur) => {
                    held[q] = Some(e);
                    queue.push_back(g.other_end(cur, q));
                    break;
                }
                Some(_) => {}
            }
        }
    }
    let edges: Vec<EdgeId> = held.into_iter().flatten().collect();
    Matching::from_edges(g, &edges).expect("deferred acceptance yields a matching")
}

/// Left-proposing stable matching.
pub fn stable_matching(g: &BipartiteMultigraph, prefs: &EdgePreferences) -> Matching {
    stable_matching_from(g, prefs, Side::Left)
}

pub fn stable_matching_from(g: &BipartiteMultigraph, prefs: &EdgePreferences, proposers: Side) -> Matching {
    deferred_acceptance(g, prefs, proposers, &|_| true, &mut Steps::default())
}

/// An edge of `M` that dominates `e` at a shared endpoint, if any.
pub(crate) fn dominator(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    m: &Matching,
    e: EdgeId,
) -> Option<(NodeId, EdgeId)> {
    let (a, b) = g.endpoints(e);
    [a, b].into_iter().find_map(|v| {
        m.mate_edge(v).filter(|&f| prefs.weakly_prefers(g, v, f, e)).map(|f| (v, f))
    })
}

/// First edge (by id) outside `m` with no dominating matched edge.
pub fn blocking_edge(g: &BipartiteMultigraph, prefs: &EdgePreferences, m: &Matching) -> Option<EdgeId> {
    (0..g.edge_count()).find(|&e| !m.contains(e) && dominator(g, prefs, m, e).is_none())
}

pub fn is_stable(g: &BipartiteMultigraph, prefs: &EdgePreferences, m: &Matching) -> bool {
    blocking_edge(g, prefs, m).is_none()
}

/// Whether `e` belongs to some stable matching of the graph where `u` keeps
/// only the edge `e`. All stable matchings cover the same vertices and `e`
/// is the only way to cover `u`, so one stable matching decides it.
pub fn edge_survives_test(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    u: NodeId,
    e: EdgeId,
) -> Result<bool, BipartiteError> {
    g.check_edge(e)?;
    if !g.is_incident(e, u) {
        return Err(BipartiteError::EdgeNotIncident { edge: e, vertex: u });
    }
    let mut steps = Steps::default();
    Ok(survives_masked(g, prefs, u, e, &|_| true, &mut steps))
}

pub(crate) fn survives_masked(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    u: NodeId,
    e: EdgeId,
    edge_ok: &dyn Fn(EdgeId) -> bool,
    steps: &mut Steps,
) -> bool {
    let keep = |f: EdgeId| f == e || (edge_ok(f) && !g.is_incident(f, u));
    deferred_acceptance(g, prefs, Side::Left, &keep, steps).contains(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let mut g = BipartiteMultigraph::new(1, 1);
        g.add_edge(0, 0, 0);
        let prefs = EdgePreferences::by_key(&g, |_, e| e);
        let m = stable_matching(&g, &prefs);
        assert_eq!(m.edges(), vec![0]);
        assert!(is_stable(&g, &prefs, &m));
        assert!(!is_stable(&g, &prefs, &Matching::empty(&g)));
        assert!(edge_survives_test(&g, &prefs, 0, 0).unwrap());
    }

    #[test]
    fn right_vertex_chooses() {
        let mut g = BipartiteMultigraph::new(2, 1);
        let e0 = g.add_edge(0, 0, 0);
        let e1 = g.add_edge(1, 0, 1);
        let right = g.right_node(0);
        let prefs = EdgePreferences::new(&g, vec![vec![e0], vec![e1], vec![e1, e0]]).unwrap();
        assert_eq!(stable_matching(&g, &prefs).edges(), vec![e1]);
        assert_eq!(stable_matching_from(&g, &prefs, Side::Right).edges(), vec![e1]);
        assert!(prefs.weakly_prefers(&g, right, e1, e0));
    }

    #[test]
    fn empty_graph_is_stable() {
        let g = BipartiteMultigraph::new(0, 0);
        let prefs = EdgePreferences::new(&g, vec![]).unwrap();
        assert!(is_stable(&g, &prefs, &Matching::empty(&g)));
    }

    #[test]
    fn blocked_edge_does_not_survive() {
        // u=L0 --e-- z=R0 ; z prefers g=(L1,R0), and L1 prefers g over all
        let mut g = BipartiteMultigraph::new(2, 1);
        let e = g.add_edge(0, 0, 0);
        let h = g.add_edge(1, 0, 1);
        let prefs = EdgePreferences::new(&g, vec![vec![e], vec![h], vec![h, e]]).unwrap();
        assert!(!edge_survives_test(&g, &prefs, 0, e).unwrap());
        assert!(edge_survives_test(&g, &prefs, 1, h).unwrap());
        assert_eq!(
            edge_survives_test(&g, &prefs, 1, e).unwrap_err(),
            BipartiteError::EdgeNotIncident { edge: e, vertex: 1 }
        );
    }

    #[test]
    fn malformed_preferences() {
        let mut g = BipartiteMultigraph::new(1, 1);
        g.add_edge(0, 0, 0);
        assert!(EdgePreferences::new(&g, vec![vec![], vec![0]]).is_err());
        assert!(EdgePreferences::new(&g, vec![vec![0, 0], vec![0]]).is_err());
    }
}
