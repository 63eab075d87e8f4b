//! Maximum matchings, alternating-reachability tests and König covers.

use std::collections::VecDeque;

use super::graph::{BipartiteMultigraph, EdgeId, NodeId, Side};
use crate::error::BipartiteError;
use crate::Steps;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<EdgeId>>,
    member: Vec<bool>,
}

impl Matching {
    pub fn empty(g: &BipartiteMultigraph) -> Self {
        Self { mate: vec![None; g.vertex_count()], member: vec![false; g.edge_count()] }
    }

    /// Builds a matching from an edge list; `None` if two edges share a vertex.
    pub fn from_edges(g: &BipartiteMultigraph, edges: &[EdgeId]) -> Option<Self> {
        let mut m = Self::empty(g);
        for &e in edges {
            if e >= g.edge_count() || !m.insert(g, e) {
                return None;
            }
        }
        Some(m)
    }

    fn insert(&mut self, g: &BipartiteMultigraph, e: EdgeId) -> bool {
        let (l, r) = g.endpoints(e);
        if self.mate[l].is_some() || self.mate[r].is_some() {
            return false;
        }
        self.mate[l] = Some(e);
        self.mate[r] = Some(e);
        self.member[e] = true;
        true
    }

    fn from_mates(g: &BipartiteMultigraph, mate: Vec<Option<EdgeId>>) -> Self {
        let mut member = vec![false; g.edge_count()];
        for e in mate.iter().flatten() {
            member[*e] = true;
        }
        Self { mate, member }
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.member.iter().any(|&b| b)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.member.get(e).copied().unwrap_or(false)
    }

    /// Matched edges in increasing id order.
    pub fn edges(&self) -> Vec<EdgeId> {
        self.member.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e).collect()
    }

    pub fn mate_edge(&self, v: NodeId) -> Option<EdgeId> {
        self.mate[v]
    }

    pub fn covers(&self, v: NodeId) -> bool {
        self.mate[v].is_some()
    }

    pub fn covered_vertices(&self) -> Vec<NodeId> {
        (0..self.mate.len()).filter(|&v| self.mate[v].is_some()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    nodes: Vec<NodeId>,
}

impl VertexCover {
    fn from_flags(flags: impl Iterator<Item = bool>) -> Self {
        Self { nodes: flags.enumerate().filter(|(_, b)| *b).map(|(v, _)| v).collect() }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }

    pub fn covers_all(&self, g: &BipartiteMultigraph) -> bool {
        g.edges().iter().all(|e| self.contains(e.left) || self.contains(e.right))
    }
}

/// Restricts a matching computation to a subgraph.
pub(crate) struct Mask<'a> {
    pub edge_ok: &'a dyn Fn(EdgeId) -> bool,
    pub vertex_ok: &'a dyn Fn(NodeId) -> bool,
}

impl Mask<'_> {
    pub(crate) fn all() -> Mask<'static> {
        Mask { edge_ok: &|_| true, vertex_ok: &|_| true }
    }

    fn allows(&self, g: &BipartiteMultigraph, e: EdgeId) -> bool {
        let (l, r) = g.endpoints(e);
        (self.edge_ok)(e) && (self.vertex_ok)(l) && (self.vertex_ok)(r)
    }
}

/// Augmenting-path matching, left vertices in increasing order, edges in
/// increasing id order. Visited marks are only cleared after a successful
/// augmentation, so the cost is O((ν + 1)·|E|).
pub(crate) fn max_matching_masked(g: &BipartiteMultigraph, mask: &Mask<'_>, steps: &mut Steps) -> Matching {
    let mut mate: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut visited = vec![false; g.left_count()];
    let mut stack: Vec<(NodeId, usize)> = Vec::new();
    let mut via: Vec<EdgeId> = Vec::new();
    for start in 0..g.left_count() {
        steps.tick(1);
        if !(mask.vertex_ok)(start) || visited[start] || g.degree(start) == 0 {
            continue;
        }
        stack.clear();
        via.clear();
        visited[start] = true;
        stack.push((start, 0));
        let mut augmented = false;
        while let Some(top) = stack.last_mut() {
            let (x, i) = *top;
            if i == g.degree(x) {
                stack.pop();
                via.pop();
                continue;
            }
            top.1 += 1;
            steps.tick(1);
            let e = g.incident(x)[i];
            if !mask.allows(g, e) {
                continue;
            }
            let r = g.edge(e).right;
            match mate[r] {
                None => {
                    via.push(e);
                    for &ed in &via {
                        let (a, b) = g.endpoints(ed);
                        mate[a] = Some(ed);
                        mate[b] = Some(ed);
                    }
                    steps.tick(via.len());
                    augmented = true;
                    break;
                }
                Some(me) => {
                    let y = g.edge(me).left;
                    if !visited[y] {
                        visited[y] = true;
                        via.push(e);
                        stack.push((y, 0));
                    }
                }
            }
        }
        if augmented {
            steps.tick(visited.len());
            visited.iter_mut().for_each(|v| *v = false);
        }
    }
    Matching::from_mates(g, mate)
}

/// A maximum matching of `g`. With `forced = Some(f)` the result contains
/// `f` and is maximum among matchings containing `f`.
pub fn max_matching(g: &BipartiteMultigraph, forced: Option<EdgeId>) -> Result<Matching, BipartiteError> {
    let mut steps = Steps::default();
    max_matching_counted(g, forced, &mut steps)
}

pub(crate) fn max_matching_counted(
    g: &BipartiteMultigraph,
    forced: Option<EdgeId>,
    steps: &mut Steps,
) -> Result<Matching, BipartiteError> {
    match forced {
        None => Ok(max_matching_masked(g, &Mask::all(), steps)),
        Some(f) => {
            g.check_edge(f)?;
            let (a, b) = g.endpoints(f);
            let vertex_ok = move |v: NodeId| v != a && v != b;
            let mut m = max_matching_masked(g, &Mask { edge_ok: &|_| true, vertex_ok: &vertex_ok }, steps);
            m.insert(g, f);
            Ok(m)
        }
    }
}

/// For each vertex, whether some maximum matching (of the masked subgraph)
/// leaves it uncovered. `m` must be a maximum matching of that subgraph.
pub(crate) fn missable_vertices(g: &BipartiteMultigraph, m: &Matching, mask: &Mask<'_>, steps: &mut Steps) -> Vec<bool> {
    let mut missable = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for (v, flag) in missable.iter_mut().enumerate() {
        if (mask.vertex_ok)(v) && !m.covers(v) {
            *flag = true;
            queue.push_back(v);
        }
    }
    steps.tick(g.vertex_count());
    while let Some(x) = queue.pop_front() {
        for &e in g.incident(x) {
            steps.tick(1);
            if m.contains(e) || !mask.allows(g, e) {
                continue;
            }
            let y = g.other_end(e, x);
            let Some(me) = m.mate_edge(y) else { continue };
            let z = g.other_end(me, y);
            if !missable[z] {
                missable[z] = true;
                queue.push_back(z);
            }
        }
    }
    missable
}

/// Vertices covered by every maximum matching.
pub fn vertices_in_every_max_matching(g: &BipartiteMultigraph, m: &Matching) -> Vec<bool> {
    let mut steps = Steps::default();
    missable_vertices(g, m, &Mask::all(), &mut steps).into_iter().map(|b| !b).collect()
}

/// Alternating reachability in D_M where unmatched edges run from `from`
/// side to the other and matched edges run back, seeded with `seeds`.
fn alternating_reach(g: &BipartiteMultigraph, m: &Matching, from: Side, seeds: &[NodeId], steps: &mut Steps) -> Vec<bool> {
    let mut reached = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in seeds {
        if !reached[s] {
            reached[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        let on_from_side = g.side(x) == from;
        for &e in g.incident(x) {
            steps.tick(1);
            // unmatched edges leave the `from` side, matched edges enter it
            if m.contains(e) == on_from_side {
                continue;
            }
            let y = g.other_end(e, x);
            if !reached[y] {
                reached[y] = true;
                queue.push_back(y);
            }
        }
    }
    reached
}

fn free_on(g: &BipartiteMultigraph, m: &Matching, side: Side) -> Vec<NodeId> {
    (0..g.vertex_count()).filter(|&v| g.side(v) == side && !m.covers(v)).collect()
}

/// Whether `e` lies in some maximum matching, decided on D_M (matched edges
/// oriented right→left, the rest left→right). `m` must be maximum.
pub fn edge_in_some_max_matching(g: &BipartiteMultigraph, m: &Matching, e: EdgeId) -> Result<bool, BipartiteError> {
    g.check_edge(e)?;
    if m.contains(e) {
        return Ok(true);
    }
    let (u, w) = g.endpoints(e);
    if !m.covers(u) || !m.covers(w) {
        return Ok(true);
    }
    let mut steps = Steps::default();
    // even alternating path from a free left vertex ending at u
    let from_free_left = alternating_reach(g, m, Side::Left, &free_on(g, m, Side::Left), &mut steps);
    if from_free_left[u] {
        return Ok(true);
    }
    // alternating cycle through e, or even path from w to a free right vertex
    let from_w = alternating_reach(g, m, Side::Left, &[w], &mut steps);
    Ok(from_w[u] || (0..g.vertex_count()).any(|v| from_w[v] && g.side(v) == Side::Right && !m.covers(v)))
}

/// König cover from a maximum matching: (L ∖ R_M) ∪ (R ∩ R_M), where R_M is
/// reachable from the free left vertices.
pub fn min_vertex_cover(g: &BipartiteMultigraph, m: &Matching) -> VertexCover {
    let mut steps = Steps::default();
    min_vertex_cover_counted(g, m, &mut steps)
}

pub(crate) fn min_vertex_cover_counted(g: &BipartiteMultigraph, m: &Matching, steps: &mut Steps) -> VertexCover {
    let reach = alternating_reach(g, m, Side::Left, &free_on(g, m, Side::Left), steps);
    steps.tick(g.vertex_count());
    VertexCover::from_flags((0..g.vertex_count()).map(|v| (g.side(v) == Side::Left) != reach[v]))
}

/// Minimum vertex cover containing `x` such that every edge at `x` lying in
/// no maximum matching has its other endpoint in the cover too.
///
/// `x` must be covered by every maximum matching and `m` must be maximum.
/// The first condition is verified exhaustively in debug builds.
pub fn min_cover_with_anchor(g: &BipartiteMultigraph, m: &Matching, x: NodeId) -> Result<VertexCover, BipartiteError> {
    let mut steps = Steps::default();
    min_cover_with_anchor_counted(g, m, x, &mut steps)
}

pub(crate) fn min_cover_with_anchor_counted(
    g: &BipartiteMultigraph,
    m: &Matching,
    x: NodeId,
    steps: &mut Steps,
) -> Result<VertexCover, BipartiteError> {
    if !m.covers(x) {
        return Err(BipartiteError::AnchorNotInEveryMaxMatching(x));
    }
    if cfg!(debug_assertions) {
        let without = max_matching_masked(
            g,
            &Mask { edge_ok: &|_| true, vertex_ok: &|v| v != x },
            &mut Steps::default(),
        );
        if without.len() + 1 != m.len() {
            return Err(BipartiteError::AnchorNotInEveryMaxMatching(x));
        }
    }
    let anchor_side = g.side(x);
    let source = anchor_side.opposite();
    // x is reached from a free neighbor y, real or added for the purpose
    let mut seeds = free_on(g, m, source);
    seeds.push(x);
    let reach = alternating_reach(g, m, source, &seeds, steps);
    steps.tick(g.vertex_count());
    Ok(VertexCover::from_flags((0..g.vertex_count()).map(|v| (g.side(v) == source) != reach[v])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(left: usize, right: usize, edges: &[(usize, usize)]) -> BipartiteMultigraph {
        let mut g = BipartiteMultigraph::new(left, right);
        for (i, &(l, r)) in edges.iter().enumerate() {
            g.add_edge(l, r, i);
        }
        g
    }

    #[test]
    fn complete_two_by_two() {
        let g = graph(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(max_matching(&g, None).unwrap().len(), 2);
    }

    #[test]
    fn forced_single_edge() {
        let g = graph(1, 1, &[(0, 0)]);
        let m = max_matching(&g, Some(0)).unwrap();
        assert_eq!(m.edges(), vec![0]);
        assert_eq!(max_matching(&g, Some(3)).unwrap_err(), BipartiteError::EdgeNotInGraph(3));
    }

    #[test]
    fn empty_graph() {
        let g = BipartiteMultigraph::new(0, 0);
        assert!(max_matching(&g, None).unwrap().is_empty());
    }

    #[test]
    fn middle_of_p4() {
        // a - b - c - d with a, c on the left
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = max_matching(&g, None).unwrap();
        assert_eq!(m.len(), 2);
        assert!(!edge_in_some_max_matching(&g, &m, 1).unwrap());
        assert!(edge_in_some_max_matching(&g, &m, 0).unwrap());
        assert!(edge_in_some_max_matching(&g, &m, 2).unwrap());
    }

    #[test]
    fn anchor_single_edge() {
        let g = graph(1, 1, &[(0, 0)]);
        let m = max_matching(&g, None).unwrap();
        let x = g.right_node(0);
        assert_eq!(min_cover_with_anchor(&g, &m, x).unwrap().nodes(), &[x]);
    }

    #[test]
    fn anchor_star_of_three() {
        let g = graph(3, 1, &[(0, 0), (1, 0), (2, 0)]);
        let m = max_matching(&g, None).unwrap();
        let x = g.right_node(0);
        assert_eq!(min_cover_with_anchor(&g, &m, x).unwrap().nodes(), &[x]);
    }

    #[test]
    fn anchor_missed_by_some_matching() {
        // right vertex 0 can be avoided: left 0 also reaches right 1
        let g = graph(1, 2, &[(0, 0), (0, 1)]);
        let m = max_matching(&g, None).unwrap();
        let x = g.right_node(0);
        assert!(m.covers(x));
        assert!(cfg!(not(debug_assertions)) || min_cover_with_anchor(&g, &m, x).is_err());
        assert!(min_cover_with_anchor(&g, &m, g.right_node(1)).is_err());
    }

    #[test]
    fn konig_on_path() {
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = max_matching(&g, None).unwrap();
        let c = min_vertex_cover(&g, &m);
        assert_eq!(c.len(), 2);
        assert!(c.covers_all(&g));
    }

    #[test]
    fn every_max_matching_vertices() {
        let g = graph(2, 1, &[(0, 0), (1, 0)]);
        let m = max_matching(&g, None).unwrap();
        assert_eq!(vertices_in_every_max_matching(&g, &m), vec![false, false, true]);
    }
}
