//! Directed trees, dipaths, rooted views and per-vertex / per-arc path indices.

use std::collections::{HashSet, VecDeque};

use crate::error::TreeError;

pub type VertexId = usize;
pub type ArcId = usize;
pub type PathId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

/// One entry of a vertex's adjacency list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub arc: ArcId,
    pub neighbor: VertexId,
    /// `true` when the arc leaves the vertex owning this list.
    pub outgoing: bool,
}

/// An oriented tree on vertices `0..n` with arcs `0..n-1`.
///
/// A canonical rooting at vertex 0 is kept internally so that arc lookup
/// between neighbors and unique-path resolution are cheap.
#[derive(Debug, Clone)]
pub struct DirectedTree {
    n: usize,
    arcs: Vec<Arc>,
    adjacency: Vec<Vec<Incidence>>,
    // position of arc a in adjacency[tail] / adjacency[head]
    slot_at_tail: Vec<usize>,
    slot_at_head: Vec<usize>,
    base_parent: Vec<Option<(VertexId, ArcId)>>,
    base_depth: Vec<usize>,
}

impl DirectedTree {
    pub fn new(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::NotATree);
        }
        for &(t, h) in arcs {
            for v in [t, h] {
                if v >= n {
                    return Err(TreeError::BadVertexId(v));
                }
            }
            if t == h {
                return Err(TreeError::SelfLoop(t));
            }
        }
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(t, h) in arcs {
            if !seen.insert((t.min(h), t.max(h))) {
                return Err(TreeError::DuplicateArc { tail: t, head: h });
            }
        }
        if arcs.len() + 1 != n {
            return Err(TreeError::NotATree);
        }

        let mut adjacency = vec![Vec::new(); n];
        let mut slot_at_tail = Vec::with_capacity(arcs.len());
        let mut slot_at_head = Vec::with_capacity(arcs.len());
        let arcs: Vec<Arc> = arcs.iter().map(|&(tail, head)| Arc { tail, head }).collect();
        for (id, a) in arcs.iter().enumerate() {
            slot_at_tail.push(adjacency[a.tail].len());
            adjacency[a.tail].push(Incidence { arc: id, neighbor: a.head, outgoing: true });
            slot_at_head.push(adjacency[a.head].len());
            adjacency[a.head].push(Incidence { arc: id, neighbor: a.tail, outgoing: false });
        }

        let mut base_parent = vec![None; n];
        let mut base_depth = vec![usize::MAX; n];
        base_depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for inc in &adjacency[v] {
                let w = inc.neighbor;
                if base_depth[w] == usize::MAX {
                    base_depth[w] = base_depth[v] + 1;
                    base_parent[w] = Some((v, inc.arc));
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        // n-1 arcs and connected <=> tree
        if reached != n {
            return Err(TreeError::NotATree);
        }

        Ok(Self { n, arcs, adjacency, slot_at_tail, slot_at_head, base_parent, base_depth })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, a: ArcId) -> Arc {
        self.arcs[a]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn incident(&self, v: VertexId) -> &[Incidence] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Position of arc `a` in the adjacency list of `v`, if `v` is an endpoint.
    pub fn slot_of(&self, v: VertexId, a: ArcId) -> Option<usize> {
        let arc = self.arcs[a];
        if arc.tail == v {
            Some(self.slot_at_tail[a])
        } else if arc.head == v {
            Some(self.slot_at_head[a])
        } else {
            None
        }
    }

    /// The arc joining `u` and `v` in either orientation.
    pub fn arc_between(&self, u: VertexId, v: VertexId) -> Option<ArcId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match (self.base_parent[u], self.base_parent[v]) {
            (Some((p, a)), _) if p == v => Some(a),
            (_, Some((p, a))) if p == u => Some(a),
            _ => None,
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), TreeError> {
        if v < self.n {
            Ok(())
        } else {
            Err(TreeError::BadVertexId(v))
        }
    }

    /// Builds a dipath from an explicit vertex sequence.
    pub fn dipath(&self, vertices: Vec<VertexId>) -> Result<Dipath, TreeError> {
        if vertices.len() < 2 {
            return Err(TreeError::EmptyPath);
        }
        for &v in &vertices {
            self.check_vertex(v)?;
        }
        let mut arcs = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            let a = self.arc_between(w[0], w[1]).ok_or(TreeError::NotAdjacent { from: w[0], to: w[1] })?;
            if self.arcs[a].tail != w[0] {
                return Err(TreeError::NotADipath { from: w[0], to: w[1] });
            }
            arcs.push(a);
        }
        // A walk along forward arcs of a tree cannot revisit a vertex: returning
        // would need both orientations of one edge.
        Ok(Dipath { vertices, arcs })
    }

    /// The unique tree path from `source` to `sink`, provided it respects
    /// every arc orientation.
    pub fn resolve_dipath(&self, source: VertexId, sink: VertexId) -> Result<Dipath, TreeError> {
        self.check_vertex(source)?;
        self.check_vertex(sink)?;
        if source == sink {
            return Err(TreeError::EmptyPath);
        }
        let (mut a, mut b) = (source, sink);
        let mut up = vec![a];
        let mut down = vec![b];
        while self.base_depth[a] > self.base_depth[b] {
            a = self.base_parent[a].expect("non-root has a parent").0;
            up.push(a);
        }
        while self.base_depth[b] > self.base_depth[a] {
            b = self.base_parent[b].expect("non-root has a parent").0;
            down.push(b);
        }
        while a != b {
            a = self.base_parent[a].expect("non-root has a parent").0;
            b = self.base_parent[b].expect("non-root has a parent").0;
            up.push(a);
            down.push(b);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        self.dipath(up)
    }

    /// Roots the tree at `r`.
    pub fn root(&self, r: VertexId) -> Result<RootedTree<'_>, TreeError> {
        RootedTree::new(self, r)
    }
}

/// A direction-respecting path, stored as its vertex sequence and the
/// matching arc sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dipath {
    vertices: Vec<VertexId>,
    arcs: Vec<ArcId>,
}

impl Dipath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn sink(&self) -> VertexId {
        *self.vertices.last().expect("dipaths have at least two vertices")
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Arc entering the vertex at `pos`, if any.
    pub fn arc_into(&self, pos: usize) -> Option<ArcId> {
        pos.checked_sub(1).map(|i| self.arcs[i])
    }

    /// Arc leaving the vertex at `pos`, if any.
    pub fn arc_out_of(&self, pos: usize) -> Option<ArcId> {
        self.arcs.get(pos).copied()
    }

    pub fn contains_arc(&self, a: ArcId) -> bool {
        self.arcs.contains(&a)
    }
}

/// Rooted view of a [`DirectedTree`].
#[derive(Debug, Clone)]
pub struct RootedTree<'t> {
    tree: &'t DirectedTree,
    root: VertexId,
    father: Vec<Option<VertexId>>,
    father_arc: Vec<Option<ArcId>>,
    children: Vec<Vec<VertexId>>,
    depth: Vec<usize>,
    top_down: Vec<VertexId>,
}

impl<'t> RootedTree<'t> {
    pub fn new(tree: &'t DirectedTree, root: VertexId) -> Result<Self, TreeError> {
        tree.check_vertex(root)?;
        let n = tree.vertex_count();
        let mut father = vec![None; n];
        let mut father_arc = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut visited = vec![false; n];
        let mut top_down = Vec::with_capacity(n);
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            top_down.push(v);
            for inc in tree.incident(v) {
                let w = inc.neighbor;
                if !visited[w] {
                    visited[w] = true;
                    father[w] = Some(v);
                    father_arc[w] = Some(inc.arc);
                    depth[w] = depth[v] + 1;
                    children[v].push(w);
                    queue.push_back(w);
                }
            }
        }
        Ok(Self { tree, root, father, father_arc, children, depth, top_down })
    }

    pub fn tree(&self) -> &'t DirectedTree {
        self.tree
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn father(&self, v: VertexId) -> Option<VertexId> {
        self.father[v]
    }

    pub fn fathers(&self) -> &[Option<VertexId>] {
        &self.father
    }

    /// Arc between `v` and its father, in whichever orientation it has.
    pub fn father_arc(&self, v: VertexId) -> Option<ArcId> {
        self.father_arc[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    /// Breadth-first order from the root: every vertex after its father.
    pub fn top_down(&self) -> &[VertexId] {
        &self.top_down
    }

    /// Every vertex after all of its children.
    pub fn bottom_up(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.top_down.iter().rev().copied()
    }

    /// The child endpoint of arc `a`.
    pub fn lower_end(&self, a: ArcId) -> VertexId {
        let arc = self.tree.arc(a);
        if self.father[arc.head] == Some(arc.tail) {
            arc.head
        } else {
            arc.tail
        }
    }
}

/// Occurrence of a dipath at a vertex: `pos` is the index of the vertex in
/// the dipath's vertex sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    pub path: PathId,
    pub pos: usize,
}

/// Which dipaths pass through each vertex and each arc, plus the sets of
/// dipaths crossing the arc to each vertex's father.
#[derive(Debug, Clone)]
pub struct PathIndex {
    by_vertex: Vec<Vec<Visit>>,
    by_arc: Vec<Vec<PathId>>,
    q_sets: Vec<Vec<PathId>>,
}

impl PathIndex {
    pub fn new(rooted: &RootedTree<'_>, paths: &[Dipath]) -> Result<Self, TreeError> {
        let tree = rooted.tree();
        let mut by_vertex = vec![Vec::new(); tree.vertex_count()];
        let mut by_arc = vec![Vec::new(); tree.arc_count()];
        for (id, p) in paths.iter().enumerate() {
            check_against(tree, id, p)?;
            for (pos, &v) in p.vertices.iter().enumerate() {
                by_vertex[v].push(Visit { path: id, pos });
            }
            for &a in &p.arcs {
                by_arc[a].push(id);
            }
        }
        let q_sets = (0..tree.vertex_count())
            .map(|v| rooted.father_arc(v).map(|a| by_arc[a].clone()).unwrap_or_default())
            .collect();
        Ok(Self { by_vertex, by_arc, q_sets })
    }

    /// Dipaths through `v` (the set 𝒫_v), in increasing id order.
    pub fn at_vertex(&self, v: VertexId) -> &[Visit] {
        &self.by_vertex[v]
    }

    /// Dipaths containing arc `a`, in increasing id order.
    pub fn on_arc(&self, a: ArcId) -> &[PathId] {
        &self.by_arc[a]
    }

    /// Dipaths using the arc between `v` and its father; empty at the root.
    pub fn crossing_father_arc(&self, v: VertexId) -> &[PathId] {
        &self.q_sets[v]
    }

    pub fn path_count_at(&self, v: VertexId) -> usize {
        self.by_vertex[v].len()
    }
}

fn check_against(tree: &DirectedTree, id: PathId, p: &Dipath) -> Result<(), TreeError> {
    let bad = || TreeError::PathTreeMismatch { path: id };
    if p.vertices.len() != p.arcs.len() + 1 || p.arcs.is_empty() {
        return Err(bad());
    }
    for (i, &a) in p.arcs.iter().enumerate() {
        if a >= tree.arc_count() {
            return Err(bad());
        }
        let arc = tree.arc(a);
        if arc.tail != p.vertices[i] || arc.head != p.vertices[i + 1] {
            return Err(bad());
        }
    }
    Ok(())
}

/// Σ_v deg(v)·|𝒫_v|^exp, the reference quantity for the step counters.
pub fn star_work(tree: &DirectedTree, index: &PathIndex, exp: u32) -> u64 {
    (0..tree.vertex_count())
        .map(|v| tree.degree(v) as u64 * (index.path_count_at(v) as u64).pow(exp))
        .sum()
}
