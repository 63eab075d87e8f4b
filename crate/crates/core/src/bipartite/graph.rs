pub type EdgeId = usize;
/// Vertex id: left vertices are `0..left_count`, right vertices follow.
pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiEdge {
    pub left: NodeId,
    pub right: NodeId,
    /// Caller-defined payload; the star reduction stores the dipath id here.
    pub tag: usize,
}

/// Bipartite multigraph with fixed vertex sets. Parallel edges are allowed.
#[derive(Debug, Clone, Default)]
pub struct BipartiteMultigraph {
    left: usize,
    right: usize,
    edges: Vec<BiEdge>,
    adj: Vec<Vec<EdgeId>>,
}

impl BipartiteMultigraph {
    pub fn new(left: usize, right: usize) -> Self {
        Self { left, right, edges: Vec::new(), adj: vec![Vec::new(); left + right] }
    }

    /// Adds an edge between left vertex `l` (`0..left`) and right vertex `r`
    /// (`0..right`, not offset).
    pub fn add_edge(&mut self, l: usize, r: usize, tag: usize) -> EdgeId {
        assert!(l < self.left && r < self.right, "edge endpoint out of range");
        let id = self.edges.len();
        let right = self.left + r;
        self.edges.push(BiEdge { left: l, right, tag });
        self.adj[l].push(id);
        self.adj[right].push(id);
        id
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> BiEdge {
        self.edges[e]
    }

    pub fn edges(&self) -> &[BiEdge] {
        &self.edges
    }

    pub fn left_node(&self, i: usize) -> NodeId {
        i
    }

    pub fn right_node(&self, i: usize) -> NodeId {
        self.left + i
    }

    pub fn side(&self, v: NodeId) -> Side {
        if v < self.left {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn incident(&self, v: NodeId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        let edge = self.edges[e];
        (edge.left, edge.right)
    }

    pub fn other_end(&self, e: EdgeId, v: NodeId) -> NodeId {
        let edge = self.edges[e];
        if edge.left == v {
            edge.right
        } else {
            edge.left
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: NodeId) -> bool {
        let edge = self.edges[e];
        edge.left == v || edge.right == v
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<(), crate::error::BipartiteError> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(crate::error::BipartiteError::EdgeNotInGraph(e))
        }
    }
}
