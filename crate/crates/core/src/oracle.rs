//! Exhaustive ground truth for small instances. Exponential by design and
//! written without the solvers' machinery.

use crate::bipartite::{BipartiteMultigraph, EdgeId, EdgePreferences, NodeId};
use crate::error::OracleError;
use crate::kernel::PriorityRelation;
use crate::tree::{ArcId, Dipath, DirectedTree, PathId};

pub const MAX_PATHS: usize = 16;
pub const MAX_ARCS: usize = 20;
pub const MAX_EDGES: usize = 20;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}

/// Dipaths as vertices, adjacent when they share an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    adj: Vec<Vec<bool>>,
}

impl IntersectionGraph {
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn adjacent(&self, p: PathId, q: PathId) -> bool {
        self.adj[p][q]
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|p| (p + 1..self.len()).filter(|&q| self.adj[p][q]).count()).sum()
    }

    fn masks(&self) -> Vec<u32> {
        self.adj.iter().map(|row| row.iter().enumerate().filter(|(_, &b)| b).fold(0, |m, (q, _)| m | 1 << q)).collect()
    }
}

pub fn build_intersection_graph(_tree: &DirectedTree, paths: &[Dipath]) -> IntersectionGraph {
    let adj = paths
        .iter()
        .enumerate()
        .map(|(i, p)| {
            paths
                .iter()
                .enumerate()
                .map(|(j, q)| i != j && p.arcs().iter().any(|a| q.arcs().contains(a)))
                .collect()
        })
        .collect();
    IntersectionGraph { adj }
}

fn stable_sets(g: &IntersectionGraph) -> impl Iterator<Item = u32> + '_ {
    let masks = g.masks();
    let n = g.len();
    (0u32..1 << n).filter(move |&s| (0..n).all(|v| s >> v & 1 == 0 || masks[v] & s == 0))
}

pub fn exact_max_stable(g: &IntersectionGraph) -> Result<usize, OracleError> {
    guard("paths", g.len(), MAX_PATHS)?;
    Ok(stable_sets(g).map(|s| s.count_ones() as usize).max().unwrap_or(0))
}

pub fn exact_clique_number(g: &IntersectionGraph) -> Result<usize, OracleError> {
    guard("paths", g.len(), MAX_PATHS)?;
    let masks = g.masks();
    let n = g.len();
    Ok((0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !masks[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

fn colorable(masks: &[u32], k: usize, v: usize, color: &mut Vec<usize>) -> bool {
    if v == masks.len() {
        return true;
    }
    // symmetry: vertex v may open at most one new color
    let used = color.iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..k.min(used + 1) {
        if (0..v).any(|w| masks[v] >> w & 1 == 1 && color[w] == c) {
            continue;
        }
        color.push(c);
        if colorable(masks, k, v + 1, color) {
            return true;
        }
        color.pop();
    }
    false
}

pub fn exact_chromatic(g: &IntersectionGraph) -> Result<usize, OracleError> {
    guard("paths", g.len(), MAX_PATHS)?;
    let masks = g.masks();
    Ok((0..=g.len()).find(|&k| colorable(&masks, k, 0, &mut Vec::new())).expect("n colors always suffice"))
}

/// A minimum set of arcs meeting every dipath, smallest in arc-id order
/// among those of minimum size.
pub fn exact_min_multicut(tree: &DirectedTree, paths: &[Dipath]) -> Result<Vec<ArcId>, OracleError> {
    let m = tree.arc_count();
    guard("arcs", m, MAX_ARCS)?;
    let path_masks: Vec<u32> = paths.iter().map(|p| p.arcs().iter().fold(0, |s, &a| s | 1 << a)).collect();
    Ok((0u32..1 << m)
        .filter(|&cut| path_masks.iter().all(|&p| p & cut != 0))
        .map(|cut| (0..m).filter(|&a| cut >> a & 1 == 1).collect::<Vec<_>>())
        .min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)))
        .expect("all arcs form a multicut"))
}

/// Largest number of pairwise arc-disjoint dipaths among `ids`.
pub fn exact_max_disjoint(paths: &[Dipath], ids: &[PathId]) -> Result<usize, OracleError> {
    guard("paths", ids.len(), MAX_PATHS)?;
    let sub: Vec<Dipath> = ids.iter().map(|&i| paths[i].clone()).collect();
    let g = IntersectionGraph {
        adj: (0..sub.len())
            .map(|i| (0..sub.len()).map(|j| i != j && sub[i].arcs().iter().any(|a| sub[j].arcs().contains(a))).collect())
            .collect(),
    };
    exact_max_stable(&g)
}

fn edge_mask(g: &BipartiteMultigraph, v: NodeId) -> u32 {
    (0..g.edge_count()).filter(|&e| g.is_incident(e, v)).fold(0, |m, e| m | 1 << e)
}

/// Every matching, as sorted edge lists.
pub fn enumerate_matchings(g: &BipartiteMultigraph) -> Result<Vec<Vec<EdgeId>>, OracleError> {
    guard("edges", g.edge_count(), MAX_EDGES)?;
    let at: Vec<u32> = (0..g.vertex_count()).map(|v| edge_mask(g, v)).collect();
    Ok((0u32..1 << g.edge_count())
        .filter(|&s| at.iter().all(|&m| (m & s).count_ones() <= 1))
        .map(|s| (0..g.edge_count()).filter(|&e| s >> e & 1 == 1).collect())
        .collect())
}

pub fn exact_matching_number(g: &BipartiteMultigraph) -> Result<usize, OracleError> {
    Ok(enumerate_matchings(g)?.iter().map(Vec::len).max().unwrap_or(0))
}

pub fn enumerate_max_matchings(g: &BipartiteMultigraph) -> Result<Vec<Vec<EdgeId>>, OracleError> {
    let all = enumerate_matchings(g)?;
    let nu = all.iter().map(Vec::len).max().unwrap_or(0);
    Ok(all.into_iter().filter(|m| m.len() == nu).collect())
}

fn rank_at(prefs: &EdgePreferences, v: NodeId, e: EdgeId) -> usize {
    prefs.order(v).iter().position(|&f| f == e).unwrap_or_else(|| panic!("edge {e} not ordered at {v}"))
}

/// Literal stability: every edge outside `m` meets, at one of its ends, a
/// matched edge ranked no worse there.
pub fn is_stable_literal(g: &BipartiteMultigraph, prefs: &EdgePreferences, m: &[EdgeId]) -> bool {
    (0..g.edge_count()).filter(|e| !m.contains(e)).all(|e| {
        let (a, b) = g.endpoints(e);
        [a, b].into_iter().any(|v| m.iter().any(|&f| g.is_incident(f, v) && rank_at(prefs, v, f) <= rank_at(prefs, v, e)))
    })
}

pub fn enumerate_stable_matchings(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
) -> Result<Vec<Vec<EdgeId>>, OracleError> {
    Ok(enumerate_matchings(g)?.into_iter().filter(|m| is_stable_literal(g, prefs, m)).collect())
}

/// Covered vertices of a matching, sorted.
pub fn covered(g: &BipartiteMultigraph, m: &[EdgeId]) -> Vec<NodeId> {
    let mut v: Vec<NodeId> = m.iter().flat_map(|&e| [g.endpoints(e).0, g.endpoints(e).1]).collect();
    v.sort_unstable();
    v
}

/// The subgraph keeping only the edges accepted by `keep`, with the induced
/// preferences. Returns the subgraph, its preferences and the original id of
/// each kept edge.
pub fn restrict(
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    keep: impl Fn(EdgeId) -> bool,
) -> (BipartiteMultigraph, EdgePreferences, Vec<EdgeId>) {
    let mut h = BipartiteMultigraph::new(g.left_count(), g.right_count());
    let mut old = Vec::new();
    let mut new_id = vec![usize::MAX; g.edge_count()];
    for e in (0..g.edge_count()).filter(|&e| keep(e)) {
        let be = g.edge(e);
        let (l, r) = g.endpoints(e);
        new_id[e] = h.add_edge(l, r - g.left_count(), be.tag);
        old.push(e);
    }
    let order = (0..g.vertex_count())
        .map(|v| prefs.order(v).iter().filter(|&&e| new_id[e] != usize::MAX).map(|&e| new_id[e]).collect())
        .collect();
    let p = EdgePreferences::new(&h, order).expect("restriction keeps orders");
    (h, p, old)
}

/// Per-arc rank tables of a relation, 0 = highest.
fn arc_ranks(tree: &DirectedTree, paths: &[Dipath], rel: &PriorityRelation) -> Vec<Vec<Option<usize>>> {
    let mut ranks = vec![vec![None; paths.len()]; tree.arc_count()];
    match rel {
        PriorityRelation::GlobalRanking(order) => {
            for (r, &p) in order.iter().enumerate() {
                for &a in paths[p].arcs() {
                    ranks[a][p] = Some(r);
                }
            }
        }
        PriorityRelation::PerArc(orders) => {
            for (a, order) in orders.iter().enumerate() {
                for (r, &p) in order.iter().enumerate() {
                    ranks[a][p] = Some(r);
                }
            }
        }
    }
    ranks
}

/// `K` is pairwise arc-disjoint and every dipath outside it shares an arc
/// with a member that has at least its priority on that arc.
pub fn verify_kernel(tree: &DirectedTree, paths: &[Dipath], rel: &PriorityRelation, k: &[PathId]) -> bool {
    let ranks = arc_ranks(tree, paths, rel);
    let disjoint = k.iter().enumerate().all(|(i, &p)| {
        k[i + 1..].iter().all(|&q| p != q && !paths[p].arcs().iter().any(|a| paths[q].arcs().contains(a)))
    });
    disjoint
        && (0..paths.len()).filter(|q| !k.contains(q)).all(|q| {
            paths[q].arcs().iter().any(|&a| {
                k.iter().any(|&w| match (ranks[a][w], ranks[a][q]) {
                    (Some(rw), Some(rq)) => rw <= rq,
                    _ => false,
                })
            })
        })
}

/// Every kernel, as sorted id lists.
pub fn enumerate_kernels(
    tree: &DirectedTree,
    paths: &[Dipath],
    rel: &PriorityRelation,
) -> Result<Vec<Vec<PathId>>, OracleError> {
    guard("paths", paths.len(), MAX_PATHS)?;
    Ok((0u32..1 << paths.len())
        .map(|s| (0..paths.len()).filter(|&p| s >> p & 1 == 1).collect::<Vec<_>>())
        .filter(|k| verify_kernel(tree, paths, rel, k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> DirectedTree {
        DirectedTree::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn copies_form_a_clique() {
        let t = chain(3);
        let paths = vec![t.resolve_dipath(0, 2).unwrap(); 4];
        let g = build_intersection_graph(&t, &paths);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(exact_chromatic(&g).unwrap(), 4);
        assert_eq!(exact_max_stable(&g).unwrap(), 1);
        assert_eq!(exact_clique_number(&g).unwrap(), 4);
        assert_eq!(exact_min_multicut(&t, &paths).unwrap(), vec![0]);
    }

    #[test]
    fn disjoint_paths_are_edgeless() {
        let t = chain(4);
        let paths = vec![t.resolve_dipath(0, 1).unwrap(), t.resolve_dipath(2, 3).unwrap()];
        let g = build_intersection_graph(&t, &paths);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(exact_chromatic(&g).unwrap(), 1);
        assert_eq!(exact_max_stable(&g).unwrap(), 2);
        assert_eq!(exact_min_multicut(&t, &[]).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn size_guard() {
        let t = chain(2);
        let paths = vec![t.resolve_dipath(0, 1).unwrap(); 17];
        let g = build_intersection_graph(&t, &paths);
        assert_eq!(exact_chromatic(&g), Err(OracleError::SizeLimit { what: "paths", size: 17, limit: 16 }));
    }

    #[test]
    fn single_edge_has_one_stable_matching() {
        let mut g = BipartiteMultigraph::new(1, 1);
        g.add_edge(0, 0, 0);
        let prefs = EdgePreferences::by_key(&g, |_, e| e);
        assert_eq!(enumerate_stable_matchings(&g, &prefs).unwrap(), vec![vec![0]]);
        assert_eq!(enumerate_matchings(&g).unwrap().len(), 2);
    }

    #[test]
    fn kernel_on_shared_arc() {
        let t = chain(3);
        let paths = vec![t.resolve_dipath(0, 2).unwrap(), t.resolve_dipath(1, 2).unwrap()];
        let rel = PriorityRelation::GlobalRanking(vec![1, 0]);
        assert_eq!(enumerate_kernels(&t, &paths, &rel).unwrap(), vec![vec![1]]);
        assert!(!verify_kernel(&t, &paths, &rel, &[0]));
        assert!(!verify_kernel(&t, &paths, &rel, &[0, 1]));
    }
}
