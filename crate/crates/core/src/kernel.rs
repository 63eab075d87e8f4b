//! Kernels of clique-acyclic orientations of the arc-intersection graph.
//!
//! A priority relation orders the dipaths on every arc. A kernel is a set of
//! arc-disjoint dipaths such that every other dipath shares an arc with a
//! kernel dipath that has at least its priority there.
//!
//! Same two-pass layout as the multicut: the upward pass marks the dipaths
//! over each father arc that cannot be in a stable matching of their star
//! (*uninteresting*), the downward pass takes a stable matching per star.

use std::collections::HashSet;

use crate::bipartite::{deferred_acceptance, dominator, survives_masked, BipartiteMultigraph, EdgePreferences, Side};
use crate::error::{PriorityError, SolveError};
use crate::star::StarGraph;
use crate::tree::{ArcId, Dipath, DirectedTree, PathId, PathIndex, RootedTree, VertexId, Visit};
use crate::Steps;

/// The relation as given by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PriorityRelation {
    /// All dipath ids, highest priority first. Always consistent.
    GlobalRanking(Vec<PathId>),
    /// For each arc, the dipaths using it, highest priority first.
    PerArc(Vec<Vec<PathId>>),
}

/// Validated per-arc ranks (0 = highest priority).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPriorities {
    // per arc, (path, rank) sorted by path id
    ranks: Vec<Vec<(PathId, usize)>>,
}

impl ArcPriorities {
    /// Rank of `path` on arc `a`; `None` if the dipath does not use `a`.
    pub fn rank(&self, a: ArcId, path: PathId) -> Option<usize> {
        let list = &self.ranks[a];
        list.binary_search_by_key(&path, |&(p, _)| p).ok().map(|i| list[i].1)
    }

    /// `P ⪰_a Q`.
    pub fn at_least(&self, a: ArcId, p: PathId, q: PathId) -> bool {
        match (self.rank(a, p), self.rank(a, q)) {
            (Some(rp), Some(rq)) => rp <= rq,
            _ => false,
        }
    }

    /// Dipaths on `a`, highest priority first.
    pub fn order(&self, a: ArcId) -> Vec<PathId> {
        let mut list = self.ranks[a].clone();
        list.sort_by_key(|&(_, r)| r);
        list.into_iter().map(|(p, _)| p).collect()
    }

    /// The per-arc form of this relation.
    pub fn to_relation(&self) -> PriorityRelation {
        PriorityRelation::PerArc((0..self.ranks.len()).map(|a| self.order(a)).collect())
    }
}

/// Checks completeness of the relation and that any two dipaths are ordered
/// the same way on every arc they share.
pub fn validate_priorities(
    tree: &DirectedTree,
    paths: &[Dipath],
    index: &PathIndex,
    rel: &PriorityRelation,
) -> Result<ArcPriorities, PriorityError> {
    let ranks: Vec<Vec<(PathId, usize)>> = match rel {
        PriorityRelation::GlobalRanking(order) => {
            let mut pos = vec![usize::MAX; paths.len()];
            if order.len() != paths.len() {
                return Err(PriorityError::IncompleteRanking);
            }
            for (r, &p) in order.iter().enumerate() {
                if p >= paths.len() || pos[p] != usize::MAX {
                    return Err(PriorityError::IncompleteRanking);
                }
                pos[p] = r;
            }
            (0..tree.arc_count()).map(|a| index.on_arc(a).iter().map(|&p| (p, pos[p])).collect()).collect()
        }
        PriorityRelation::PerArc(orders) => {
            if orders.len() != tree.arc_count() {
                return Err(PriorityError::IncompleteOrder { arc: orders.len().min(tree.arc_count()) });
            }
            let mut ranks = Vec::with_capacity(orders.len());
            for (a, order) in orders.iter().enumerate() {
                let mut list: Vec<(PathId, usize)> = order.iter().enumerate().map(|(r, &p)| (p, r)).collect();
                list.sort_unstable();
                let same = list.len() == index.on_arc(a).len()
                    && list.iter().zip(index.on_arc(a)).all(|(&(p, _), &q)| p == q);
                if !same {
                    return Err(PriorityError::IncompleteOrder { arc: a });
                }
                ranks.push(list);
            }
            ranks
        }
    };
    let prios = ArcPriorities { ranks };

    // Two dipaths share a contiguous run of arcs, so agreement on every pair
    // of consecutive arcs they both traverse is enough.
    for v in 0..tree.vertex_count() {
        let mut through: Vec<(ArcId, ArcId, usize, usize, PathId)> = index
            .at_vertex(v)
            .iter()
            .filter_map(|&Visit { path, pos }| {
                let p = &paths[path];
                let (a, b) = (p.arc_into(pos)?, p.arc_out_of(pos)?);
                Some((a, b, prios.rank(a, path)?, prios.rank(b, path)?, path))
            })
            .collect();
        through.sort_unstable();
        for w in through.windows(2) {
            let (x, y) = (w[0], w[1]);
            if (x.0, x.1) == (y.0, y.1) && x.3 > y.3 {
                return Err(PriorityError::InconsistentOrder { first: x.4, second: y.4, arc_a: x.0, arc_b: x.1 });
            }
        }
    }
    Ok(prios)
}

/// Uninteresting dipaths per vertex, sorted by id; empty at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UninterestingSets {
    sets: Vec<Vec<PathId>>,
}

impl UninterestingSets {
    pub fn at(&self, v: VertexId) -> &[PathId] {
        &self.sets[v]
    }

    pub fn contains(&self, v: VertexId, path: PathId) -> bool {
        self.sets[v].binary_search(&path).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub arc: ArcId,
    pub by: PathId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    /// Kernel dipaths, sorted by id.
    pub kernel: Vec<PathId>,
    /// For each dipath outside the kernel, a kernel dipath dominating it on a
    /// shared arc; `None` for kernel members.
    pub witness: Vec<Option<Witness>>,
    pub steps: Steps,
}

fn child_arcs(rooted: &RootedTree<'_>, p: &Dipath, visit: Visit) -> impl Iterator<Item = ArcId> {
    let up = rooted.father_arc(p.vertices()[visit.pos]);
    [p.arc_into(visit.pos), p.arc_out_of(visit.pos)].into_iter().flatten().filter(move |&a| Some(a) != up)
}

struct Pass<'a, 't> {
    rooted: &'a RootedTree<'t>,
    paths: &'a [Dipath],
    index: &'a PathIndex,
    prios: &'a ArcPriorities,
}

impl<'a, 't> Pass<'a, 't> {
    /// Star at `v` over the dipaths not uninteresting at any child arc.
    fn star(&self, v: VertexId, uninteresting: &[Vec<PathId>], steps: &mut Steps) -> StarGraph<'t> {
        let visits = self.index.at_vertex(v).iter().copied().filter(|&visit| {
            child_arcs(self.rooted, &self.paths[visit.path], visit)
                .all(|a| uninteresting[self.rooted.lower_end(a)].binary_search(&visit.path).is_err())
        });
        StarGraph::from_visits(self.rooted.tree(), self.paths, v, visits, steps)
    }

    fn preferences(&self, star: &StarGraph<'_>, steps: &mut Steps) -> EdgePreferences {
        let g = star.graph();
        steps.tick(2 * g.edge_count());
        EdgePreferences::by_key(g, |x, e| match star.arc_of(x) {
            Some(a) => self.prios.rank(a, star.path_of(e)).expect("star dipaths use the star arcs"),
            None => 0,
        })
    }
}

fn upward(pass: &Pass<'_, '_>, steps: &mut Steps) -> UninterestingSets {
    let rooted = pass.rooted;
    let mut sets: Vec<Vec<PathId>> = vec![Vec::new(); rooted.tree().vertex_count()];
    for v in rooted.bottom_up() {
        let crossing = pass.index.crossing_father_arc(v);
        let Some(up) = rooted.father_arc(v) else { continue };
        if crossing.is_empty() {
            continue;
        }
        let star = pass.star(v, &sets, steps);
        let g = star.graph();
        let mut survivors: HashSet<PathId> = HashSet::new();
        if let Some(u) = star.node_of_arc(up) {
            let prefs = pass.preferences(&star, steps);
            for &e in g.incident(u) {
                if survives_masked(g, &prefs, u, e, &|_| true, steps) {
                    survivors.insert(star.path_of(e));
                }
            }
        }
        // dipaths missing from the star are uninteresting at a child
        sets[v] = crossing.iter().copied().filter(|p| !survivors.contains(p)).collect();
        steps.tick(crossing.len());
    }
    UninterestingSets { sets }
}

/// Uninteresting dipath sets for every vertex of the rooted instance.
pub fn compute_uninteresting_sets(
    rooted: &RootedTree<'_>,
    paths: &[Dipath],
    index: &PathIndex,
    prios: &ArcPriorities,
) -> UninterestingSets {
    upward(&Pass { rooted, paths, index, prios }, &mut Steps::default())
}

fn record_witnesses(
    star: &StarGraph<'_>,
    g: &BipartiteMultigraph,
    prefs: &EdgePreferences,
    m: &crate::bipartite::Matching,
    edge_ok: &dyn Fn(usize) -> bool,
    witness: &mut [Option<Witness>],
    steps: &mut Steps,
) {
    for e in 0..g.edge_count() {
        steps.tick(1);
        let p = star.path_of(e);
        if !edge_ok(e) || m.contains(e) || witness[p].is_some() {
            continue;
        }
        if let Some((x, f)) = dominator(g, prefs, m, e) {
            let arc = star.arc_of(x).expect("dummies have a single edge");
            witness[p] = Some(Witness { arc, by: star.path_of(f) });
        }
    }
}

/// Computes a kernel with a domination witness for every other dipath.
pub fn kernel(
    rooted: &RootedTree<'_>,
    paths: &[Dipath],
    index: &PathIndex,
    prios: &ArcPriorities,
) -> Result<KernelResult, SolveError> {
    let pass = Pass { rooted, paths, index, prios };
    let mut steps = Steps::default();
    let unint = upward(&pass, &mut steps);
    let mut in_k = vec![false; paths.len()];
    let mut witness: Vec<Option<Witness>> = vec![None; paths.len()];

    for &v in rooted.top_down() {
        if index.at_vertex(v).is_empty() {
            continue;
        }
        let star = pass.star(v, &unint.sets, &mut steps);
        let g = star.graph();
        let prefs = pass.preferences(&star, &mut steps);
        let anchor = rooted.father_arc(v).and_then(|a| star.node_of_arc(a));
        let fixed = anchor.and_then(|u| g.incident(u).iter().copied().find(|&e| in_k[star.path_of(e)]));
        let edge_ok = |e: usize| match anchor {
            Some(u) if g.is_incident(e, u) => Some(e) == fixed || unint.contains(v, star.path_of(e)),
            _ => true,
        };
        let m = deferred_acceptance(g, &prefs, Side::Left, &edge_ok, &mut steps);
        if let Some(f) = fixed {
            if !m.contains(f) {
                return Err(SolveError::InternalInvariantViolation(format!(
                    "stable matching at {v} drops fixed dipath {}",
                    star.path_of(f)
                )));
            }
        }
        for e in m.edges() {
            in_k[star.path_of(e)] = true;
        }
        record_witnesses(&star, g, &prefs, &m, &edge_ok, &mut witness, &mut steps);
    }

    let kernel: Vec<PathId> = (0..paths.len()).filter(|&p| in_k[p]).collect();
    let tree = rooted.tree();
    let mut used = vec![false; tree.arc_count()];
    for &p in &kernel {
        witness[p] = None;
        for &a in paths[p].arcs() {
            if std::mem::replace(&mut used[a], true) {
                return Err(SolveError::InternalInvariantViolation(format!("kernel reuses arc {a}")));
            }
        }
    }
    for q in (0..paths.len()).filter(|&q| !in_k[q]) {
        match witness[q] {
            Some(Witness { arc, by }) if in_k[by] && prios.at_least(arc, by, q) => {}
            _ => {
                return Err(SolveError::InternalInvariantViolation(format!("dipath {q} is not dominated")));
            }
        }
    }
    Ok(KernelResult { kernel, witness, steps })
}

/// Roots, indexes, validates the relation and runs [`kernel`].
pub fn solve_kernel(
    tree: &DirectedTree,
    paths: &[Dipath],
    rel: &PriorityRelation,
    root: VertexId,
) -> Result<KernelResult, SolveError> {
    let rooted = tree.root(root)?;
    let index = PathIndex::new(&rooted, paths)?;
    let prios = validate_priorities(tree, paths, &index, rel)?;
    kernel(&rooted, paths, &index, &prios)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> DirectedTree {
        let arcs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        DirectedTree::new(n, &arcs).unwrap()
    }

    #[test]
    fn global_ranking_orders_every_arc() {
        let t = chain(3);
        let paths = vec![t.resolve_dipath(0, 2).unwrap(), t.resolve_dipath(1, 2).unwrap(), t.resolve_dipath(0, 1).unwrap()];
        let r = t.root(0).unwrap();
        let idx = PathIndex::new(&r, &paths).unwrap();
        let prios = validate_priorities(&t, &paths, &idx, &PriorityRelation::GlobalRanking(vec![2, 1, 0])).unwrap();
        assert_eq!(prios.order(0), vec![2, 0]);
        assert_eq!(prios.order(1), vec![1, 0]);
    }

    #[test]
    fn rejects_bad_relations() {
        let t = chain(3);
        let paths = vec![t.resolve_dipath(0, 2).unwrap(), t.resolve_dipath(0, 2).unwrap()];
        let r = t.root(0).unwrap();
        let idx = PathIndex::new(&r, &paths).unwrap();
        let flip = PriorityRelation::PerArc(vec![vec![0, 1], vec![1, 0]]);
        assert!(matches!(
            validate_priorities(&t, &paths, &idx, &flip),
            Err(PriorityError::InconsistentOrder { .. })
        ));
        let short = PriorityRelation::PerArc(vec![vec![0, 1], vec![1]]);
        assert_eq!(validate_priorities(&t, &paths, &idx, &short), Err(PriorityError::IncompleteOrder { arc: 1 }));
        let dup = PriorityRelation::GlobalRanking(vec![0, 0]);
        assert_eq!(validate_priorities(&t, &paths, &idx, &dup), Err(PriorityError::IncompleteRanking));
    }

    #[test]
    fn lone_path_is_the_kernel() {
        let t = chain(3);
        let paths = vec![t.resolve_dipath(0, 2).unwrap()];
        let r = t.root(0).unwrap();
        let idx = PathIndex::new(&r, &paths).unwrap();
        let prios = validate_priorities(&t, &paths, &idx, &PriorityRelation::GlobalRanking(vec![0])).unwrap();
        let u = compute_uninteresting_sets(&r, &paths, &idx, &prios);
        assert!((0..3).all(|v| u.at(v).is_empty()));
        assert_eq!(kernel(&r, &paths, &idx, &prios).unwrap().kernel, vec![0]);
    }

    #[test]
    fn higher_priority_wins_shared_arc() {
        // P1 = 0->1->2, P2 = 3->1->2 share only arc 1->2
        let t = DirectedTree::new(4, &[(0, 1), (1, 2), (3, 1)]).unwrap();
        let paths = vec![t.resolve_dipath(0, 2).unwrap(), t.resolve_dipath(3, 2).unwrap()];
        for root in 0..4 {
            let res = solve_kernel(&t, &paths, &PriorityRelation::GlobalRanking(vec![0, 1]), root).unwrap();
            assert_eq!(res.kernel, vec![0]);
            assert_eq!(res.witness[1], Some(Witness { arc: 1, by: 0 }));
        }
    }

    #[test]
    fn disjoint_paths_form_the_kernel() {
        let t = chain(4);
        let paths = vec![t.resolve_dipath(0, 1).unwrap(), t.resolve_dipath(2, 3).unwrap()];
        let res = solve_kernel(&t, &paths, &PriorityRelation::GlobalRanking(vec![1, 0]), 2).unwrap();
        assert_eq!(res.kernel, vec![0, 1]);
    }
}
