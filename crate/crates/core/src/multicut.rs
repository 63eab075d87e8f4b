//! Maximum set of arc-disjoint dipaths together with a minimum multicut of
//! the same size.
//!
//! The upward pass computes, for every vertex `v`, the *bad* dipaths among
//! those crossing the arc to `v`'s father: taking one of them lowers the
//! best packing inside the subtree of `v`. The downward pass then fixes a
//! matching and a vertex cover at each star, parent before child.

use crate::bipartite::{
    max_matching_counted, max_matching_masked, min_cover_with_anchor_counted, min_vertex_cover_counted,
    missable_vertices, BipartiteMultigraph, Mask, Matching, NodeId, VertexCover,
};
use crate::error::SolveError;
use crate::star::StarGraph;
use crate::tree::{ArcId, Dipath, PathId, PathIndex, RootedTree, VertexId, Visit};
use crate::Steps;

/// Bad dipaths per vertex, each list sorted by id; empty at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadSets {
    sets: Vec<Vec<PathId>>,
}

impl BadSets {
    pub fn at(&self, v: VertexId) -> &[PathId] {
        &self.sets[v]
    }

    pub fn contains(&self, v: VertexId, path: PathId) -> bool {
        self.sets[v].binary_search(&path).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticutCertificate {
    /// Pairwise arc-disjoint dipaths, sorted by id.
    pub stable_set: Vec<PathId>,
    /// Arcs meeting every dipath, sorted by id.
    pub cut: Vec<ArcId>,
    pub steps: Steps,
}

/// Arc of `p` at the visit's vertex that leads to a child of that vertex.
fn child_arcs(rooted: &RootedTree<'_>, p: &Dipath, visit: Visit) -> impl Iterator<Item = ArcId> {
    let up = rooted.father_arc(p.vertices()[visit.pos]);
    [p.arc_into(visit.pos), p.arc_out_of(visit.pos)].into_iter().flatten().filter(move |&a| Some(a) != up)
}

fn uses_father_arc(rooted: &RootedTree<'_>, p: &Dipath, visit: Visit) -> bool {
    let up = rooted.father_arc(p.vertices()[visit.pos]);
    up.is_some() && (p.arc_into(visit.pos) == up || p.arc_out_of(visit.pos) == up)
}

/// Visits at `v` whose dipath is not bad at any child arc it uses.
fn eligible<'a>(
    rooted: &'a RootedTree<'_>,
    paths: &'a [Dipath],
    index: &'a PathIndex,
    bad: &'a [Vec<PathId>],
    v: VertexId,
) -> impl Iterator<Item = Visit> + 'a {
    index.at_vertex(v).iter().copied().filter(move |&visit| {
        child_arcs(rooted, &paths[visit.path], visit)
            .all(|a| bad[rooted.lower_end(a)].binary_search(&visit.path).is_err())
    })
}

fn upward(rooted: &RootedTree<'_>, paths: &[Dipath], index: &PathIndex, steps: &mut Steps) -> BadSets {
    let tree = rooted.tree();
    let mut bad: Vec<Vec<PathId>> = vec![Vec::new(); tree.vertex_count()];
    for v in rooted.bottom_up() {
        let crossing = index.crossing_father_arc(v);
        if crossing.is_empty() {
            continue;
        }
        // star of v without the father arc
        let below: Vec<Visit> = eligible(rooted, paths, index, &bad, v)
            .filter(|&visit| !uses_father_arc(rooted, &paths[visit.path], visit))
            .collect();
        let star = StarGraph::from_visits(tree, paths, v, below, steps);
        let m = max_matching_masked(star.graph(), &Mask::all(), steps);
        let missable = missable_vertices(star.graph(), &m, &Mask::all(), steps);

        let at_v = index.at_vertex(v);
        let mut set = Vec::new();
        for &path in crossing {
            steps.tick(1);
            let visit = at_v[at_v.binary_search_by_key(&path, |x| x.path).expect("crossing dipaths visit v")];
            let p = &paths[path];
            let is_bad = match child_arcs(rooted, p, visit).next() {
                // ends at v
                None => false,
                Some(a) => {
                    bad[rooted.lower_end(a)].binary_search(&path).is_ok()
                        || star.node_of_arc(a).is_some_and(|x| !missable[x])
                }
            };
            if is_bad {
                set.push(path);
            }
        }
        bad[v] = set;
    }
    BadSets { sets: bad }
}

/// Bad dipath sets for every vertex of the rooted instance.
pub fn compute_bad_sets(rooted: &RootedTree<'_>, paths: &[Dipath], index: &PathIndex) -> BadSets {
    upward(rooted, paths, index, &mut Steps::default())
}

/// Arc for a cover vertex; a dummy is replaced by its only neighbor.
fn cover_arc(star: &StarGraph<'_>, v: NodeId) -> ArcId {
    star.arc_of(v).unwrap_or_else(|| {
        let g = star.graph();
        let e = g.incident(v)[0];
        star.arc_of(g.other_end(e, v)).expect("every star edge has a real endpoint")
    })
}

struct Downward<'a> {
    paths: &'a [Dipath],
    in_s: Vec<bool>,
    in_c: Vec<bool>,
    added_s: usize,
    added_c: usize,
}

impl Downward<'_> {
    fn take(&mut self, star: &StarGraph<'_>, m: &Matching, cover: &VertexCover, skip: Option<NodeId>) -> Result<(), SolveError> {
        for e in m.edges() {
            let p = star.path_of(e);
            if !self.in_s[p] {
                self.in_s[p] = true;
                self.added_s += 1;
            }
        }
        for &x in cover.nodes() {
            if Some(x) == skip {
                continue;
            }
            let a = cover_arc(star, x);
            if self.in_c[a] {
                return Err(SolveError::InternalInvariantViolation(format!(
                    "arc {a} selected twice at vertex {}",
                    star.center()
                )));
            }
            self.in_c[a] = true;
            self.added_c += 1;
        }
        Ok(())
    }

    fn check_cover(g: &BipartiteMultigraph, m: &Matching, cover: &VertexCover, v: VertexId) -> Result<(), SolveError> {
        if cover.len() != m.len() || !cover.covers_all(g) {
            return Err(SolveError::InternalInvariantViolation(format!(
                "star at {v}: cover of size {} against matching of size {}",
                cover.len(),
                m.len()
            )));
        }
        Ok(())
    }
}

/// Runs both passes and returns a packing and a multicut of equal size.
pub fn multicut(rooted: &RootedTree<'_>, paths: &[Dipath], index: &PathIndex) -> Result<MulticutCertificate, SolveError> {
    let tree = rooted.tree();
    let mut steps = Steps::default();
    let bad = upward(rooted, paths, index, &mut steps);
    let mut run = Downward {
        paths,
        in_s: vec![false; paths.len()],
        in_c: vec![false; tree.arc_count()],
        added_s: 0,
        added_c: 0,
    };

    for &v in rooted.top_down() {
        if index.at_vertex(v).is_empty() {
            continue;
        }
        let Some(up) = rooted.father_arc(v) else {
            let star = StarGraph::from_visits(tree, paths, v, eligible(rooted, paths, index, &bad.sets, v), &mut steps);
            let m = max_matching_counted(star.graph(), None, &mut steps)?;
            let cover = min_vertex_cover_counted(star.graph(), &m, &mut steps);
            Downward::check_cover(star.graph(), &m, &cover, v)?;
            run.take(&star, &m, &cover, None)?;
            continue;
        };
        let fixed = index.crossing_father_arc(v).iter().copied().find(|&p| run.in_s[p]);
        match fixed {
            Some(f) => {
                let star = StarGraph::from_visits(tree, paths, v, eligible(rooted, paths, index, &bad.sets, v), &mut steps);
                let anchor = star.node_of_arc(up).expect("the fixed dipath uses the father arc");
                let fe = star
                    .graph()
                    .incident(anchor)
                    .iter()
                    .copied()
                    .find(|&e| star.path_of(e) == f)
                    .ok_or_else(|| SolveError::InternalInvariantViolation(format!("fixed dipath {f} is bad below {v}")))?;
                let m = max_matching_counted(star.graph(), Some(fe), &mut steps)?;
                let cover = min_cover_with_anchor_counted(star.graph(), &m, anchor, &mut steps)?;
                Downward::check_cover(star.graph(), &m, &cover, v)?;
                run.take(&star, &m, &cover, Some(anchor))?;
            }
            None => {
                // drop the good dipaths over the father arc; the bad ones stay
                // to be covered but may not be matched
                let keep: Vec<Visit> = eligible(rooted, paths, index, &bad.sets, v)
                    .filter(|&visit| {
                        !uses_father_arc(rooted, &paths[visit.path], visit) || bad.contains(v, visit.path)
                    })
                    .collect();
                let star = StarGraph::from_visits(tree, paths, v, keep, &mut steps);
                let anchor = star.node_of_arc(up);
                let m = max_matching_masked(
                    star.graph(),
                    &Mask { edge_ok: &|_| true, vertex_ok: &|x| Some(x) != anchor },
                    &mut steps,
                );
                let cover = min_vertex_cover_counted(star.graph(), &m, &mut steps);
                Downward::check_cover(star.graph(), &m, &cover, v)?;
                run.take(&star, &m, &cover, None)?;
            }
        }
    }

    let stable_set: Vec<PathId> = (0..paths.len()).filter(|&p| run.in_s[p]).collect();
    let cut: Vec<ArcId> = (0..tree.arc_count()).filter(|&a| run.in_c[a]).collect();
    if stable_set.len() != cut.len() || run.added_s != run.added_c {
        return Err(SolveError::InternalInvariantViolation(format!(
            "packing of {} dipaths against {} cut arcs",
            stable_set.len(),
            cut.len()
        )));
    }
    let mut used = vec![false; tree.arc_count()];
    for &p in &stable_set {
        for &a in run.paths[p].arcs() {
            if std::mem::replace(&mut used[a], true) {
                return Err(SolveError::InternalInvariantViolation(format!("packing reuses arc {a}")));
            }
        }
    }
    if let Some(p) = (0..paths.len()).find(|&p| !paths[p].arcs().iter().any(|&a| run.in_c[a])) {
        return Err(SolveError::InternalInvariantViolation(format!("dipath {p} is not cut")));
    }
    Ok(MulticutCertificate { stable_set, cut, steps })
}

/// Roots `tree` at `root`, indexes `paths` and runs [`multicut`].
pub fn solve_multicut(
    tree: &crate::DirectedTree,
    paths: &[Dipath],
    root: VertexId,
) -> Result<MulticutCertificate, SolveError> {
    let rooted = tree.root(root)?;
    let index = PathIndex::new(&rooted, paths)?;
    multicut(&rooted, paths, &index)
}
