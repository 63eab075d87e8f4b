//! Minimum coloring of dipaths: dipaths sharing an arc get distinct colors,
//! and exactly ω colors are used, ω being the maximum arc load.

use crate::bipartite::edge_color_extend_counted;
use crate::error::SolveError;
use crate::star::StarGraph;
use crate::tree::{Dipath, DirectedTree, PathIndex, VertexId};
use crate::Steps;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    /// Color of each dipath, indexed by dipath id.
    pub color: Vec<usize>,
    pub num_colors: usize,
    pub omega: usize,
    pub steps: Steps,
}

/// Maximum number of dipaths sharing an arc; 0 without dipaths.
pub fn max_arc_load(tree: &DirectedTree, index: &PathIndex) -> usize {
    (0..tree.arc_count()).map(|a| index.on_arc(a).len()).max().unwrap_or(0)
}

pub fn color_dipaths(tree: &DirectedTree, paths: &[Dipath]) -> Result<ColoringResult, SolveError> {
    color_dipaths_from(tree, paths, 0)
}

/// Colors star by star in breadth-first order from `start`. When a star is
/// reached, the dipaths colored so far all use the arc back to the parent,
/// so their edges share one vertex of the star graph and can be kept fixed.
pub fn color_dipaths_from(tree: &DirectedTree, paths: &[Dipath], start: VertexId) -> Result<ColoringResult, SolveError> {
    let rooted = tree.root(start)?;
    let index = PathIndex::new(&rooted, paths)?;
    let mut steps = Steps::default();
    steps.tick(paths.iter().map(|p| 2 * p.len() + 1).sum());
    let omega = max_arc_load(tree, &index);
    steps.tick(tree.arc_count());

    let mut color: Vec<Option<usize>> = vec![None; paths.len()];
    for &v in rooted.top_down() {
        let visits = index.at_vertex(v);
        if visits.is_empty() {
            continue;
        }
        let star = StarGraph::from_visits(tree, paths, v, visits.iter().copied(), &mut steps);
        let fixed: Vec<(usize, usize)> = (0..star.edge_count())
            .filter_map(|e| color[star.path_of(e)].map(|c| (e, c)))
            .collect();
        steps.tick(star.edge_count());
        let local = edge_color_extend_counted(star.graph(), omega, &fixed, &mut steps)?;
        for (e, c) in local.into_iter().enumerate() {
            let slot = &mut color[star.path_of(e)];
            match *slot {
                Some(old) if old != c => {
                    return Err(SolveError::InternalInvariantViolation(format!(
                        "dipath {} recolored at vertex {v}",
                        star.path_of(e)
                    )))
                }
                _ => *slot = Some(c),
            }
        }
    }

    let color: Vec<usize> = color.into_iter().map(|c| c.expect("every dipath passes through a vertex")).collect();
    let num_colors = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(ColoringResult { color, num_colors, omega, steps })
}

/// First arc carrying two dipaths of the same color, if any.
pub fn find_conflict(tree: &DirectedTree, paths: &[Dipath], color: &[usize]) -> Option<(usize, usize, usize)> {
    let mut seen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); tree.arc_count()];
    for (id, p) in paths.iter().enumerate() {
        for &a in p.arcs() {
            if let Some(&(_, other)) = seen[a].iter().find(|(c, _)| *c == color[id]) {
                return Some((a, other, id));
            }
            seen[a].push((color[id], id));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_collection() {
        let t = DirectedTree::new(2, &[(0, 1)]).unwrap();
        let r = color_dipaths(&t, &[]).unwrap();
        assert_eq!((r.num_colors, r.omega), (0, 0));
    }

    #[test]
    fn disjoint_paths_share_a_color() {
        let t = DirectedTree::new(3, &[(0, 1), (2, 1)]).unwrap();
        let paths = vec![t.resolve_dipath(0, 1).unwrap(), t.resolve_dipath(2, 1).unwrap()];
        let r = color_dipaths(&t, &paths).unwrap();
        assert_eq!(r.color, vec![0, 0]);
        assert_eq!(r.num_colors, 1);
    }

    #[test]
    fn k_copies_need_k_colors() {
        let t = DirectedTree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let paths = vec![t.resolve_dipath(0, 3).unwrap(); 5];
        let r = color_dipaths(&t, &paths).unwrap();
        assert_eq!(r.num_colors, 5);
        let mut c = r.color.clone();
        c.sort_unstable();
        assert_eq!(c, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn conflict_names_the_arc() {
        let t = DirectedTree::new(3, &[(0, 1), (1, 2)]).unwrap();
        let paths = vec![t.resolve_dipath(0, 2).unwrap(), t.resolve_dipath(1, 2).unwrap()];
        assert_eq!(find_conflict(&t, &paths, &[0, 0]), Some((1, 0, 1)));
        assert_eq!(find_conflict(&t, &paths, &[0, 1]), None);
    }
}
