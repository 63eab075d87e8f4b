//! Proper edge coloring of bipartite multigraphs with Δ colors, extending a
//! precoloring of edges around one vertex.

use std::collections::HashSet;

use super::graph::{BipartiteMultigraph, EdgeId, NodeId};
use crate::error::BipartiteError;
use crate::Steps;

/// Set of free colors supporting O(1) pick, insert and remove.
#[derive(Debug, Clone)]
struct FreeColors {
    items: Vec<usize>,
    pos: Vec<usize>,
}

impl FreeColors {
    fn full(k: usize) -> Self {
        Self { items: (0..k).collect(), pos: (0..k).collect() }
    }

    fn contains(&self, c: usize) -> bool {
        let p = self.pos[c];
        p < self.items.len() && self.items[p] == c
    }

    fn remove(&mut self, c: usize) {
        let p = self.pos[c];
        let last = *self.items.last().expect("removing from an empty free set");
        self.items[p] = last;
        self.pos[last] = p;
        self.items.pop();
    }

    fn insert(&mut self, c: usize) {
        self.pos[c] = self.items.len();
        self.items.push(c);
    }

    fn any(&self) -> Option<usize> {
        self.items.last().copied()
    }
}

/// Color bookkeeping at one vertex. Degree-one vertices (the dummy endpoints
/// of the star reduction) carry no table.
#[derive(Debug, Clone)]
enum Palette {
    Single(Option<(usize, EdgeId)>),
    Dense { at: Vec<Option<EdgeId>>, free: FreeColors },
}

impl Palette {
    fn edge_with(&self, c: usize) -> Option<EdgeId> {
        match self {
            Palette::Single(slot) => slot.filter(|&(k, _)| k == c).map(|(_, e)| e),
            Palette::Dense { at, .. } => at[c],
        }
    }

    fn is_free(&self, c: usize) -> bool {
        self.edge_with(c).is_none()
    }

    fn some_free(&self) -> usize {
        match self {
            Palette::Single(None) => 0,
            Palette::Single(Some((k, _))) => usize::from(*k == 0),
            Palette::Dense { free, .. } => free.any().expect("vertex saturated while an edge is uncolored"),
        }
    }

    fn set(&mut self, c: usize, e: EdgeId) {
        match self {
            Palette::Single(slot) => *slot = Some((c, e)),
            Palette::Dense { at, free } => {
                at[c] = Some(e);
                if free.contains(c) {
                    free.remove(c);
                }
            }
        }
    }

    fn clear(&mut self, c: usize) {
        match self {
            Palette::Single(slot) => {
                if matches!(slot, Some((k, _)) if *k == c) {
                    *slot = None;
                }
            }
            Palette::Dense { at, free } => {
                if at[c].take().is_some() {
                    free.insert(c);
                }
            }
        }
    }
}

/// Colors every edge of `g` with `max_degree(g)` colors using alternating
/// two-color chain exchanges.
pub(crate) fn kempe_coloring(g: &BipartiteMultigraph, steps: &mut Steps) -> Vec<usize> {
    let k = g.max_degree();
    let mut table: Vec<Palette> = (0..g.vertex_count())
        .map(|v| {
            if g.degree(v) <= 1 {
                Palette::Single(None)
            } else {
                steps.tick(k);
                Palette::Dense { at: vec![None; k], free: FreeColors::full(k) }
            }
        })
        .collect();
    let mut color = vec![usize::MAX; g.edge_count()];
    let mut chain: Vec<EdgeId> = Vec::new();

    for e in 0..g.edge_count() {
        steps.tick(1);
        let (x, y) = g.endpoints(e);
        let alpha = table[x].some_free();
        let beta = table[y].some_free();
        let c = if table[y].is_free(alpha) {
            alpha
        } else if table[x].is_free(beta) {
            beta
        } else {
            // alpha is taken at y and beta is free there; swap the
            // alpha/beta chain leaving y so alpha becomes free at y. The
            // chain cannot reach x since x misses alpha and lies on the
            // opposite side.
            chain.clear();
            let (mut cur, mut c) = (y, alpha);
            while let Some(f) = table[cur].edge_with(c) {
                chain.push(f);
                cur = g.other_end(f, cur);
                c = if c == alpha { beta } else { alpha };
            }
            steps.tick(chain.len());
            for &f in &chain {
                let (a, b) = g.endpoints(f);
                table[a].clear(color[f]);
                table[b].clear(color[f]);
            }
            for &f in &chain {
                let (a, b) = g.endpoints(f);
                let swapped = if color[f] == alpha { beta } else { alpha };
                color[f] = swapped;
                table[a].set(swapped, f);
                table[b].set(swapped, f);
            }
            alpha
        };
        color[e] = c;
        table[x].set(c, e);
        table[y].set(c, e);
    }
    color
}

fn check_precoloring(g: &BipartiteMultigraph, palette: usize, precolored: &[(EdgeId, usize)]) -> Result<(), BipartiteError> {
    let mut seen_colors = HashSet::new();
    let mut seen_edges = HashSet::new();
    for &(e, c) in precolored {
        g.check_edge(e)?;
        if c >= palette || !seen_colors.insert(c) || !seen_edges.insert(e) {
            return Err(BipartiteError::PrecoloringConflict { color: c });
        }
    }
    if let Some(&(first, _)) = precolored.first() {
        let (a, b) = g.endpoints(first);
        let around = |v: NodeId| precolored.iter().all(|&(e, _)| g.is_incident(e, v));
        if !around(a) && !around(b) {
            return Err(BipartiteError::PrecoloringNotStarShaped);
        }
    }
    Ok(())
}

/// Proper edge coloring with colors `0..palette` that keeps every
/// precolored edge's color. Precolored edges must share one endpoint and
/// carry distinct colors. Returns the color of each edge, indexed by id.
pub fn edge_color_extend(
    g: &BipartiteMultigraph,
    palette: usize,
    precolored: &[(EdgeId, usize)],
) -> Result<Vec<usize>, BipartiteError> {
    let mut steps = Steps::default();
    edge_color_extend_counted(g, palette, precolored, &mut steps)
}

pub(crate) fn edge_color_extend_counted(
    g: &BipartiteMultigraph,
    palette: usize,
    precolored: &[(EdgeId, usize)],
    steps: &mut Steps,
) -> Result<Vec<usize>, BipartiteError> {
    let max_degree = g.max_degree();
    if palette < max_degree {
        return Err(BipartiteError::PaletteTooSmall { palette, max_degree });
    }
    check_precoloring(g, palette, precolored)?;
    let local = kempe_coloring(g, steps);

    // Precolored edges sit around one vertex, so their local colors are
    // distinct; a bijection of the palette sending them to their required
    // colors keeps the coloring proper.
    let mut map: Vec<Option<usize>> = vec![None; max_degree];
    let mut taken: HashSet<usize> = HashSet::with_capacity(precolored.len());
    for &(e, c) in precolored {
        map[local[e]] = Some(c);
        taken.insert(c);
    }
    let mut next = 0;
    for slot in map.iter_mut().filter(|s| s.is_none()) {
        while taken.contains(&next) {
            next += 1;
        }
        *slot = Some(next);
        next += 1;
    }
    steps.tick(max_degree + precolored.len());
    Ok(local.into_iter().map(|c| map[c].expect("every local color mapped")).collect())
}

/// Whether `colors` is a proper edge coloring of `g`.
pub fn is_proper_edge_coloring(g: &BipartiteMultigraph, colors: &[usize]) -> bool {
    colors.len() == g.edge_count()
        && (0..g.vertex_count()).all(|v| {
            let mut seen = HashSet::new();
            g.incident(v).iter().all(|&e| seen.insert(colors[e]))
        })
}
