//! Seeded random instances.
//!
//! Arcs are oriented at random first; each dipath is then grown from a peak
//! vertex by walking backwards along entering arcs and forwards along leaving
//! arcs, so it respects the orientation by construction.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::PriorityRelation;
use crate::tree::{Dipath, DirectedTree, PathId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Chain,
    Star,
    /// Vertex `i` hangs from a uniform vertex among `0..i`.
    Random,
    /// A spine with legs hanging off uniformly random spine vertices.
    Caterpillar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorityMode {
    None,
    Global,
    /// Consistent per-arc orders that no single ranking need explain.
    PerArc,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub vertices: usize,
    pub paths: usize,
    pub shape: Shape,
    pub priority: PriorityMode,
    /// Probability of extending a walk by one more arc.
    pub extend: f64,
    /// Orient every arc away from vertex 0 instead of at random.
    pub outward: bool,
}

impl GenConfig {
    pub fn new(seed: u64, vertices: usize, paths: usize, shape: Shape) -> Self {
        Self { seed, vertices, paths, shape, priority: PriorityMode::None, extend: 0.8, outward: false }
    }

    pub fn priority(mut self, mode: PriorityMode) -> Self {
        self.priority = mode;
        self
    }

    pub fn extend(mut self, p: f64) -> Self {
        self.extend = p;
        self
    }

    pub fn outward(mut self) -> Self {
        self.outward = true;
        self
    }
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub tree: DirectedTree,
    pub paths: Vec<Dipath>,
    pub priority: Option<PriorityRelation>,
}

fn edges(shape: Shape, n: usize, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    match shape {
        Shape::Chain => (1..n).map(|i| (i - 1, i)).collect(),
        Shape::Star => (1..n).map(|i| (0, i)).collect(),
        Shape::Random => (1..n).map(|i| (rng.gen_range(0..i), i)).collect(),
        Shape::Caterpillar => {
            let spine = n.div_ceil(2);
            let mut e: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            e.extend((spine..n).map(|i| (rng.gen_range(0..spine), i)));
            e
        }
    }
}

fn walk(tree: &DirectedTree, start: VertexId, forward: bool, extend: f64, rng: &mut ChaCha8Rng) -> Vec<VertexId> {
    let mut out = Vec::new();
    let mut cur = start;
    while rng.gen_bool(extend) {
        let next: Vec<VertexId> =
            tree.incident(cur).iter().filter(|i| i.outgoing == forward).map(|i| i.neighbor).collect();
        match next.choose(rng) {
            Some(&w) => {
                out.push(w);
                cur = w;
            }
            None => break,
        }
    }
    out
}

fn sample_path(tree: &DirectedTree, extend: f64, rng: &mut ChaCha8Rng) -> Dipath {
    loop {
        let peak = rng.gen_range(0..tree.vertex_count());
        let mut vertices = walk(tree, peak, false, extend, rng);
        vertices.reverse();
        vertices.push(peak);
        vertices.extend(walk(tree, peak, true, extend, rng));
        if vertices.len() >= 2 {
            if let Ok(p) = tree.dipath(vertices) {
                return p;
            }
        }
    }
}

fn per_arc_orders(tree: &DirectedTree, paths: &[Dipath], rng: &mut ChaCha8Rng) -> Vec<Vec<PathId>> {
    let rooted = tree.root(0).expect("vertex 0 exists");
    let mut on_arc: Vec<Vec<PathId>> = vec![Vec::new(); tree.arc_count()];
    for (id, p) in paths.iter().enumerate() {
        for &a in p.arcs() {
            on_arc[a].push(id);
        }
    }
    let mut orders: Vec<Option<Vec<PathId>>> = vec![None; tree.arc_count()];
    for &v in rooted.top_down() {
        let Some(b) = rooted.father_arc(v) else { continue };
        let y = rooted.father(v).expect("non-root");
        // group by the other arc used at the upper end
        let mut groups: Vec<(Option<usize>, Vec<PathId>)> = Vec::new();
        for &id in &on_arc[b] {
            let p = &paths[id];
            let pos = p.vertices().iter().position(|&w| w == y).expect("arc end");
            let other = [p.arc_into(pos), p.arc_out_of(pos)].into_iter().flatten().find(|&a| a != b);
            match groups.iter_mut().find(|(k, _)| *k == other) {
                Some((_, g)) => g.push(id),
                None => groups.push((other, vec![id])),
            }
        }
        let mut seqs: Vec<Vec<PathId>> = groups
            .into_iter()
            .map(|(other, mut g)| {
                match other.and_then(|c| orders[c].as_ref()) {
                    Some(fixed) => {
                        let rank: HashMap<PathId, usize> = fixed.iter().enumerate().map(|(r, &p)| (p, r)).collect();
                        g.sort_by_key(|id| rank[id]);
                    }
                    None => g.shuffle(rng),
                }
                g.reverse();
                g
            })
            .collect();
        let mut merged = Vec::with_capacity(on_arc[b].len());
        let mut left: usize = seqs.iter().map(Vec::len).sum();
        while left > 0 {
            let mut pick = rng.gen_range(0..left);
            for s in seqs.iter_mut() {
                if pick < s.len() {
                    merged.push(s.pop().expect("non-empty"));
                    break;
                }
                pick -= s.len();
            }
            left -= 1;
        }
        orders[b] = Some(merged);
    }
    orders.into_iter().map(|o| o.unwrap_or_default()).collect()
}

/// Builds the instance described by `cfg`; equal configurations give equal
/// instances. `extend` must lie in `(0, 1]`.
pub fn generate(cfg: &GenConfig) -> Generated {
    assert!(cfg.extend > 0.0 && cfg.extend <= 1.0, "extend must lie in (0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.vertices.max(1);
    let arcs: Vec<_> = edges(cfg.shape, n, &mut rng)
        .into_iter()
        .map(|(u, v)| if cfg.outward || rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    let tree = DirectedTree::new(n, &arcs).expect("generated edges form a tree");
    let paths: Vec<Dipath> =
        if n < 2 { Vec::new() } else { (0..cfg.paths).map(|_| sample_path(&tree, cfg.extend, &mut rng)).collect() };
    let priority = match cfg.priority {
        PriorityMode::None => None,
        PriorityMode::Global => {
            let mut order: Vec<PathId> = (0..paths.len()).collect();
            order.shuffle(&mut rng);
            Some(PriorityRelation::GlobalRanking(order))
        }
        PriorityMode::PerArc => Some(PriorityRelation::PerArc(per_arc_orders(&tree, &paths, &mut rng))),
    };
    Generated { tree, paths, priority }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::validate_priorities;
    use crate::tree::PathIndex;

    #[test]
    fn deterministic() {
        let cfg = GenConfig::new(7, 30, 40, Shape::Random).priority(PriorityMode::PerArc);
        let (a, b) = (generate(&cfg), generate(&cfg));
        assert_eq!(a.tree.arcs(), b.tree.arcs());
        assert_eq!(a.paths, b.paths);
        assert_eq!(a.priority, b.priority);
    }

    #[test]
    fn per_arc_orders_are_consistent() {
        for seed in 0..200 {
            for shape in [Shape::Chain, Shape::Star, Shape::Random, Shape::Caterpillar] {
                let g = generate(&GenConfig::new(seed, 9, 12, shape).priority(PriorityMode::PerArc));
                let rooted = g.tree.root(0).unwrap();
                let index = PathIndex::new(&rooted, &g.paths).unwrap();
                validate_priorities(&g.tree, &g.paths, &index, g.priority.as_ref().unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn single_vertex_has_no_paths() {
        let g = generate(&GenConfig::new(0, 1, 5, Shape::Random));
        assert!(g.paths.is_empty());
    }
}
