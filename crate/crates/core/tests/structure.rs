mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treepath::bipartite::{edge_color_extend, BipartiteMultigraph};
use treepath::coloring::find_conflict;
use treepath::generate::{generate, GenConfig, Shape};
use treepath::oracle::{build_intersection_graph, exact_chromatic};
use treepath::star::{build_star_bipartite, Endpoint};
use treepath::{color_dipaths, PathIndex};

#[test]
fn arc_lists_recount_path_lengths() {
    let g = generate(&GenConfig::new(10, 10, 15, Shape::Random));
    let rooted = g.tree.root(0).unwrap();
    let index = PathIndex::new(&rooted, &g.paths).unwrap();
    let listed: usize = (0..g.tree.arc_count()).map(|a| index.on_arc(a).len()).sum();
    assert_eq!(listed, g.paths.iter().map(|p| p.len()).sum::<usize>());
    for a in 0..g.tree.arc_count() {
        let direct: Vec<usize> = (0..g.paths.len()).filter(|&p| g.paths[p].contains_arc(a)).collect();
        assert_eq!(index.on_arc(a), &direct[..]);
    }
}

#[test]
fn star_degrees_are_arc_loads() {
    for seed in 0..20 {
        // four leaves around vertex 0, dipaths through the center
        let g = generate(&GenConfig::new(seed, 5, 12, Shape::Star));
        let rooted = g.tree.root(0).unwrap();
        let index = PathIndex::new(&rooted, &g.paths).unwrap();
        let through: Vec<usize> = (0..g.paths.len()).filter(|&p| g.paths[p].vertices().contains(&0)).collect();
        let star = build_star_bipartite(&g.tree, &index, &g.paths, 0, &through).unwrap();
        for x in 0..star.graph().vertex_count() {
            match star.label(x) {
                Endpoint::Arc(a) => assert_eq!(star.graph().degree(x), index.on_arc(a).len()),
                Endpoint::Source(_) | Endpoint::Sink(_) => assert_eq!(star.graph().degree(x), 1),
            }
        }
    }
}

#[test]
fn precoloring_three_edges_at_degree_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut g = BipartiteMultigraph::new(8, 8);
    let mut deg = [0usize; 16];
    while g.edge_count() < 40 {
        let (l, r) = (rng.gen_range(0..8), rng.gen_range(0..8));
        if deg[l] < 5 && deg[8 + r] < 5 {
            g.add_edge(l, r, g.edge_count());
            deg[l] += 1;
            deg[8 + r] += 1;
        }
    }
    assert_eq!(g.max_degree(), 5);
    let center = (0..8).find(|&v| g.degree(v) >= 3).unwrap();
    let fixed: Vec<(usize, usize)> = g.incident(center).iter().take(3).zip([4, 0, 2]).map(|(&e, c)| (e, c)).collect();
    let col = edge_color_extend(&g, 5, &fixed).unwrap();
    for v in 0..g.vertex_count() {
        let mut seen: Vec<usize> = g.incident(v).iter().map(|&e| col[e]).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), g.degree(v));
    }
    assert!(col.iter().all(|&c| c < 5));
    assert!(fixed.iter().all(|&(e, c)| col[e] == c));
}

#[test]
fn chromatic_number_at_oracle_limit() {
    for seed in 0..40 {
        let g = generate(&GenConfig::new(seed, 12, 16, common::shape(seed as usize)));
        let res = color_dipaths(&g.tree, &g.paths).unwrap();
        assert_eq!(find_conflict(&g.tree, &g.paths, &res.color), None);
        assert_eq!(res.num_colors, exact_chromatic(&build_intersection_graph(&g.tree, &g.paths)).unwrap());
    }
}
