mod common;

use proptest::prelude::*;
use treepath::coloring::{color_dipaths_from, find_conflict};
use treepath::generate::{generate, GenConfig, PriorityMode};
use treepath::oracle::{build_intersection_graph, exact_chromatic, exact_clique_number};
use treepath::{color_dipaths, max_arc_load, PathIndex};

#[test]
fn colors_equal_load_and_chromatic_number() {
    for (seed, g) in common::corpus(600, 12, 14, PriorityMode::None) {
        let res = color_dipaths(&g.tree, &g.paths).unwrap();
        assert_eq!(find_conflict(&g.tree, &g.paths, &res.color), None, "seed {seed}");
        assert_eq!(res.num_colors, res.omega, "seed {seed}");
        let ig = build_intersection_graph(&g.tree, &g.paths);
        assert_eq!(exact_chromatic(&ig).unwrap(), res.omega, "seed {seed}");
        assert_eq!(exact_clique_number(&ig).unwrap(), res.omega, "seed {seed}");
    }
}

#[test]
fn every_start_vertex_works() {
    for (seed, g) in common::corpus(120, 9, 12, PriorityMode::None) {
        for start in 0..g.tree.vertex_count() {
            let res = color_dipaths_from(&g.tree, &g.paths, start).unwrap();
            assert_eq!(find_conflict(&g.tree, &g.paths, &res.color), None, "seed {seed} start {start}");
            assert_eq!(res.num_colors, res.omega);
        }
    }
}

#[test]
fn load_matches_index() {
    let g = generate(&GenConfig::new(3, 20, 30, common::shape(2)));
    let rooted = g.tree.root(0).unwrap();
    let index = PathIndex::new(&rooted, &g.paths).unwrap();
    let direct = (0..g.tree.arc_count())
        .map(|a| g.paths.iter().filter(|p| p.contains_arc(a)).count())
        .max()
        .unwrap_or(0);
    assert_eq!(max_arc_load(&g.tree, &index), direct);
}

proptest! {
    #[test]
    fn proper_with_omega_colors(seed in any::<u64>(), n in 2usize..60, p in 0usize..80, s in 0usize..4, start in 0usize..60) {
        let g = generate(&GenConfig::new(seed, n, p, common::shape(s)));
        let res = color_dipaths_from(&g.tree, &g.paths, start % n).unwrap();
        prop_assert_eq!(find_conflict(&g.tree, &g.paths, &res.color), None);
        prop_assert_eq!(res.num_colors, res.omega);
        prop_assert!(res.color.iter().all(|&c| c < res.omega.max(1)));
    }
}
