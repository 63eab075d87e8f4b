mod common;

use proptest::prelude::*;
use treepath::generate::{generate, GenConfig, PriorityMode};
use treepath::multicut::{compute_bad_sets, solve_multicut};
use treepath::oracle::{build_intersection_graph, exact_max_disjoint, exact_max_stable, exact_min_multicut};
use treepath::{Dipath, MulticutCertificate, PathIndex};

fn check_certificate(paths: &[Dipath], cert: &MulticutCertificate) {
    assert_eq!(cert.stable_set.len(), cert.cut.len());
    for (i, &p) in cert.stable_set.iter().enumerate() {
        for &q in &cert.stable_set[i + 1..] {
            assert!(!paths[p].arcs().iter().any(|a| paths[q].contains_arc(*a)), "{p} and {q} share an arc");
        }
    }
    for (id, p) in paths.iter().enumerate() {
        assert!(cert.cut.iter().any(|&a| p.contains_arc(a)), "dipath {id} uncut");
    }
}

#[test]
fn packing_equals_cut_equals_oracles() {
    for (seed, g) in common::corpus(600, 12, 14, PriorityMode::None) {
        let ig = build_intersection_graph(&g.tree, &g.paths);
        let alpha = exact_max_stable(&ig).unwrap();
        let cut = exact_min_multicut(&g.tree, &g.paths).unwrap().len();
        assert_eq!(alpha, cut, "seed {seed}");
        let cert = solve_multicut(&g.tree, &g.paths, 0).unwrap();
        check_certificate(&g.paths, &cert);
        assert_eq!(cert.stable_set.len(), alpha, "seed {seed}");
    }
}

#[test]
fn every_root_gives_an_optimal_certificate() {
    for (seed, g) in common::corpus(150, 9, 12, PriorityMode::None) {
        let ig = build_intersection_graph(&g.tree, &g.paths);
        let alpha = exact_max_stable(&ig).unwrap();
        for root in 0..g.tree.vertex_count() {
            let cert = solve_multicut(&g.tree, &g.paths, root).unwrap();
            check_certificate(&g.paths, &cert);
            assert_eq!(cert.stable_set.len(), alpha, "seed {seed} root {root}");
        }
    }
}

/// A dipath over the father arc of `v` is bad exactly when the dipaths
/// lying inside the subtree and avoiding its arcs pack fewer than all
/// dipaths lying inside the subtree.
#[test]
fn bad_sets_match_subtree_packings() {
    for (seed, g) in common::corpus(300, 10, 12, PriorityMode::None) {
        for root in [0, g.tree.vertex_count() - 1] {
            let rooted = g.tree.root(root).unwrap();
            let index = PathIndex::new(&rooted, &g.paths).unwrap();
            let bad = compute_bad_sets(&rooted, &g.paths, &index);
            let mut inside = vec![false; g.tree.vertex_count()];
            for v in rooted.bottom_up() {
                inside[v] = true;
                let mut stack = vec![v];
                let mut sub = vec![false; g.tree.vertex_count()];
                while let Some(x) = stack.pop() {
                    sub[x] = true;
                    stack.extend(rooted.children(x).iter().copied());
                }
                let Some(up) = rooted.father_arc(v) else { continue };
                let within: Vec<usize> = (0..g.paths.len())
                    .filter(|&p| g.paths[p].vertices().iter().all(|&x| sub[x]) && !g.paths[p].contains_arc(up))
                    .collect();
                let alpha = exact_max_disjoint(&g.paths, &within).unwrap();
                for &p in index.crossing_father_arc(v) {
                    let avoiding: Vec<usize> = within
                        .iter()
                        .copied()
                        .filter(|&q| !g.paths[q].arcs().iter().any(|a| g.paths[p].contains_arc(*a)))
                        .collect();
                    let expect = exact_max_disjoint(&g.paths, &avoiding).unwrap() < alpha;
                    assert_eq!(bad.contains(v, p), expect, "seed {seed} root {root} vertex {v} dipath {p}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn certificate_is_valid(seed in any::<u64>(), n in 2usize..60, p in 0usize..80, s in 0usize..4, root in 0usize..60) {
        let g = generate(&GenConfig::new(seed, n, p, common::shape(s)));
        let cert = solve_multicut(&g.tree, &g.paths, root % n).unwrap();
        check_certificate(&g.paths, &cert);
    }

    #[test]
    fn matches_oracle_on_small(seed in any::<u64>(), n in 2usize..12, p in 0usize..14, s in 0usize..4) {
        let g = generate(&GenConfig::new(seed, n, p, common::shape(s)));
        let cert = solve_multicut(&g.tree, &g.paths, 0).unwrap();
        prop_assert_eq!(cert.cut.len(), exact_min_multicut(&g.tree, &g.paths).unwrap().len());
    }
}
