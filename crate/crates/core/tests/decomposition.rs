mod common;

use bandwidthkit::decomposition::{
    caterpillar_view, is_caterpillar, path_decomposition, pathwidth, recursive_path_decomposition,
    simplified_instance,
};
use bandwidthkit::generators::gen_tree_bounded_pw;
use bandwidthkit::Tree;
use proptest::prelude::*;

use common::{trees_up_to, vertex_separation};

/// Bags cover every vertex and edge, and each vertex occupies a contiguous
/// run of bags. Returns the width.
fn check_bags(t: &Tree, bags: &[Vec<usize>]) -> usize {
    let n = t.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (i, bag) in bags.iter().enumerate() {
        for &v in bag {
            first[v] = first[v].min(i);
            last[v] = i;
        }
    }
    for v in 0..n {
        assert!(first[v] != usize::MAX, "vertex {v} missing");
        for bag in &bags[first[v]..=last[v]] {
            assert!(bag.contains(&v), "vertex {v} leaves and returns");
        }
    }
    for (u, v) in t.edges() {
        assert!(bags.iter().any(|b| b.contains(&u) && b.contains(&v)), "edge ({u}, {v}) uncovered");
    }
    bags.iter().map(Vec::len).max().unwrap() - 1
}

#[test]
fn pathwidth_matches_vertex_separation_on_all_small_trees() {
    for t in trees_up_to(10) {
        assert_eq!(pathwidth(&t), vertex_separation(&t), "{:?}", t.edges().collect::<Vec<_>>());
    }
}

#[test]
fn decompositions_are_valid_and_optimal() {
    for t in trees_up_to(9) {
        let bags = path_decomposition(&t).unwrap();
        assert_eq!(check_bags(&t, &bags), pathwidth(&t));
    }
}

#[test]
fn pathwidth_one_trees_are_caterpillars() {
    for t in trees_up_to(10) {
        if pathwidth(&t) <= 1 {
            assert!(is_caterpillar(&t));
        }
    }
}

/// Longest path through every vertex of degree at least 3, by trying all
/// endpoint pairs.
fn longest_backbone(t: &Tree) -> Option<usize> {
    let branch: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let mut best = None;
    for u in 0..t.n() {
        for v in u..t.n() {
            let p = t.path_between(u, v);
            if branch.iter().all(|x| p.contains(x)) {
                best = best.max(Some(p.len()));
            }
        }
    }
    best
}

#[test]
fn backbone_is_a_longest_valid_path() {
    for t in trees_up_to(10) {
        match caterpillar_view(&t) {
            Ok(view) => {
                assert_eq!(Some(view.backbone.len()), longest_backbone(&t));
                let covered = view.backbone.len() + view.strays.iter().map(|s| s.len()).sum::<usize>();
                assert_eq!(covered, t.n());
                for s in &view.strays {
                    assert!(t.has_edge(view.backbone[s.pos - 1], s.vertices[0]));
                }
            }
            Err(_) => assert_eq!(longest_backbone(&t), None),
        }
    }
}

#[test]
fn long_legs_extend_the_backbone() {
    // center 0 with legs of length 1, 2 and 3
    let t = Tree::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    let view = caterpillar_view(&t).unwrap();
    assert_eq!(view.backbone.len(), 6);
    assert_eq!(view.strays.len(), 1);
    assert_eq!(view.strays[0].vertices, vec![1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursive_decomposition_is_valid(n in 1usize..120, p in 1usize..4, seed in any::<u64>()) {
        let t = gen_tree_bounded_pw(n, p, seed).unwrap();
        let pw = pathwidth(&t).max(1);
        let d = recursive_path_decomposition(&t, pw).unwrap();
        d.validate(&t, Some(pw)).unwrap();
        for sub in &d.subtrees {
            let (st, _) = t.induced(&sub.vertices).unwrap();
            prop_assert!(pathwidth(&st) < pw);
        }
        let s = simplified_instance(&t, &d).unwrap();
        prop_assert_eq!(s.tree.n(), t.n());
        prop_assert!(is_caterpillar(&s.tree));
        for (sub, pendant) in d.subtrees.iter().zip(&s.pendants) {
            prop_assert_eq!(sub.vertices.len(), pendant.len());
        }
    }

    #[test]
    fn pathwidth_decomposition_width(n in 1usize..200, p in 1usize..5, seed in any::<u64>()) {
        let t = gen_tree_bounded_pw(n, p, seed).unwrap();
        let bags = path_decomposition(&t).unwrap();
        prop_assert_eq!(check_bags(&t, &bags), pathwidth(&t));
    }
}
