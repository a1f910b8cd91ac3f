mod common;

use bandwidthkit::generators::{gen_caterpillar, gen_tree_bounded_pw, StrayProfile};
use bandwidthkit::oracles::{
    exact_bandwidth_bruteforce, exact_bandwidth_bruteforce_with, local_density, lower_bounds_report,
    saxe_decide, saxe_decide_with, Guards,
};
use bandwidthkit::{Error, Tree};
use proptest::prelude::*;

use common::{bandwidth_by_permutations, density_by_subsets, layout_width, path, trees_up_to};

#[test]
fn branch_and_bound_matches_permutations() {
    for t in trees_up_to(7) {
        let (bw, layout) = exact_bandwidth_bruteforce(&t).unwrap();
        assert_eq!(bw, bandwidth_by_permutations(&t));
        assert_eq!(layout_width(&t, layout.ranks()), bw);
    }
}

#[test]
fn density_matches_subsets_up_to_nine() {
    for t in trees_up_to(9).iter().filter(|t| t.n() >= 2) {
        let (d, w) = local_density(t).unwrap();
        assert_eq!(d, density_by_subsets(t));
        assert_eq!(w.ratio, d);
        assert_eq!(num_rational::Ratio::new(w.vertices as u64 - 1, w.diameter as u64), d);
    }
}

#[test]
fn star_density() {
    let t = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    let (d, _) = local_density(&t).unwrap();
    assert_eq!(d, num_rational::Ratio::new(5, 2));
    assert_eq!(exact_bandwidth_bruteforce(&t).unwrap().0, 3);
    assert_eq!(lower_bounds_report(&t).best(), 3);
}

#[test]
fn guards_refuse_large_inputs() {
    let t = path(30);
    assert!(matches!(exact_bandwidth_bruteforce(&t), Err(Error::TooLarge(_))));
    let g = Guards::parse("brute_n=40, saxe_b=2").unwrap();
    assert_eq!(exact_bandwidth_bruteforce_with(&t, &g).unwrap().0, 1);
    assert!(matches!(saxe_decide_with(&t, 3, &g), Err(Error::TooLarge(_))));
    assert!(Guards::parse("brute_n").is_err());
    assert!(Guards::parse("nope=3").is_err());
}

#[test]
fn saxe_on_long_paths_and_caterpillars() {
    assert!(saxe_decide(&path(200), 1).unwrap().is_some());
    let t = gen_caterpillar(40, &StrayProfile::Explicit(vec![1; 40]), 0).unwrap();
    let layout = saxe_decide(&t, 2).unwrap().expect("a comb fits in width 2");
    assert!(layout_width(&t, layout.ranks()) <= 2);
    assert!(saxe_decide(&t, 1).unwrap().is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn saxe_agrees_with_branch_and_bound(n in 1usize..11, p in 1usize..3, seed in any::<u64>()) {
        let t = gen_tree_bounded_pw(n, p, seed).unwrap();
        let (bw, _) = exact_bandwidth_bruteforce(&t).unwrap();
        for b in 1..=4 {
            let got = saxe_decide(&t, b).unwrap();
            prop_assert_eq!(got.is_some(), bw <= b);
            if let Some(l) = got {
                prop_assert!(layout_width(&t, l.ranks()) <= b);
            }
        }
    }

    #[test]
    fn lower_bounds_hold(n in 2usize..11, p in 1usize..3, seed in any::<u64>()) {
        let t = gen_tree_bounded_pw(n, p, seed).unwrap();
        let (bw, _) = exact_bandwidth_bruteforce(&t).unwrap();
        let lb = lower_bounds_report(&t);
        prop_assert!(lb.best() <= bw);
        prop_assert_eq!(lb.pathwidth, common::vertex_separation(&t));
    }
}
