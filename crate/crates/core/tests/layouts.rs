mod common;

use bandwidthkit::generators::gen_tree_bounded_pw;
use bandwidthkit::graph::{bandwidth_of_layout, compress, inclusion_interval, right_fold};
use bandwidthkit::io::{parse_layout, write_layout, LabeledTree};
use bandwidthkit::{Layout, SparseLayout, Tree};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::layout_width;

fn instance(n: usize, seed: u64) -> (Tree, Layout) {
    let t = gen_tree_bounded_pw(n, 3, seed).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
    (t, Layout::from_order(&order).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compression_preserves_relative_order(
        positions in prop::collection::hash_set(-1_000_000i64..1_000_000, 1..60),
        seed in any::<u64>(),
    ) {
        let positions: Vec<i64> = positions.into_iter().collect();
        let n = positions.len();
        let t = gen_tree_bounded_pw(n, 2, seed).unwrap();
        let sparse = SparseLayout::new(positions.clone()).unwrap();
        let layout = compress(&t, &sparse).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(positions[u] < positions[v], layout.rank(u) < layout.rank(v));
            }
        }
        // compression never widens
        prop_assert!(bandwidth_of_layout(&t, &layout).unwrap() <= bandwidth_of_layout(&t, &sparse).unwrap());
    }

    #[test]
    fn fold_at_most_doubles(n in 1usize..80, seed in any::<u64>(), pivot_pick in any::<usize>()) {
        let (t, alpha) = instance(n, seed);
        let pivot = pivot_pick % n;
        let beta = right_fold(&t, &alpha, pivot).unwrap();
        prop_assert_eq!(beta.rank(pivot), 1);
        prop_assert!(layout_width(&t, beta.ranks()) <= 2 * layout_width(&t, alpha.ranks()));
    }

    #[test]
    fn reversal_keeps_bandwidth(n in 1usize..80, seed in any::<u64>()) {
        let (t, alpha) = instance(n, seed);
        let rev = alpha.reversed();
        prop_assert_eq!(layout_width(&t, rev.ranks()), layout_width(&t, alpha.ranks()));
        prop_assert_eq!(rev.reversed(), alpha);
    }

    #[test]
    fn bandwidth_matches_recount(n in 1usize..80, seed in any::<u64>()) {
        let (t, alpha) = instance(n, seed);
        prop_assert_eq!(bandwidth_of_layout(&t, &alpha).unwrap() as usize, layout_width(&t, alpha.ranks()));
        prop_assert_eq!(alpha.bandwidth(&t).unwrap(), layout_width(&t, alpha.ranks()));
    }

    #[test]
    fn order_and_ranks_are_inverse(n in 1usize..80, seed in any::<u64>()) {
        let (_, alpha) = instance(n, seed);
        let order = alpha.order();
        for (i, &v) in order.iter().enumerate() {
            prop_assert_eq!(alpha.rank(v), i + 1);
        }
        prop_assert_eq!(Layout::from_order(&order).unwrap(), alpha);
    }

    #[test]
    fn layout_files_round_trip(n in 1usize..60, seed in any::<u64>()) {
        let (t, alpha) = instance(n, seed);
        let lt = LabeledTree::unlabeled(t);
        let text = write_layout(&alpha, &lt);
        prop_assert_eq!(parse_layout(&text, &lt).unwrap(), alpha);
    }

    #[test]
    fn inclusion_interval_spans_the_set(n in 2usize..60, seed in any::<u64>(), k in 1usize..10) {
        let (_, alpha) = instance(n, seed);
        let set: Vec<usize> = (0..n).step_by(k).collect();
        let iv = inclusion_interval(&alpha, &set).unwrap();
        let ranks: Vec<i64> = set.iter().map(|&v| alpha.rank(v) as i64).collect();
        prop_assert_eq!(iv.lo, *ranks.iter().min().unwrap());
        prop_assert_eq!(iv.hi, *ranks.iter().max().unwrap());
    }
}

#[test]
fn colliding_positions_are_rejected() {
    assert!(SparseLayout::new(vec![3, 7, 3]).is_err());
    assert!(Layout::new(vec![1, 1, 2]).is_err());
    assert!(Layout::new(vec![1, 3]).is_err());
}
