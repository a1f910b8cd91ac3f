//! Seeded random caterpillars and trees of bounded pathwidth.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::pathwidth;
use crate::error::{Error, Result};
use crate::graph::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrayProfile {
    /// One stray length per spine vertex; 0 means no stray.
    Explicit(Vec<usize>),
    /// Up to `max_per_vertex` strays per spine vertex, each of length
    /// `1..=max_len`.
    Random { max_len: usize, max_per_vertex: usize },
}

pub fn gen_caterpillar(spine_len: usize, profile: &StrayProfile, seed: u64) -> Result<Tree> {
    if spine_len == 0 {
        return Err(Error::InvalidParameter("spine length must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lengths: Vec<Vec<usize>> = match profile {
        StrayProfile::Explicit(lens) => {
            if lens.len() != spine_len {
                return Err(Error::InvalidParameter(format!(
                    "stray profile has {} entries for a spine of {spine_len}",
                    lens.len()
                )));
            }
            lens.iter().map(|&l| if l == 0 { vec![] } else { vec![l] }).collect()
        }
        StrayProfile::Random { max_len, max_per_vertex } => {
            if *max_len == 0 && *max_per_vertex > 0 {
                return Err(Error::InvalidParameter("random strays need max_len >= 1".into()));
            }
            (0..spine_len)
                .map(|_| {
                    let count = rng.gen_range(0..=*max_per_vertex);
                    (0..count).map(|_| rng.gen_range(1..=*max_len)).collect()
                })
                .collect()
        }
    };
    let mut edges: Vec<(usize, usize)> = (1..spine_len).map(|i| (i - 1, i)).collect();
    let mut next = spine_len;
    for (i, strays) in lengths.iter().enumerate() {
        for &len in strays {
            let mut prev = i;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Tree::from_edges(next, &edges)
}

/// A random tree on `n` vertices with pathwidth at most `p`: a random spine
/// with components of pathwidth at most `p - 1` hanging off it.
pub fn gen_tree_bounded_pw(n: usize, p: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(Error::InvalidParameter("tree needs at least one vertex".into()));
    }
    if p == 0 && n > 1 {
        return Err(Error::InvalidParameter("pathwidth 0 allows a single vertex only".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n - 1);
    grow(&mut rng, 0, n, p, &mut edges);
    let t = Tree::from_edges(n, &edges)?;
    let pw = pathwidth(&t);
    if pw > p {
        return Err(Error::Invariant(format!("generated pathwidth {pw} exceeds {p}")));
    }
    Ok(t)
}

/// Builds a tree on ids `base..base + n`.
fn grow(rng: &mut ChaCha8Rng, base: usize, n: usize, p: usize, edges: &mut Vec<(usize, usize)>) {
    if n == 1 {
        return;
    }
    if p <= 1 {
        // caterpillar with single-vertex hairs
        let spine = rng.gen_range(1..=n);
        for i in 1..spine {
            edges.push((base + i - 1, base + i));
        }
        for v in spine..n {
            edges.push((base + rng.gen_range(0..spine), base + v));
        }
        return;
    }
    let spine = rng.gen_range(1..=n.div_ceil(p + 1));
    for i in 1..spine {
        edges.push((base + i - 1, base + i));
    }
    let mut next = spine;
    while next < n {
        let size = rng.gen_range(1..=(n - next).min(n / 2).max(1));
        let root = base + next;
        grow(rng, root, size, p - 1, edges);
        let attach_in = rng.gen_range(0..size);
        edges.push((base + rng.gen_range(0..spine), root + attach_in));
        next += size;
    }
}
