#![allow(dead_code)]

use bandwidthkit::generators::all_trees;
use bandwidthkit::Tree;
use num_rational::Ratio;

pub fn path(n: usize) -> Tree {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges).unwrap()
}

pub fn trees_up_to(n: usize) -> Vec<Tree> {
    (1..=n).flat_map(all_trees).collect()
}

/// Pathwidth as vertex separation number: the minimum over orderings of the
/// largest number of placed vertices with an unplaced neighbour. Subset DP.
pub fn vertex_separation(t: &Tree) -> usize {
    let n = t.n();
    let full = (1usize << n) - 1;
    let mut nbr = vec![0usize; n];
    for (u, v) in t.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let boundary = |s: usize| (0..n).filter(|&v| s >> v & 1 == 1 && nbr[v] & !s != 0).count();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for s in 0..full {
        if best[s] == usize::MAX {
            continue;
        }
        for v in 0..n {
            if s >> v & 1 == 0 {
                let t2 = s | 1 << v;
                let w = best[s].max(boundary(t2));
                if w < best[t2] {
                    best[t2] = w;
                }
            }
        }
    }
    best[full]
}

/// Local density by enumerating every connected vertex subset.
pub fn density_by_subsets(t: &Tree) -> Ratio<u64> {
    let n = t.n();
    let mut best = Ratio::from_integer(0u64);
    for s in 1usize..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if verts.len() < 2 {
            continue;
        }
        // connected within the subset, and its diameter there
        let mut diam = 0;
        let mut connected = true;
        for &src in &verts {
            let mut dist = vec![usize::MAX; n];
            dist[src] = 0;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                for &y in t.neighbors(x) {
                    if s >> y & 1 == 1 && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if verts.iter().any(|&v| dist[v] == usize::MAX) {
                connected = false;
                break;
            }
            diam = diam.max(verts.iter().map(|&v| dist[v]).max().unwrap());
        }
        if connected {
            let r = Ratio::new(verts.len() as u64 - 1, diam as u64);
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// Exact bandwidth by trying every permutation. Only for tiny trees.
pub fn bandwidth_by_permutations(t: &Tree) -> usize {
    let n = t.n();
    if n < 2 {
        return 0;
    }
    let edges: Vec<_> = t.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let eval = |p: &[usize]| edges.iter().map(|&(u, v)| p[u].abs_diff(p[v])).max().unwrap();
    best = best.min(eval(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(eval(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Largest rank difference over edges, computed from scratch.
pub fn layout_width(t: &Tree, ranks: &[usize]) -> usize {
    t.edges().map(|(u, v)| ranks[u].abs_diff(ranks[v])).max().unwrap_or(0)
}
