//! Exhaustive enumeration of unlabeled trees.

use std::collections::HashSet;

use crate::graph::Tree;

/// Canonical string of a tree, equal for isomorphic trees. Built from the
/// sorted child encodings when rooted at the center (the smaller of the two
/// encodings for a bicentral tree).
pub fn canonical_form(t: &Tree) -> String {
    centers(t).into_iter().map(|c| encode(t, c)).min().unwrap()
}

fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(t: &Tree, root: usize) -> String {
    let (dist, parent) = t.bfs_tree(root);
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut code: Vec<String> = vec![String::new(); t.n()];
    for v in order {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| std::mem::take(&mut code[w]))
            .collect();
        kids.sort();
        code[v] = format!("({})", kids.concat());
    }
    std::mem::take(&mut code[root])
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// in a deterministic order.
pub fn all_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for v in 0..size {
                let mut grown = edges.clone();
                grown.push((v, size));
                let t = Tree::from_edges(size + 1, &grown).expect("adding a leaf keeps a tree");
                if seen.insert(canonical_form(&t)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| Tree::from_edges(n, &edges).expect("valid by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &count) in known.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Tree::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let b = Tree::from_edges(4, &[(3, 2), (2, 0), (2, 1)]).unwrap();
        let c = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&c));
    }
}
