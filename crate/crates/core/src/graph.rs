//! Trees, layouts and the basic layout transformations.
//!
//! Vertices are dense ids `0..n`. Layout ranks are 1-based, so a layout of an
//! `n`-vertex tree is a bijection onto `1..=n`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// An undirected tree over vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list, rejecting self-loops, parallel edges,
    /// cycles and disconnected inputs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotATree(format!("parallel edge at vertex {v}")));
            }
        }
        let tree = Tree { adj };
        let reached = tree.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            return Err(Error::NotATree(format!(
                "disconnected: only {reached} of {n} vertices reachable from 0"
            )));
        }
        Ok(tree)
    }

    pub fn single_vertex() -> Tree {
        Tree {
            adj: vec![Vec::new()],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Hop distances from `src`; `None` marks unreachable vertices (only
    /// possible while validating).
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distances from `src` together with BFS parents (`parent[src] == src`).
    pub fn bfs_tree(&self, src: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        parent[src] = src;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// The unique path from `u` to `v`, both endpoints included.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let (_, parent) = self.bfs_tree(v);
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = parent[cur];
            path.push(cur);
        }
        path
    }

    /// Induced subgraph on a connected vertex set. Returns the subtree and the
    /// local-to-global id map; local ids follow the order of `verts`.
    pub fn induced(&self, verts: &[usize]) -> Result<(Tree, Vec<usize>)> {
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if local.len() != verts.len() {
            return Err(Error::InvalidParameter("repeated vertex in subtree".into()));
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            if !self.contains(v) {
                return Err(Error::InvalidVertex(v));
            }
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let sub = Tree::from_edges(verts.len(), &edges)?;
        Ok((sub, verts.to_vec()))
    }

    /// Connected components of the forest left after deleting `removed`.
    /// Each component is listed in BFS order from its smallest vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Exact hop distance between two vertices.
pub fn distance(t: &Tree, u: usize, v: usize) -> Result<usize> {
    if !t.contains(u) {
        return Err(Error::InvalidVertex(u));
    }
    if !t.contains(v) {
        return Err(Error::InvalidVertex(v));
    }
    Ok(t.bfs_distances(u)[v].expect("tree is connected"))
}

/// A longest path, found by double BFS. Among farthest vertices the smallest
/// id wins at both sweeps.
pub fn diameter_path(t: &Tree) -> Vec<usize> {
    let far = |src: usize| {
        let (dist, _) = t.bfs_tree(src);
        let best = *dist.iter().max().unwrap();
        dist.iter().position(|&d| d == best).unwrap()
    };
    let a = far(0);
    let b = far(a);
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    t.path_between(x, y)
}

pub fn diameter(t: &Tree) -> usize {
    diameter_path(t).len() - 1
}

/// Anything that assigns an integer position to each vertex of a tree.
pub trait Placement {
    fn len(&self) -> usize;
    fn position(&self, v: usize) -> i64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A bijection from vertices onto ranks `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    ranks: Vec<usize>,
}

impl Layout {
    /// `ranks[v]` is the 1-based rank of vertex `v`.
    pub fn new(ranks: Vec<usize>) -> Result<Layout> {
        let n = ranks.len();
        let mut owner = vec![usize::MAX; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r == 0 || r > n {
                return Err(Error::InvalidLayout(format!(
                    "vertex {v} has rank {r}, outside 1..={n}"
                )));
            }
            if owner[r - 1] != usize::MAX {
                return Err(Error::InvalidLayout(format!(
                    "vertices {} and {v} share rank {r}",
                    owner[r - 1]
                )));
            }
            owner[r - 1] = v;
        }
        Ok(Layout { ranks })
    }

    /// Builds a layout from a vertex sequence: `order[i]` gets rank `i + 1`.
    pub fn from_order(order: &[usize]) -> Result<Layout> {
        let n = order.len();
        let mut ranks = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidLayout(format!("vertex {v} out of range")));
            }
            if ranks[v] != 0 {
                return Err(Error::InvalidLayout(format!("vertex {v} appears twice")));
            }
            ranks[v] = i + 1;
        }
        Ok(Layout { ranks })
    }

    pub fn identity(n: usize) -> Layout {
        Layout {
            ranks: (1..=n).collect(),
        }
    }

    pub fn rank(&self, v: usize) -> usize {
        self.ranks[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Vertices sorted by rank.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.ranks.len()];
        for (v, &r) in self.ranks.iter().enumerate() {
            order[r - 1] = v;
        }
        order
    }

    /// Left-right mirror image.
    pub fn reversed(&self) -> Layout {
        let n = self.ranks.len();
        Layout {
            ranks: self.ranks.iter().map(|&r| n + 1 - r).collect(),
        }
    }

    pub fn bandwidth(&self, t: &Tree) -> Result<usize> {
        bandwidth_of_layout(t, self).map(|b| b as usize)
    }

    pub fn to_sparse(&self) -> SparseLayout {
        SparseLayout {
            positions: self.ranks.iter().map(|&r| r as i64).collect(),
        }
    }
}

impl Placement for Layout {
    fn len(&self) -> usize {
        self.ranks.len()
    }

    fn position(&self, v: usize) -> i64 {
        self.ranks[v] as i64
    }
}

/// An injective map from vertices to integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseLayout {
    positions: Vec<i64>,
}

impl SparseLayout {
    pub fn new(positions: Vec<i64>) -> Result<SparseLayout> {
        let mut seen: HashMap<i64, usize> = HashMap::with_capacity(positions.len());
        for (v, &p) in positions.iter().enumerate() {
            if let Some(&u) = seen.get(&p) {
                return Err(Error::InvalidSparseLayout {
                    position: p,
                    first: u,
                    second: v,
                });
            }
            seen.insert(p, v);
        }
        Ok(SparseLayout { positions })
    }

    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    pub fn bandwidth(&self, t: &Tree) -> Result<u64> {
        bandwidth_of_layout(t, self)
    }
}

impl Placement for SparseLayout {
    fn len(&self) -> usize {
        self.positions.len()
    }

    fn position(&self, v: usize) -> i64 {
        self.positions[v]
    }
}

/// Maximum position difference over the edges of `t`.
pub fn bandwidth_of_layout<P: Placement + ?Sized>(t: &Tree, layout: &P) -> Result<u64> {
    if layout.len() != t.n() {
        let missing = layout.len().min(t.n());
        return Err(Error::InvalidLayout(format!(
            "layout covers {} vertices but the tree has {} (vertex {} has no position)",
            layout.len(),
            t.n(),
            missing
        )));
    }
    Ok(t.edges()
        .map(|(u, v)| layout.position(u).abs_diff(layout.position(v)))
        .max()
        .unwrap_or(0))
}

/// The rank-order bijection of an injective placement.
pub fn compress<P: Placement + ?Sized>(t: &Tree, sparse: &P) -> Result<Layout> {
    if sparse.len() != t.n() {
        return Err(Error::InvalidLayout(format!(
            "placement covers {} vertices but the tree has {}",
            sparse.len(),
            t.n()
        )));
    }
    let mut order: Vec<usize> = (0..sparse.len()).collect();
    order.sort_by_key(|&v| sparse.position(v));
    for w in order.windows(2) {
        if sparse.position(w[0]) == sparse.position(w[1]) {
            return Err(Error::InvalidSparseLayout {
                position: sparse.position(w[0]),
                first: w[0].min(w[1]),
                second: w[0].max(w[1]),
            });
        }
    }
    Layout::from_order(&order)
}

/// Folds `layout` around `pivot`: the left side is mapped onto even offsets,
/// the right side onto odd offsets, then the result is compressed. The pivot
/// ends up at rank 1 and the bandwidth at most doubles.
pub fn right_fold(t: &Tree, layout: &Layout, pivot: usize) -> Result<Layout> {
    if !t.contains(pivot) {
        return Err(Error::InvalidVertex(pivot));
    }
    if layout.len() != t.n() {
        return Err(Error::InvalidLayout("layout does not match tree".into()));
    }
    let center = layout.rank(pivot) as i64;
    let folded: Vec<i64> = (0..t.n())
        .map(|u| {
            let r = layout.rank(u) as i64;
            if r <= center {
                2 * (center - r)
            } else {
                2 * (r - center) - 1
            }
        })
        .collect();
    compress(t, &SparseLayout { positions: folded })
}

/// Closed integer interval of ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexInterval {
    pub lo: i64,
    pub hi: i64,
}

impl VertexInterval {
    pub fn len(&self) -> u64 {
        self.lo.abs_diff(self.hi) + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// `[min position, max position]` of a non-empty vertex set.
pub fn inclusion_interval<P: Placement + ?Sized>(layout: &P, set: &[usize]) -> Option<VertexInterval> {
    let lo = set.iter().map(|&v| layout.position(v)).min()?;
    let hi = set.iter().map(|&v| layout.position(v)).max()?;
    Some(VertexInterval { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Tree {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (2, 3)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (1, 0), (2, 3)]).is_err());
        assert!(Tree::from_edges(2, &[(0, 0)]).is_err());
        assert!(Tree::from_edges(0, &[]).is_err());
        // right edge count, but a cycle plus an isolated vertex
        assert!(Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn path_identity_bandwidth() {
        let t = path(4);
        assert_eq!(Layout::identity(4).bandwidth(&t).unwrap(), 1);
    }

    #[test]
    fn star_center_in_middle() {
        let t = star(4);
        // center rank 3, leaves 1, 2, 4, 5
        let l = Layout::new(vec![3, 1, 2, 4, 5]).unwrap();
        assert_eq!(l.bandwidth(&t).unwrap(), 2);
        assert_eq!(l.reversed().bandwidth(&t).unwrap(), 2);
    }

    #[test]
    fn single_vertex_has_zero_bandwidth() {
        let t = Tree::single_vertex();
        assert_eq!(Layout::identity(1).bandwidth(&t).unwrap(), 0);
    }

    #[test]
    fn missing_vertex_is_an_error() {
        let t = path(4);
        let l = Layout::identity(3);
        assert!(matches!(bandwidth_of_layout(&t, &l), Err(Error::InvalidLayout(_))));
    }

    #[test]
    fn compress_examples() {
        let t = path(3);
        // a = 0, b = 1, c = 2 ; a:10 b:70 c:40 -> a:1 c:2 b:3
        let s = SparseLayout::new(vec![10, 70, 40]).unwrap();
        assert_eq!(compress(&t, &s).unwrap().ranks(), &[1, 3, 2]);

        let id = Layout::identity(3);
        assert_eq!(compress(&t, &id).unwrap(), id);

        let wide = SparseLayout::new(vec![2, 102, 202]).unwrap();
        assert_eq!(wide.bandwidth(&t).unwrap(), 100);
        assert_eq!(compress(&t, &wide).unwrap().bandwidth(&t).unwrap(), 1);
    }

    #[test]
    fn duplicate_positions_rejected() {
        assert!(matches!(
            SparseLayout::new(vec![1, 5, 1]),
            Err(Error::InvalidSparseLayout { position: 1, first: 0, second: 2 })
        ));
    }

    #[test]
    fn fold_path_around_middle() {
        // u1 - v - u3 with v = 1
        let t = path(3);
        let folded = right_fold(&t, &Layout::identity(3), 1).unwrap();
        assert_eq!(folded.rank(1), 1);
        assert_eq!(folded.rank(2), 2);
        assert_eq!(folded.rank(0), 3);
        assert_eq!(folded.bandwidth(&t).unwrap(), 2);
    }

    #[test]
    fn fold_around_first_vertex_preserves_order() {
        let t = path(5);
        let l = Layout::identity(5);
        let folded = right_fold(&t, &l, 0).unwrap();
        assert_eq!(folded, l);
    }

    #[test]
    fn fold_rejects_unknown_pivot() {
        let t = path(3);
        assert_eq!(right_fold(&t, &Layout::identity(3), 7), Err(Error::InvalidVertex(7)));
    }

    #[test]
    fn diameters_and_distances() {
        assert_eq!(diameter(&path(5)), 4);
        assert_eq!(diameter(&star(3)), 2);
        assert_eq!(diameter(&Tree::single_vertex()), 0);
        let t = path(5);
        assert_eq!(distance(&t, 2, 2).unwrap(), 0);
        assert_eq!(distance(&t, 0, 4).unwrap(), 4);
        assert!(distance(&t, 0, 9).is_err());
    }

    #[test]
    fn inclusion_interval_spans_set() {
        let l = Layout::new(vec![4, 1, 3, 2]).unwrap();
        let iv = inclusion_interval(&l, &[0, 2]).unwrap();
        assert_eq!((iv.lo, iv.hi), (3, 4));
        assert_eq!(iv.len(), 2);
        assert!(inclusion_interval(&l, &[]).is_none());
    }
}
