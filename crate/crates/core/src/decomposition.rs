//! Tree pathwidth, recursive path decompositions, caterpillar recognition and
//! simplified instances.
//!
//! Pathwidth is computed with branch labels: the label of a rooted subtree is
//! a strictly decreasing list of values, each but the last marked critical.
//! A rooted subtree of value `k` is critical when some vertex in it has two
//! child branches of value `k`; the rest of the label describes what remains
//! after cutting that vertex's subtree away.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::io::LabeledTree;

type Label = Vec<(u32, bool)>;

fn combine(children: &[&[(u32, bool)]]) -> Label {
    let Some(k) = children.iter().map(|c| c[0].0).max() else {
        return vec![(0, false)];
    };
    if k == 0 {
        return vec![(1, false)];
    }
    let tops: Vec<usize> = (0..children.len()).filter(|&i| children[i][0].0 == k).collect();
    match tops.len() {
        1 => {
            let top = children[tops[0]];
            if !top[0].1 {
                return vec![(k, false)];
            }
            let mut rest: Vec<&[(u32, bool)]> = children
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != tops[0])
                .map(|(_, c)| *c)
                .collect();
            if top.len() > 1 {
                rest.push(&top[1..]);
            }
            let rest = combine(&rest);
            if rest[0].0 >= k {
                vec![(k + 1, false)]
            } else {
                let mut out = vec![(k, true)];
                out.extend(rest);
                out
            }
        }
        2 if !children[tops[0]][0].1 && !children[tops[1]][0].1 => vec![(k, true)],
        _ => vec![(k + 1, false)],
    }
}

/// Labels of every directed branch. `labels[x][j]` describes the component of
/// `T - x` that contains `t.neighbors(x)[j]`, rooted at that neighbor.
fn branch_labels(t: &Tree) -> Vec<Vec<Label>> {
    let n = t.n();
    let mut labels: Vec<Vec<Label>> = (0..n).map(|v| vec![Vec::new(); t.degree(v)]).collect();
    let (_, parent) = t.bfs_tree(0);
    let mut order: Vec<usize> = (0..n).collect();
    let (dist, _) = t.bfs_tree(0);
    order.sort_by_key(|&v| dist[v]);
    let slot = |x: usize, y: usize| t.neighbors(x).binary_search(&y).unwrap();

    for &v in order.iter().rev() {
        if v == 0 {
            continue;
        }
        let u = parent[v];
        let kids: Vec<&[(u32, bool)]> = t
            .neighbors(v)
            .iter()
            .zip(&labels[v])
            .filter(|(&w, _)| w != u)
            .map(|(_, l)| l.as_slice())
            .collect();
        let label = combine(&kids);
        let j = slot(u, v);
        labels[u][j] = label;
    }
    for &u in &order {
        for (j, &v) in t.neighbors(u).iter().enumerate() {
            if v == parent[u] && u != 0 {
                continue;
            }
            let others: Vec<&[(u32, bool)]> = (0..t.degree(u))
                .filter(|&i| i != j)
                .map(|i| labels[u][i].as_slice())
                .collect();
            let label = combine(&others);
            let i = slot(v, u);
            labels[v][i] = label;
        }
    }
    labels
}

/// Exact pathwidth of a tree.
pub fn pathwidth(t: &Tree) -> usize {
    let n = t.n();
    let (dist, parent) = t.bfs_tree(0);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut down: Vec<Label> = vec![Vec::new(); n];
    for &v in &order {
        let kids: Vec<&[(u32, bool)]> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent[v] || v == 0)
            .map(|&w| down[w].as_slice())
            .collect();
        down[v] = combine(&kids);
    }
    down[0][0].0 as usize
}

/// A path whose removal leaves only components of pathwidth below `pw(t)`.
fn heavy_path(t: &Tree, k: u32, labels: &[Vec<Label>]) -> Option<Vec<usize>> {
    let n = t.n();
    let heavy = |x: usize| -> Vec<usize> {
        (0..t.degree(x)).filter(|&j| labels[x][j][0].0 >= k).collect()
    };
    let mut roots: Vec<(usize, usize)> = (0..n).map(|r| (heavy(r).len(), r)).collect();
    roots.sort_by_key(|&(h, r)| (std::cmp::Reverse(h), r));
    'roots: for (h, r) in roots {
        if h > 2 {
            continue;
        }
        let mut arms = Vec::new();
        for j in heavy(r) {
            let mut arm = Vec::new();
            let (mut from, mut cur) = (r, t.neighbors(r)[j]);
            loop {
                arm.push(cur);
                let next: Vec<usize> = heavy(cur)
                    .into_iter()
                    .map(|i| t.neighbors(cur)[i])
                    .filter(|&w| w != from)
                    .collect();
                match next.len() {
                    0 => break,
                    1 => {
                        from = cur;
                        cur = next[0];
                    }
                    _ => continue 'roots,
                }
            }
            arms.push(arm);
        }
        let mut path: Vec<usize> = arms.first().map(|a| a.iter().rev().copied().collect()).unwrap_or_default();
        path.push(r);
        if let Some(a) = arms.get(1) {
            path.extend(a.iter().copied());
        }
        return Some(path);
    }
    None
}

/// A path decomposition of minimum width, as a sequence of bags. The first
/// and last bags are never empty.
pub fn path_decomposition(t: &Tree) -> Result<Vec<Vec<usize>>> {
    let ids: Vec<usize> = (0..t.n()).collect();
    let mut bags = Vec::new();
    decompose_into(t, &ids, &mut bags)?;
    Ok(bags)
}

fn decompose_into(t: &Tree, ids: &[usize], bags: &mut Vec<Vec<usize>>) -> Result<()> {
    if t.n() == 1 {
        bags.push(vec![ids[0]]);
        return Ok(());
    }
    let k = pathwidth(t) as u32;
    let labels = branch_labels(t);
    let path = heavy_path(t, k, &labels)
        .ok_or_else(|| Error::Invariant(format!("no heavy path in a tree of pathwidth {k}")))?;
    let mut on_path = vec![false; t.n()];
    for &v in &path {
        on_path[v] = true;
    }
    for (i, &v) in path.iter().enumerate() {
        for &w in t.neighbors(v) {
            if on_path[w] {
                continue;
            }
            let comp = component_from(t, w, &on_path);
            let (sub, local) = t.induced(&comp)?;
            let start = bags.len();
            let global: Vec<usize> = local.iter().map(|&x| ids[x]).collect();
            decompose_into(&sub, &global, bags)?;
            for bag in &mut bags[start..] {
                bag.push(ids[v]);
            }
        }
        if let Some(&next) = path.get(i + 1) {
            bags.push(vec![ids[v], ids[next]]);
        } else if path.len() == 1 && t.degree(v) == 0 {
            bags.push(vec![ids[v]]);
        }
    }
    Ok(())
}

/// BFS over the component of `T - blocked` containing `start`.
fn component_from(t: &Tree, start: usize, blocked: &[bool]) -> Vec<usize> {
    // in a tree it is enough to never step back to the vertex we came from
    let mut comp = vec![start];
    let mut from = vec![usize::MAX];
    let mut head = 0;
    while head < comp.len() {
        let (u, back) = (comp[head], from[head]);
        head += 1;
        for &w in t.neighbors(u) {
            if w != back && !blocked[w] {
                comp.push(w);
                from.push(u);
            }
        }
    }
    comp
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HangingSubtree {
    /// Vertices in BFS order from `attach.1`.
    pub vertices: Vec<usize>,
    /// `(path vertex, subtree vertex)`.
    pub attach: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursivePathDecomposition {
    pub path: Vec<usize>,
    pub subtrees: Vec<HangingSubtree>,
}

impl RecursivePathDecomposition {
    /// Checks the partition, connectivity and single-attachment properties,
    /// and optionally that every subtree has pathwidth below `p`.
    pub fn validate(&self, t: &Tree, p: Option<usize>) -> Result<()> {
        let n = t.n();
        let mut owner = vec![usize::MAX; n];
        let bad = |m: String| Err(Error::Invariant(m));
        for &v in &self.path {
            if !t.contains(v) {
                return Err(Error::InvalidVertex(v));
            }
            if owner[v] != usize::MAX {
                return bad(format!("vertex {v} repeated on the path"));
            }
            owner[v] = 0;
        }
        if self.path.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
            return bad("path is not a walk along tree edges".into());
        }
        for (i, sub) in self.subtrees.iter().enumerate() {
            for &v in &sub.vertices {
                if !t.contains(v) {
                    return Err(Error::InvalidVertex(v));
                }
                if owner[v] != usize::MAX {
                    return bad(format!("vertex {v} belongs to two parts"));
                }
                owner[v] = i + 1;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return bad(format!("vertex {v} is not covered"));
        }
        for (i, sub) in self.subtrees.iter().enumerate() {
            let (a, s) = sub.attach;
            if owner[a] != 0 || owner[s] != i + 1 || !t.has_edge(a, s) {
                return bad(format!("subtree {} has a bad attachment edge", i + 1));
            }
            let mut links = 0;
            for &v in &sub.vertices {
                for &w in t.neighbors(v) {
                    match owner[w] {
                        0 => links += 1,
                        o if o == i + 1 => {}
                        o => return bad(format!("subtrees {} and {o} touch", i + 1)),
                    }
                }
            }
            if links != 1 {
                return bad(format!("subtree {} has {links} edges into the path", i + 1));
            }
            let (sub_tree, _) = t.induced(&sub.vertices)?;
            if let Some(p) = p {
                let w = pathwidth(&sub_tree);
                if w + 1 > p {
                    return bad(format!("subtree {} has pathwidth {w}, bound is {}", i + 1, p - 1));
                }
            }
        }
        Ok(())
    }

    /// Text form: a `P:` line, then one `T<i>:` line per subtree.
    pub fn to_text(&self, lt: &LabeledTree) -> String {
        let mut out = String::from("P:");
        for &v in &self.path {
            out.push(' ');
            out.push_str(lt.label(v));
        }
        out.push('\n');
        for (i, sub) in self.subtrees.iter().enumerate() {
            let verts: Vec<&str> = sub.vertices.iter().map(|&v| lt.label(v)).collect();
            out.push_str(&format!(
                "T{}: attach={}-{} verts={}\n",
                i + 1,
                lt.label(sub.attach.0),
                lt.label(sub.attach.1),
                verts.join(",")
            ));
        }
        out
    }
}

impl fmt::Display for RecursivePathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|v| v.to_string()).collect();
        writeln!(f, "P: {}", path.join(" "))?;
        for (i, sub) in self.subtrees.iter().enumerate() {
            let verts: Vec<String> = sub.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(
                f,
                "T{}: attach={}-{} verts={}",
                i + 1,
                sub.attach.0,
                sub.attach.1,
                verts.join(",")
            )?;
        }
        Ok(())
    }
}

/// Builds a decomposition whose hanging subtrees all have pathwidth at most
/// `p - 1`. The path joins a vertex of the first bag of a minimum width path
/// decomposition to a vertex of its last bag. Vertices that occur in no other
/// bag are preferred, then smaller ids.
pub fn recursive_path_decomposition(t: &Tree, p: usize) -> Result<RecursivePathDecomposition> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let pw = pathwidth(t);
    if pw > p {
        return Err(Error::PathwidthExceeded { pathwidth: pw, bound: p });
    }
    let bags = path_decomposition(t)?;
    let (first, last) = (&bags[0], &bags[bags.len() - 1]);
    let mut count = vec![0usize; t.n()];
    for bag in &bags {
        for &x in bag {
            count[x] += 1;
        }
    }
    let pick = |bag: &[usize], skip: Option<usize>| {
        let fallback = *bag.iter().min().unwrap();
        bag.iter()
            .copied()
            .filter(|&x| count[x] == 1 && Some(x) != skip)
            .min()
            .unwrap_or(fallback)
    };
    let u = pick(first, None);
    let v = pick(last, Some(u));
    let path = t.path_between(u, v);
    Ok(decomposition_along(t, path))
}

/// Splits `t` into `path` and the components hanging off it.
pub fn decomposition_along(t: &Tree, path: Vec<usize>) -> RecursivePathDecomposition {
    let mut on_path = vec![false; t.n()];
    for &v in &path {
        on_path[v] = true;
    }
    let mut subtrees = Vec::new();
    for &v in &path {
        for &w in t.neighbors(v) {
            if !on_path[w] {
                subtrees.push(HangingSubtree {
                    vertices: component_from(t, w, &on_path),
                    attach: (v, w),
                });
            }
        }
    }
    RecursivePathDecomposition { path, subtrees }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stray {
    /// Ordered by distance from the backbone, nearest first.
    pub vertices: Vec<usize>,
    /// 1-based index of the backbone vertex the stray hangs from.
    pub pos: usize,
}

impl Stray {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarView {
    pub backbone: Vec<usize>,
    /// Sorted by `pos`, then by nearest vertex id.
    pub strays: Vec<Stray>,
}

/// Finds a longest backbone: the path through all vertices of degree at
/// least 3, extended at both ends by the longest leg available. Ties prefer
/// the leg ending in the smaller leaf id.
pub fn caterpillar_view(t: &Tree) -> Result<CaterpillarView> {
    let n = t.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] <= 1 && t.degree(v) < 3).collect();
    let mut remaining = n;
    while let Some(v) = queue.pop_front() {
        if !alive[v] || remaining == 0 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in t.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && t.degree(w) < 3 {
                    queue.push_back(w);
                }
            }
        }
    }

    let backbone = if remaining == 0 {
        // a path: walk from the smaller end
        let ends: Vec<usize> = (0..n).filter(|&v| t.degree(v) <= 1).collect();
        t.path_between(ends[0], *ends.last().unwrap())
    } else {
        let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        if let Some(&v) = core.iter().find(|&&v| deg[v] > 2) {
            return Err(Error::NotACaterpillar(v));
        }
        let ends: Vec<usize> = core.iter().copied().filter(|&v| deg[v] <= 1).collect();
        let (s1, s2) = (ends[0], *ends.last().unwrap());
        let core_path = t.path_between(s1, s2);
        let legs = |v: usize| -> Vec<Vec<usize>> {
            let mut legs: Vec<Vec<usize>> = t
                .neighbors(v)
                .iter()
                .filter(|&&w| !alive[w])
                .map(|&w| component_from(t, w, &alive))
                .collect();
            legs.sort_by_key(|leg| (std::cmp::Reverse(leg.len()), *leg.last().unwrap()));
            legs
        };
        let mut l1 = legs(s1);
        let (west, east) = if s1 == s2 {
            let second = l1.remove(1);
            (l1.remove(0), second)
        } else {
            (l1.remove(0), legs(s2).remove(0))
        };
        let mut bb: Vec<usize> = west.into_iter().rev().collect();
        bb.extend(core_path);
        bb.extend(east);
        bb
    };
    let backbone = if backbone[0] > *backbone.last().unwrap() {
        backbone.into_iter().rev().collect()
    } else {
        backbone
    };

    let mut on_bb = vec![false; n];
    for &v in &backbone {
        on_bb[v] = true;
    }
    let mut strays = Vec::new();
    for (i, &v) in backbone.iter().enumerate() {
        // off-core vertices all have degree below 3, so every component is a path
        let mut here: Vec<Stray> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| !on_bb[w])
            .map(|&w| Stray {
                vertices: component_from(t, w, &on_bb),
                pos: i + 1,
            })
            .collect();
        here.sort_by_key(|s| s.vertices[0]);
        strays.extend(here);
    }
    Ok(CaterpillarView { backbone, strays })
}

pub fn is_caterpillar(t: &Tree) -> bool {
    caterpillar_view(t).is_ok()
}

/// A caterpillar obtained by replacing every hanging subtree with a pendant
/// path of the same vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedInstance {
    /// Shares the vertex ids of the original tree.
    pub tree: Tree,
    /// `pendants[i][d - 1]` is the vertex at distance `d` from the path on the
    /// pendant path that replaces subtree `i`.
    pub pendants: Vec<Vec<usize>>,
}

pub fn simplified_instance(t: &Tree, d: &RecursivePathDecomposition) -> Result<SimplifiedInstance> {
    d.validate(t, None)?;
    let mut edges: Vec<(usize, usize)> = d.path.windows(2).map(|w| (w[0], w[1])).collect();
    let mut pendants = Vec::with_capacity(d.subtrees.len());
    for sub in &d.subtrees {
        let chain = sub.vertices.clone();
        edges.push((sub.attach.0, chain[0]));
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        pendants.push(chain);
    }
    let tree = Tree::from_edges(t.n(), &edges)?;
    Ok(SimplifiedInstance { tree, pendants })
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

    fn binary(height: u32) -> Tree {
        let n = (1usize << (height + 1)) - 1;
        let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    /// Spider with three legs of two edges each.
    fn spider() -> Tree {
        Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn small_pathwidths() {
        assert_eq!(pathwidth(&Tree::single_vertex()), 0);
        assert_eq!(pathwidth(&path(2)), 1);
        assert_eq!(pathwidth(&path(9)), 1);
        assert_eq!(pathwidth(&star(5)), 1);
        assert_eq!(pathwidth(&spider()), 2);
        assert_eq!(pathwidth(&binary(2)), 1);
        assert_eq!(pathwidth(&binary(3)), 2);
        assert_eq!(pathwidth(&binary(5)), 3);
    }

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
                assert!(bag.contains(&v), "vertex {v} not contiguous");
            }
        }
        for (u, v) in t.edges() {
            assert!(bags.iter().any(|b| b.contains(&u) && b.contains(&v)));
        }
        bags.iter().map(Vec::len).max().unwrap() - 1
    }

    #[test]
    fn decompositions_have_optimal_width() {
        for t in [path(6), star(4), spider(), binary(3), binary(4)] {
            let bags = path_decomposition(&t).unwrap();
            assert_eq!(check_bags(&t, &bags), pathwidth(&t));
            assert!(!bags[0].is_empty() && !bags.last().unwrap().is_empty());
        }
    }

    #[test]
    fn path_decomposes_to_itself() {
        let d = recursive_path_decomposition(&path(5), 1).unwrap();
        assert_eq!(d.path.len(), 5);
        assert!(d.subtrees.is_empty());
    }

    #[test]
    fn star_decomposition() {
        let t = star(4);
        let d = recursive_path_decomposition(&t, 1).unwrap();
        d.validate(&t, Some(1)).unwrap();
        assert_eq!(d.path.len(), 3);
        assert!(d.path.contains(&0));
        assert_eq!(d.subtrees.len(), 2);
        assert!(d.subtrees.iter().all(|s| s.vertices.len() == 1));
    }

    #[test]
    fn binary_tree_decomposition() {
        let t = binary(3);
        let d = recursive_path_decomposition(&t, 2).unwrap();
        d.validate(&t, Some(2)).unwrap();
        assert_eq!(
            recursive_path_decomposition(&t, 1),
            Err(Error::PathwidthExceeded { pathwidth: 2, bound: 1 })
        );
    }

    #[test]
    fn caterpillar_examples() {
        let v = caterpillar_view(&path(6)).unwrap();
        assert_eq!(v.backbone, vec![0, 1, 2, 3, 4, 5]);
        assert!(v.strays.is_empty());

        let v = caterpillar_view(&star(4)).unwrap();
        assert_eq!(v.backbone, vec![1, 0, 2]);
        assert_eq!(v.strays.len(), 2);
        assert!(v.strays.iter().all(|s| s.pos == 2 && s.len() == 1));

        // two degree-3 vertices joined through the root: still a caterpillar
        let v = caterpillar_view(&binary(2)).unwrap();
        assert_eq!(v.backbone.len(), 5);
        assert_eq!(v.strays.len(), 2);

        assert!(matches!(caterpillar_view(&binary(3)), Err(Error::NotACaterpillar(_))));

        // long legs are fine: one branching vertex, three strays of two
        let v = caterpillar_view(&spider()).unwrap();
        assert_eq!(v.backbone.len(), 5);
        assert_eq!(v.strays.len(), 1);
        assert_eq!(v.strays[0].len(), 2);
    }

    #[test]
    fn backbone_is_not_just_a_diameter() {
        // v = 0 has two legs of length 3; a = 7 hangs off v and carries two
        // leaves. The diameter runs leg to leg and misses a.
        let t = Tree::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (7, 9)],
        )
        .unwrap();
        let v = caterpillar_view(&t).unwrap();
        assert_eq!(v.backbone, vec![3, 2, 1, 0, 7, 8]);
        assert_eq!(v.strays.len(), 2);
        assert_eq!(v.strays[0].vertices, vec![4, 5, 6]);
        assert_eq!(v.strays[1].vertices, vec![9]);
    }

    #[test]
    fn stray_vertices_ordered_outward() {
        // the longest leg 5-6-7 joins the backbone and 3-4 becomes the stray
        let t = Tree::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)]).unwrap();
        let v = caterpillar_view(&t).unwrap();
        assert_eq!(v.backbone, vec![0, 1, 2, 5, 6, 7]);
        assert_eq!(v.strays[0].vertices, vec![3, 4]);
        assert_eq!(v.strays[0].pos, 3);
    }

    #[test]
    fn simplified_instance_replaces_subtrees_with_paths() {
        let t = binary(3);
        let d = recursive_path_decomposition(&t, 2).unwrap();
        let s = simplified_instance(&t, &d).unwrap();
        assert_eq!(s.tree.n(), t.n());
        assert!(is_caterpillar(&s.tree));
        for (sub, pend) in d.subtrees.iter().zip(&s.pendants) {
            assert_eq!(sub.vertices.len(), pend.len());
        }
    }

    #[test]
    fn simplified_instance_of_caterpillar_is_itself() {
        let t = Tree::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)]).unwrap();
        let d = decomposition_along(&t, vec![0, 1, 2, 3, 4]);
        let s = simplified_instance(&t, &d).unwrap();
        assert_eq!(s.tree, t);
    }

    #[test]
    fn decomposition_text() {
        let t = star(3);
        let d = decomposition_along(&t, vec![1, 0, 2]);
        assert_eq!(d.to_string(), "P: 1 0 2\nT1: attach=0-3 verts=3\n");
        let lt = LabeledTree::unlabeled(t);
        assert_eq!(d.to_text(&lt), d.to_string());
    }
}
