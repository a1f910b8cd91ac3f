//! Exact references for small trees: bandwidth by branch and bound, a
//! windowed state search that decides `bw <= b`, local density and the
//! resulting lower bounds.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;

use crate::decomposition::pathwidth;
use crate::error::{Error, Result};
use crate::graph::{Layout, Tree};

/// Size limits for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub brute_max_n: usize,
    pub saxe_max_b: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            brute_max_n: 10,
            saxe_max_b: 4,
        }
    }
}

impl Guards {
    pub const ENV: &'static str = "BANDWIDTHKIT_GUARDS";

    /// Reads `brute_n=<int>,saxe_b=<int>` from `BANDWIDTHKIT_GUARDS`; missing
    /// keys keep their defaults.
    pub fn from_env() -> Result<Guards> {
        match std::env::var(Self::ENV) {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Guards::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Guards> {
        let mut g = Guards::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("guard {item:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("guard value {value:?} is not an integer")))?;
            match key.trim() {
                "brute_n" => g.brute_max_n = value,
                "saxe_b" => g.saxe_max_b = value,
                other => return Err(Error::InvalidParameter(format!("unknown guard {other:?}"))),
            }
        }
        Ok(g)
    }
}

/// Exact bandwidth and a witness layout, with the guards from the environment.
pub fn exact_bandwidth_bruteforce(t: &Tree) -> Result<(usize, Layout)> {
    exact_bandwidth_bruteforce_with(t, &Guards::from_env()?)
}

pub fn exact_bandwidth_bruteforce_with(t: &Tree, guards: &Guards) -> Result<(usize, Layout)> {
    let n = t.n();
    if n > guards.brute_max_n {
        return Err(Error::TooLarge(format!(
            "brute force is limited to {} vertices, tree has {n}",
            guards.brute_max_n
        )));
    }
    if n == 1 {
        return Ok((0, Layout::identity(1)));
    }
    let start = t.max_degree().div_ceil(2).max(1);
    for w in start..n {
        let mut search = BranchAndBound::new(t, w);
        if search.place(0) {
            let layout = Layout::from_order(&search.order)?;
            return Ok((w, layout));
        }
    }
    Err(Error::Invariant("no layout of width n - 1 found".into()))
}

struct BranchAndBound<'a> {
    t: &'a Tree,
    w: usize,
    order: Vec<usize>,
    pos: Vec<Option<usize>>,
    open: Vec<usize>,
}

impl<'a> BranchAndBound<'a> {
    fn new(t: &'a Tree, w: usize) -> Self {
        BranchAndBound {
            t,
            w,
            order: Vec::with_capacity(t.n()),
            pos: vec![None; t.n()],
            open: (0..t.n()).map(|v| t.degree(v)).collect(),
        }
    }

    /// Tries to fill positions `i..n`.
    fn place(&mut self, i: usize) -> bool {
        let n = self.t.n();
        if i == n {
            return true;
        }
        for v in 0..n {
            if self.pos[v].is_some() {
                continue;
            }
            if self.t.neighbors(v).iter().any(|&u| matches!(self.pos[u], Some(q) if i - q > self.w)) {
                continue;
            }
            self.pos[v] = Some(i);
            self.order.push(v);
            for &u in self.t.neighbors(v) {
                self.open[u] -= 1;
            }
            if self.feasible(i) && self.place(i + 1) {
                return true;
            }
            for &u in self.t.neighbors(v) {
                self.open[u] += 1;
            }
            self.order.pop();
            self.pos[v] = None;
        }
        false
    }

    /// Every placed vertex still needs room for its unplaced neighbours.
    fn feasible(&self, i: usize) -> bool {
        let lo = (i + 1).saturating_sub(self.w);
        self.order[..lo].iter().all(|&u| self.open[u] == 0)
            && (lo..=i).all(|q| {
                let u = self.order[q];
                self.open[u] <= q + self.w - i
            })
    }
}

/// Decides whether `bw(t) <= b`, returning a witness layout when it is.
pub fn saxe_decide(t: &Tree, b: usize) -> Result<Option<Layout>> {
    saxe_decide_with(t, b, &Guards::from_env()?)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct WindowKey {
    window: Vec<u32>,
    /// Per window vertex, a bit per neighbour slot that is still unplaced.
    dangling: Vec<u64>,
}

struct Node {
    placed: Vec<u64>,
    count: usize,
    parent: usize,
    vertex: usize,
}

/// Breadth-first search over states made of the last `b` placed vertices and
/// their dangling edges. The set of placed vertices is a function of that
/// pair in a connected graph, so it rides along without being part of the key.
pub fn saxe_decide_with(t: &Tree, b: usize, guards: &Guards) -> Result<Option<Layout>> {
    if b > guards.saxe_max_b {
        return Err(Error::TooLarge(format!(
            "state search is limited to b <= {}, asked for {b}",
            guards.saxe_max_b
        )));
    }
    let n = t.n();
    if n == 1 {
        return Ok(Some(Layout::identity(1)));
    }
    if b == 0 || t.max_degree() > 2 * b || t.max_degree() > 64 {
        return Ok(None);
    }
    let words = n.div_ceil(64);
    let is_placed = |mask: &[u64], v: usize| mask[v / 64] >> (v % 64) & 1 == 1;

    let mut nodes = vec![Node {
        placed: vec![0; words],
        count: 0,
        parent: usize::MAX,
        vertex: usize::MAX,
    }];
    let mut keys: Vec<WindowKey> = vec![WindowKey {
        window: Vec::new(),
        dangling: Vec::new(),
    }];
    let mut seen: HashMap<WindowKey, usize> = HashMap::new();
    seen.insert(keys[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(id) = queue.pop_front() {
        if nodes[id].count == n {
            let mut order = Vec::with_capacity(n);
            let mut cur = id;
            while nodes[cur].parent != usize::MAX {
                order.push(nodes[cur].vertex);
                cur = nodes[cur].parent;
            }
            order.reverse();
            return Ok(Some(Layout::from_order(&order)?));
        }
        let key = keys[id].clone();
        // the oldest window vertex must be closed by this step if the window is full
        let forced: Option<Vec<usize>> = if key.window.len() == b {
            let oldest = key.window[0] as usize;
            let slots = key.dangling[0];
            match slots.count_ones() {
                0 => None,
                1 => Some(vec![t.neighbors(oldest)[slots.trailing_zeros() as usize]]),
                _ => continue,
            }
        } else {
            None
        };
        let candidates: Vec<usize> = match forced {
            Some(v) => v,
            None => (0..n).filter(|&v| !is_placed(&nodes[id].placed, v)).collect(),
        };
        for v in candidates {
            let placed_nbrs_ok = t
                .neighbors(v)
                .iter()
                .all(|&u| !is_placed(&nodes[id].placed, u) || key.window.contains(&(u as u32)));
            if !placed_nbrs_ok {
                continue;
            }
            let mut window = key.window.clone();
            let mut dangling = key.dangling.clone();
            for (slot, &x) in window.iter().enumerate() {
                if let Ok(j) = t.neighbors(x as usize).binary_search(&v) {
                    dangling[slot] &= !(1u64 << j);
                }
            }
            let mut own = 0u64;
            for (j, &u) in t.neighbors(v).iter().enumerate() {
                if !is_placed(&nodes[id].placed, u) {
                    own |= 1 << j;
                }
            }
            window.push(v as u32);
            dangling.push(own);
            if window.len() > b {
                if dangling[0] != 0 {
                    continue;
                }
                window.remove(0);
                dangling.remove(0);
            }
            let next = WindowKey { window, dangling };
            if seen.contains_key(&next) {
                continue;
            }
            let mut placed = nodes[id].placed.clone();
            placed[v / 64] |= 1 << (v % 64);
            let nid = nodes.len();
            nodes.push(Node {
                placed,
                count: nodes[id].count + 1,
                parent: id,
                vertex: v,
            });
            seen.insert(next.clone(), nid);
            keys.push(next);
            queue.push_back(nid);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub center: Center,
    pub radius: usize,
    pub vertices: usize,
    pub diameter: usize,
    pub ratio: Ratio<u64>,
}

/// Exact local density: the maximum of `(|V'| - 1) / diam(G')` over connected
/// subgraphs. A subtree of diameter `d` sits inside the ball of radius
/// `floor(d / 2)` around its center vertex or center edge, and that ball has
/// diameter at most `d`. Scoring every ball against its nominal diameter
/// (`2r`, or `2r + 1` around an edge) never overestimates and is exact at the
/// optimum, where the witness diameter is the true one.
pub fn local_density(t: &Tree) -> Result<(Ratio<u64>, DensityWitness)> {
    let n = t.n();
    if n < 2 {
        return Err(Error::InvalidParameter("local density needs at least two vertices".into()));
    }
    let mut best: Option<DensityWitness> = None;
    let mut offer = |center: Center, radius: usize, vertices: usize, diameter: usize| {
        let ratio = Ratio::new((vertices - 1) as u64, diameter as u64);
        if best.as_ref().is_none_or(|b| ratio > b.ratio) {
            best = Some(DensityWitness {
                center,
                radius,
                vertices,
                diameter,
                ratio,
            });
        }
    };

    for v in 0..n {
        let hist = side_histogram_all(t, v);
        let mut count = 1;
        for (r, &c) in hist.iter().enumerate().skip(1) {
            count += c;
            offer(Center::Vertex(v), r, count, 2 * r);
        }
    }
    for (u, v) in t.edges() {
        let hu = side_histogram(t, u, v);
        let hv = side_histogram(t, v, u);
        let reach = hu.len().max(hv.len());
        let mut count = 0;
        for r in 0..reach {
            count += hu.get(r).copied().unwrap_or(0) + hv.get(r).copied().unwrap_or(0);
            offer(Center::Edge(u, v), r, count, 2 * r + 1);
        }
    }
    let w = best.expect("a tree with an edge has a ball");
    Ok((w.ratio, w))
}

/// Distance histogram of the whole tree measured from `root`.
fn side_histogram_all(t: &Tree, root: usize) -> Vec<usize> {
    let mut hist = Vec::new();
    for d in t.bfs_distances(root).into_iter().flatten() {
        if d >= hist.len() {
            hist.resize(d + 1, 0);
        }
        hist[d] += 1;
    }
    hist
}

/// Distance histogram of the component of `T - away` containing `root`,
/// measured from `root`.
fn side_histogram(t: &Tree, root: usize, away: usize) -> Vec<usize> {
    let mut hist = vec![1];
    let mut frontier = vec![(root, away)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (u, back) in frontier {
            for &w in t.neighbors(u) {
                if w != back {
                    next.push((w, u));
                }
            }
        }
        if !next.is_empty() {
            hist.push(next.len());
        }
        frontier = next;
    }
    hist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBounds {
    /// Smallest integer not below the local density.
    pub density_floor: usize,
    pub pathwidth: usize,
}

impl LowerBounds {
    pub fn best(&self) -> usize {
        self.density_floor.max(self.pathwidth)
    }
}

pub fn lower_bounds_report(t: &Tree) -> LowerBounds {
    let density_floor = if t.n() < 2 {
        0
    } else {
        let (d, _) = local_density(t).expect("n >= 2");
        d.ceil().to_integer() as usize
    };
    LowerBounds {
        density_floor,
        pathwidth: pathwidth(t),
    }
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
    fn brute_force_small_values() {
        let g = Guards::default();
        for (t, bw) in [(path(6), 1), (star(4), 2), (star(6), 3), (Tree::single_vertex(), 0)] {
            let (w, l) = exact_bandwidth_bruteforce_with(&t, &g).unwrap();
            assert_eq!(w, bw);
            assert_eq!(l.bandwidth(&t).unwrap(), bw);
        }
    }

    #[test]
    fn brute_force_guard() {
        let g = Guards { brute_max_n: 5, saxe_max_b: 4 };
        assert!(matches!(exact_bandwidth_bruteforce_with(&path(6), &g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn saxe_small_decisions() {
        let g = Guards::default();
        let l = saxe_decide_with(&path(8), 1, &g).unwrap().unwrap();
        assert_eq!(l.bandwidth(&path(8)).unwrap(), 1);
        assert!(saxe_decide_with(&star(4), 1, &g).unwrap().is_none());
        let l = saxe_decide_with(&star(4), 2, &g).unwrap().unwrap();
        assert!(l.bandwidth(&star(4)).unwrap() <= 2);
        assert!(matches!(saxe_decide_with(&path(3), 5, &g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn guard_parsing() {
        let g = Guards::parse("brute_n=12, saxe_b=5").unwrap();
        assert_eq!(g, Guards { brute_max_n: 12, saxe_max_b: 5 });
        assert_eq!(Guards::parse("").unwrap(), Guards::default());
        assert!(Guards::parse("nope=1").is_err());
        assert!(Guards::parse("brute_n").is_err());
    }

    #[test]
    fn density_examples() {
        let (d, _) = local_density(&path(7)).unwrap();
        assert_eq!(d, Ratio::from_integer(1));
        let (d, w) = local_density(&star(4)).unwrap();
        assert_eq!(d, Ratio::from_integer(2));
        assert_eq!((w.vertices, w.diameter), (5, 2));
        assert!(local_density(&Tree::single_vertex()).is_err());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(
            lower_bounds_report(&path(10)),
            LowerBounds { density_floor: 1, pathwidth: 1 }
        );
        assert_eq!(
            lower_bounds_report(&star(4)),
            LowerBounds { density_floor: 2, pathwidth: 1 }
        );
    }
}
