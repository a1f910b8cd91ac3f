//! Skewed Cantor combs: two smaller combs joined through a middle vertex that
//! carries a long stray.

use crate::error::{Error, Result};
use crate::graph::Tree;

/// One recursion step: the joining vertex, its stray and the ends of the
/// spine at that level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombLevel {
    pub depth: usize,
    pub middle: usize,
    pub stray: Vec<usize>,
    pub spine_ends: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewedComb {
    pub tree: Tree,
    pub x: usize,
    pub y: usize,
    pub depth: usize,
    pub b: usize,
    pub levels: Vec<CombLevel>,
}

struct Builder {
    next: usize,
    edges: Vec<(usize, usize)>,
    levels: Vec<CombLevel>,
    b: usize,
    slack: usize,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Returns the spine of the comb, from `x` to `y`.
    fn comb(&mut self, k: usize) -> Vec<usize> {
        if k == 1 {
            let (x, y) = (self.vertex(), self.vertex());
            self.edges.push((x, y));
            return vec![x, y];
        }
        let left = self.comb(k - 1);
        let middle = self.vertex();
        let right = self.comb(k - 1);
        self.edges.push((*left.last().unwrap(), middle));
        self.edges.push((middle, right[0]));
        // the farthest spine vertex is an end, one step past the far side
        let d = left.len().max(right.len());
        let len = self.slack * 2 * (self.b - 1) * d;
        let mut stray = Vec::with_capacity(len);
        let mut prev = middle;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            stray.push(v);
            prev = v;
        }
        let mut spine = left;
        spine.push(middle);
        spine.extend(right);
        self.levels.push(CombLevel {
            depth: k,
            middle,
            stray,
            spine_ends: (spine[0], *spine.last().unwrap()),
        });
        spine
    }
}

/// Builds `S_{b,k}` with joining paths of length 2 and strays of exactly
/// `slack * 2(b-1)d` vertices.
pub fn gen_skewed_comb(b: usize, k: usize, slack: usize) -> Result<SkewedComb> {
    if b < 2 {
        return Err(Error::InvalidParameter(format!("comb needs b >= 2, got {b}")));
    }
    if k == 0 || k > b {
        return Err(Error::InvalidParameter(format!("comb depth must be in 1..={b}, got {k}")));
    }
    if slack == 0 {
        return Err(Error::InvalidParameter("stray slack must be at least 1".into()));
    }
    let mut builder = Builder {
        next: 0,
        edges: Vec::new(),
        levels: Vec::new(),
        b,
        slack,
    };
    let spine = builder.comb(k);
    let tree = Tree::from_edges(builder.next, &builder.edges)?;
    let comb = SkewedComb {
        tree,
        x: spine[0],
        y: *spine.last().unwrap(),
        depth: k,
        b,
        levels: builder.levels,
    };
    validate_comb(&comb)?;
    Ok(comb)
}

/// Re-derives every level's spine distance from the tree itself and checks
/// the stray length requirement.
pub fn validate_comb(c: &SkewedComb) -> Result<()> {
    let t = &c.tree;
    for level in &c.levels {
        let dist = t.bfs_distances(level.middle);
        let (a, z) = level.spine_ends;
        let d = dist[a].unwrap().max(dist[z].unwrap());
        let need = 2 * (c.b - 1) * d;
        if level.stray.len() < need {
            return Err(Error::Invariant(format!(
                "depth {} stray has {} vertices, needs {need}",
                level.depth,
                level.stray.len()
            )));
        }
        let mut prev = level.middle;
        for &v in &level.stray {
            if !t.has_edge(prev, v) {
                return Err(Error::Invariant(format!("stray at depth {} is not a path", level.depth)));
            }
            prev = v;
        }
        if t.degree(prev) != 1 {
            return Err(Error::Invariant(format!("stray at depth {} does not end in a leaf", level.depth)));
        }
        if level.stray.iter().rev().skip(1).any(|&v| t.degree(v) != 2) {
            return Err(Error::Invariant(format!("stray at depth {} branches", level.depth)));
        }
    }
    Ok(())
}
