//! Tree bandwidth within a factor of `(768 b^3)^p` for trees of pathwidth at
//! most `p`, by recursion on path decompositions down to caterpillars.

use serde::Serialize;

use crate::cat_approx::{cat_alg, CatOutcome};
use crate::decomposition::{pathwidth, recursive_path_decomposition, simplified_instance};
use crate::error::{Error, Result};
use crate::graph::{bandwidth_of_layout, right_fold, Layout, Tree};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeAlgOptions {
    /// Recurse into each hanging subtree with its own pathwidth (at least 1)
    /// instead of `p - 1`.
    pub tighten_p: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub level: usize,
    pub vertices: usize,
    pub p: usize,
    pub b: usize,
    pub path_len: usize,
    pub subtrees: usize,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeOutcome {
    Layout(Layout),
    /// `bw > b`, with the reason reported by the rejecting call.
    Exceeds { b: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub outcome: TreeOutcome,
    /// Certified bandwidth bound: `768 b^3` for each recursion level that was
    /// used, so at most `(768 b^3)^p`. Saturating.
    pub ratio_bound: u128,
    pub trace: Vec<TraceEntry>,
}

impl ApproxResult {
    pub fn layout(&self) -> Option<&Layout> {
        match &self.outcome {
            TreeOutcome::Layout(l) => Some(l),
            TreeOutcome::Exceeds { .. } => None,
        }
    }
}

fn unit(b: usize) -> u128 {
    768u128.saturating_mul((b as u128).saturating_pow(3))
}

pub fn tree_alg(t: &Tree, p: usize, b: usize) -> Result<ApproxResult> {
    tree_alg_with(t, p, b, TreeAlgOptions::default())
}

pub fn tree_alg_with(t: &Tree, p: usize, b: usize, opts: TreeAlgOptions) -> Result<ApproxResult> {
    if p == 0 || b == 0 {
        return Err(Error::InvalidParameter("p and b must be at least 1".into()));
    }
    let pw = pathwidth(t);
    if pw > p {
        return Err(Error::PathwidthExceeded { pathwidth: pw, bound: p });
    }
    let mut trace = Vec::new();
    let (outcome, ratio_bound) = match recurse(t, p, b, opts, 0, &mut trace)? {
        Ok((layout, bound)) => (TreeOutcome::Layout(layout), bound),
        Err(reason) => (TreeOutcome::Exceeds { b, reason }, unit(b).saturating_pow(p as u32)),
    };
    Ok(ApproxResult {
        outcome,
        ratio_bound,
        trace,
    })
}

type Level = std::result::Result<(Layout, u128), String>;

fn recurse(t: &Tree, p: usize, b: usize, opts: TreeAlgOptions, level: usize, trace: &mut Vec<TraceEntry>) -> Result<Level> {
    let mut entry = TraceEntry {
        level,
        vertices: t.n(),
        p,
        b,
        path_len: t.n(),
        subtrees: 0,
        outcome: String::new(),
    };
    if p == 1 {
        let out = cat_alg(t, b)?;
        let result = match out {
            CatOutcome::Layout { layout, .. } => {
                entry.outcome = "layout".into();
                Ok((layout, unit(b)))
            }
            CatOutcome::Exceeds(r) => {
                entry.outcome = format!("exceeds: {r}");
                Err(entry.outcome.clone())
            }
        };
        trace.push(entry);
        return Ok(result);
    }

    let d = recursive_path_decomposition(t, p)?;
    entry.path_len = d.path.len();
    entry.subtrees = d.subtrees.len();
    let mut folded = Vec::with_capacity(d.subtrees.len());
    let mut unfolded = Vec::with_capacity(d.subtrees.len());
    let mut inner_bound = 1u128;
    for sub in &d.subtrees {
        let (st, _) = t.induced(&sub.vertices)?;
        let sp = if opts.tighten_p { pathwidth(&st).max(1) } else { p - 1 };
        match recurse(&st, sp, b, opts, level + 1, trace)? {
            Ok((alpha, bound)) => {
                // local vertex 0 is the attachment vertex
                let touching: Vec<usize> = sub
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| t.neighbors(v).iter().any(|w| d.path.contains(w)))
                    .map(|(i, _)| i)
                    .collect();
                if touching != [0] {
                    return Err(Error::Invariant(format!(
                        "subtree attached to the path through {} vertices",
                        touching.len()
                    )));
                }
                folded.push(right_fold(&st, &alpha, 0)?);
                unfolded.push(alpha);
                inner_bound = inner_bound.max(bound);
            }
            Err(reason) => {
                entry.outcome = "exceeds in a subtree".into();
                trace.push(entry);
                return Ok(Err(reason));
            }
        }
    }

    let simple = simplified_instance(t, &d)?;
    let alpha_s = match cat_alg(&simple.tree, 2 * b)? {
        CatOutcome::Layout { layout, .. } => layout,
        CatOutcome::Exceeds(r) => {
            entry.outcome = format!("simplified instance exceeds 2b: {r}");
            let reason = entry.outcome.clone();
            trace.push(entry);
            return Ok(Err(reason));
        }
    };

    let n = t.n();
    let mut ranks = vec![0usize; n];
    for &v in &d.path {
        ranks[v] = alpha_s.rank(v);
    }
    for (i, sub) in d.subtrees.iter().enumerate() {
        let pendant = &simple.pendants[i];
        if pendant.len() != sub.vertices.len() {
            return Err(Error::Invariant("pendant path length differs from subtree size".into()));
        }
        for (x, &v) in sub.vertices.iter().enumerate() {
            let dist = folded[i].rank(x);
            ranks[v] = alpha_s.rank(pendant[dist - 1]);
        }
    }
    let layout = Layout::new(ranks).map_err(|e| Error::Invariant(format!("combined layout is not a bijection: {e}")))?;

    check_stretch(t, &d.path, &d.subtrees, &layout, &folded, &unfolded, b)?;
    let bound = unit(b).saturating_mul(inner_bound);
    let bw = bandwidth_of_layout(t, &layout)? as u128;
    if bw > bound {
        return Err(Error::Invariant(format!("layout bandwidth {bw} exceeds the bound {bound}")));
    }
    entry.outcome = "layout".into();
    trace.push(entry);
    Ok(Ok((layout, bound)))
}

/// Per-edge stretch limits: `384 b^3` on and next to the path, and
/// `768 b^3` per unit of recursive stretch inside a subtree.
fn check_stretch(
    t: &Tree,
    path: &[usize],
    subtrees: &[crate::decomposition::HangingSubtree],
    layout: &Layout,
    folded: &[Layout],
    unfolded: &[Layout],
    b: usize,
) -> Result<()> {
    let n = t.n();
    let half = unit(b) / 2;
    let mut part = vec![(usize::MAX, 0usize); n];
    for (i, sub) in subtrees.iter().enumerate() {
        for (x, &v) in sub.vertices.iter().enumerate() {
            part[v] = (i, x);
        }
    }
    let on_path = |v: usize| part[v].0 == usize::MAX;
    debug_assert!(path.iter().all(|&v| on_path(v)));
    for (u, v) in t.edges() {
        let stretch = layout.rank(u).abs_diff(layout.rank(v)) as u128;
        let (limit, case) = match (on_path(u), on_path(v)) {
            (true, true) => (half, "path edge"),
            (true, false) | (false, true) => (half, "attachment edge"),
            (false, false) => {
                let ((i, x), (_, y)) = (part[u], part[v]);
                let f = folded[i].rank(x).abs_diff(folded[i].rank(y)) as u128;
                let a = unfolded[i].rank(x).abs_diff(unfolded[i].rank(y)) as u128;
                if stretch > f.saturating_mul(half) {
                    return Err(Error::Invariant(format!(
                        "subtree edge ({u}, {v}) stretched to {stretch}, folded distance {f}"
                    )));
                }
                (a.saturating_mul(unit(b)), "subtree edge")
            }
        };
        if stretch > limit {
            return Err(Error::Invariant(format!("{case} ({u}, {v}) stretched to {stretch}, limit {limit}")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DriverResult {
    /// Smallest accepted `b`; every smaller value was rejected, so the exact
    /// bandwidth is at least this.
    pub b_star: usize,
    pub p: usize,
    pub layout: Layout,
    pub ratio_bound: u128,
    pub trace: Vec<TraceEntry>,
}

/// Scans `b` upward from `max(1, pw)` until the tree algorithm accepts.
pub fn approximate_bandwidth(t: &Tree) -> Result<DriverResult> {
    approximate_bandwidth_with(t, TreeAlgOptions::default())
}

pub fn approximate_bandwidth_with(t: &Tree, opts: TreeAlgOptions) -> Result<DriverResult> {
    let p = pathwidth(t).max(1);
    let mut trace = Vec::new();
    for b in p..=t.n().max(1) {
        let run = tree_alg_with(t, p, b, opts)?;
        trace.extend(run.trace);
        if let TreeOutcome::Layout(layout) = run.outcome {
            return Ok(DriverResult {
                b_star: b,
                p,
                layout,
                ratio_bound: run.ratio_bound,
                trace,
            });
        }
    }
    Err(Error::Invariant("every b up to n was rejected".into()))
}
