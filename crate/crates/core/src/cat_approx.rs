//! Caterpillar bandwidth within a factor of `48 b^3`.
//!
//! Strays are labelled with comb depths, oriented west or east by where the
//! deeper nested structure lies, turned into intervals on the line and
//! colored. The coloring decides the offset of each stray inside the gap
//! between consecutive, widely spaced backbone vertices.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use crate::decomposition::{caterpillar_view, CaterpillarView};
use crate::error::{Error, Result};
use crate::graph::{bandwidth_of_layout, compress, Layout, SparseLayout, Tree};

fn check_b(b: usize) -> Result<i64> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    i64::try_from(b).map_err(|_| Error::InvalidParameter(format!("b = {b} is too large")))
}

fn overflow() -> Error {
    Error::TooLarge("layout coordinates overflow 64-bit integers".into())
}

/// `48 b^3`, the backbone spacing and the approximation ratio.
pub fn ratio_bound(b: usize) -> Result<i64> {
    let b = check_b(b)?;
    b.checked_mul(b)
        .and_then(|x| x.checked_mul(b))
        .and_then(|x| x.checked_mul(48))
        .ok_or_else(overflow)
}

/// `12 b^2`, the width of one stray slot and the coloring threshold.
pub fn slot_width(b: usize) -> Result<i64> {
    let b = check_b(b)?;
    b.checked_mul(b).and_then(|x| x.checked_mul(12)).ok_or_else(overflow)
}

/// Strays `P` whose window reaches `Q` from the west (`X_Q`) and from the
/// east (`Y_Q`). Comparisons of `pos +- |P| / 2b` are scaled by `2b`.
pub fn neighbor_sets(view: &CaterpillarView, b: usize, q: usize) -> (Vec<usize>, Vec<usize>) {
    let two_b = 2 * b as i64;
    let at = |i: usize| (two_b * view.strays[i].pos as i64, view.strays[i].len() as i64);
    let (pq, lq) = at(q);
    let mut west = Vec::new();
    let mut east = Vec::new();
    for p in 0..view.strays.len() {
        if p == q {
            continue;
        }
        let (pp, lp) = at(p);
        if pp + lp < pq && pq - lq <= pp - lp {
            west.push(p);
        }
        if pq < pp - lp && pp + lp <= pq + lq {
            east.push(p);
        }
    }
    (west, east)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthFunction {
    /// Indexed like `CaterpillarView::strays`.
    pub depths: Vec<usize>,
    pub increments: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SccOutcome {
    Depths(DepthFunction),
    /// Stray `stray` reached depth `b + 1`, which certifies `bw > b`.
    DeepComb { stray: usize, depth: usize },
}

fn max_depth(depths: &[usize], set: &[usize]) -> usize {
    set.iter().map(|&p| depths[p]).max().unwrap_or(0)
}

/// Raises depths while some lifted stray sees depth at least its own on
/// both sides. Strays are scanned by ascending position and the scan
/// restarts after every increment.
pub fn find_scc(view: &CaterpillarView, b: usize) -> SccOutcome {
    let s = view.strays.len();
    let sets: Vec<(Vec<usize>, Vec<usize>)> = (0..s).map(|q| neighbor_sets(view, b, q)).collect();
    let mut depths: Vec<usize> = view
        .strays
        .iter()
        .map(|p| if p.len() >= 4 * b { 2 } else { 0 })
        .collect();
    if let Some(q) = depths.iter().position(|&d| d > b) {
        return SccOutcome::DeepComb { stray: q, depth: depths[q] };
    }
    let mut increments = 0;
    'scan: loop {
        for q in 0..s {
            let d = depths[q];
            if d < 2 {
                continue;
            }
            let x = max_depth(&depths, &sets[q].0);
            let y = max_depth(&depths, &sets[q].1);
            if x == y && x >= d {
                depths[q] = d + 1;
                increments += 1;
                assert!(increments <= (b - 1) * s, "depth increments exceed (b - 1) * strays");
                if depths[q] == b + 1 {
                    return SccOutcome::DeepComb { stray: q, depth: b + 1 };
                }
                continue 'scan;
            }
        }
        return SccOutcome::Depths(DepthFunction { depths, increments });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Push {
    West,
    East,
    Lifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PushState {
    pub x: usize,
    pub y: usize,
    pub push: Push,
}

pub fn push_states(view: &CaterpillarView, depth: &DepthFunction, b: usize) -> Vec<PushState> {
    (0..view.strays.len())
        .map(|q| {
            let (west, east) = neighbor_sets(view, b, q);
            let x = max_depth(&depth.depths, &west);
            let y = max_depth(&depth.depths, &east);
            let push = match x.cmp(&y) {
                std::cmp::Ordering::Less => Push::West,
                std::cmp::Ordering::Greater => Push::East,
                std::cmp::Ordering::Equal => Push::Lifted,
            };
            PushState { x, y, push }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    West,
    East,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrayInterval {
    pub stray: usize,
    pub lo: i64,
    pub hi: i64,
    pub orientation: Orientation,
}

impl StrayInterval {
    pub fn intersects(&self, other: &StrayInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One interval per stray; lifted strays are laid out eastward.
pub fn directional_stray_graph(view: &CaterpillarView, depth: &DepthFunction, b: usize) -> Result<Vec<StrayInterval>> {
    let big = ratio_bound(b)?;
    let slot = slot_width(b)?;
    push_states(view, depth, b)
        .into_iter()
        .enumerate()
        .map(|(i, st)| {
            let p = &view.strays[i];
            let anchor = big.checked_mul(p.pos as i64).ok_or_else(overflow)?;
            let reach = slot.checked_mul(p.len() as i64).ok_or_else(overflow)?;
            let orientation = if st.push == Push::West {
                Orientation::West
            } else {
                Orientation::East
            };
            let (lo, hi) = match orientation {
                Orientation::West => (anchor.checked_sub(reach).ok_or_else(overflow)?, anchor),
                Orientation::East => (anchor, anchor.checked_add(reach).ok_or_else(overflow)?),
            };
            Ok(StrayInterval {
                stray: i,
                lo,
                hi,
                orientation,
            })
        })
        .collect()
}

/// Greedy coloring of closed intervals in order of left endpoint. Returns
/// 1-based colors in input order and the number of colors, which equals the
/// largest number of intervals sharing a point.
pub fn color_intervals(intervals: &[StrayInterval]) -> (Vec<usize>, usize) {
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by_key(|&i| (intervals[i].lo, intervals[i].hi, intervals[i].stray));
    let mut colors = vec![0; intervals.len()];
    let mut active: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
    let mut free: BTreeSet<usize> = BTreeSet::new();
    let mut used = 0;
    for i in order {
        let iv = intervals[i];
        while let Some(&Reverse((hi, c))) = active.peek() {
            if hi >= iv.lo {
                break;
            }
            active.pop();
            free.insert(c);
        }
        let c = match free.pop_first() {
            Some(c) => c,
            None => {
                used += 1;
                used
            }
        };
        colors[i] = c;
        active.push(Reverse((iv.hi, c)));
    }
    (colors, used)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The stray interval graph needs at least `12 b^2` colors.
    ChromaticNumber { chi: usize, threshold: i64 },
    /// A nested comb of depth `b + 1` was found around stray `stray`.
    DeepComb { stray: usize, depth: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::ChromaticNumber { chi, threshold } => {
                write!(f, "stray interval graph needs {chi} colors (threshold {threshold})")
            }
            Rejection::DeepComb { stray, depth } => {
                write!(f, "stray {stray} reached comb depth {depth}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatOutcome {
    Layout {
        layout: Layout,
        /// The injective placement before compression.
        sparse: SparseLayout,
        chi: usize,
    },
    Exceeds(Rejection),
}

impl CatOutcome {
    pub fn layout(&self) -> Option<&Layout> {
        match self {
            CatOutcome::Layout { layout, .. } => Some(layout),
            CatOutcome::Exceeds(_) => None,
        }
    }

    pub fn is_rejection(&self) -> bool {
        matches!(self, CatOutcome::Exceeds(_))
    }
}

/// Returns a layout of bandwidth at most `48 b^3`, or a certificate that the
/// bandwidth of `t` exceeds `b`.
pub fn cat_alg(t: &Tree, b: usize) -> Result<CatOutcome> {
    let big = ratio_bound(b)?;
    let slot = slot_width(b)?;
    let view = caterpillar_view(t)?;
    let depth = match find_scc(&view, b) {
        SccOutcome::Depths(d) => d,
        SccOutcome::DeepComb { stray, depth } => {
            return Ok(CatOutcome::Exceeds(Rejection::DeepComb { stray, depth }));
        }
    };
    let intervals = directional_stray_graph(&view, &depth, b)?;
    let (colors, chi) = color_intervals(&intervals);
    if chi as i64 >= slot {
        return Ok(CatOutcome::Exceeds(Rejection::ChromaticNumber { chi, threshold: slot }));
    }

    let n = t.n() as i64;
    let mut pos = vec![0i64; t.n()];
    let mut anchor = Vec::with_capacity(view.backbone.len());
    for (i, &v) in view.backbone.iter().enumerate() {
        let a = (n + i as i64 + 1).checked_mul(big).ok_or_else(overflow)?;
        pos[v] = a;
        anchor.push(a);
    }
    for (k, p) in view.strays.iter().enumerate() {
        let base = anchor[p.pos - 1] + colors[k] as i64;
        for (i, &v) in p.vertices.iter().enumerate() {
            let i = i as i64 + 1;
            let off = match intervals[k].orientation {
                Orientation::West => -(i * slot),
                Orientation::East => (i - 1) * slot,
            };
            pos[v] = base.checked_add(off).ok_or_else(overflow)?;
        }
    }
    let sparse = SparseLayout::new(pos)
        .map_err(|e| Error::Invariant(format!("sparse caterpillar layout is not injective: {e}")))?;
    let layout = compress(t, &sparse)?;
    let bw = bandwidth_of_layout(t, &layout)?;
    if bw > big as u64 {
        return Err(Error::Invariant(format!("layout bandwidth {bw} exceeds 48b^3 = {big}")));
    }
    Ok(CatOutcome::Layout { layout, sparse, chi })
}
