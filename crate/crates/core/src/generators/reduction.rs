//! The hardness reduction from Even Clique: sector layout on a main path,
//! threads carrying the adjacency matrix, fillers, and exact size accounting.
//!
//! Main path vertices are `u_1 .. u_L`; thread vertices are `t_2, t_3, ..`
//! with `t_2 = u_2`. Every honest instance is far too large to build, so
//! sizes are computed in big integers, and a demo mode builds the same shape
//! with small, user supplied sector constants.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::decomposition::pathwidth;
use crate::error::{Error, Result};
use crate::generators::gadgets::{build_gadget, GadgetKind, GadgetSpec};
use crate::graph::Tree;

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

fn as_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub const SECTORS: [&str; 9] = [
    "first wall",
    "first wasteland",
    "first gateland",
    "selector",
    "middle gateland",
    "validator",
    "last gateland",
    "last wasteland",
    "last wall",
];

/// Small sector constants for structural testing. Instances built with them
/// carry no bandwidth guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DemoScale {
    /// Index `m_1` where the first gateland starts (at least 2).
    pub wasteland: usize,
    /// Gate count of each of the three k-gatelands.
    pub gates: usize,
    /// Trailing (k+1)-gates of the selector and of the validator.
    pub tail_gates: usize,
    /// Main path vertices from the end of the last gateland up to the last
    /// wall (at least 1).
    pub last_wasteland: usize,
    pub thread_extension: usize,
    pub filler_first: usize,
    pub filler_second: usize,
}

impl Default for DemoScale {
    fn default() -> Self {
        DemoScale {
            wasteland: 6,
            gates: 2,
            tail_gates: 1,
            last_wasteland: 4,
            thread_extension: 3,
            filler_first: 5,
            filler_second: 5,
        }
    }
}

/// Sector constants of one instance, honest or demo.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub b: usize,
    pub p: usize,
    pub demo: bool,
    pub m1: BigUint,
    pub gates_first: BigUint,
    pub selector_tail_gates: BigUint,
    pub gates_middle: BigUint,
    pub validator_tail_gates: BigUint,
    pub gates_last: BigUint,
    pub last_wasteland: BigUint,
    pub thread_extension: BigUint,
    pub filler_first: BigUint,
    pub filler_second: BigUint,
}

fn check_source(n: usize, k: usize, m: usize) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be even and at least 2, got {k}")));
    }
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!("{m} edges do not fit on {n} vertices")));
    }
    Ok(())
}

impl ReductionPlan {
    pub fn honest(n: usize, k: usize, m: usize) -> Result<ReductionPlan> {
        check_source(n, k, m)?;
        let b = 4 * k + 16;
        let p = 4 * n + 3;
        let (bb, two_b1) = (big(b), big(2 * b + 1));
        let m1 = big(p * n * k + 2);
        let sel_core = big(p * (n - 1) + 3);
        let val_core = big((2 * n - 1) * (4 * n + 3));
        let m2 = &two_b1 * &m1 + &two_b1 * &sel_core;
        let m3 = &two_b1 * &m2 + &two_b1 * &val_core;

        let f1 = big((n - k) * (3 * b / 2 - k - 2)) + &two_b1 * &sel_core;
        let zones = BigInt::from((4 * n + 3) * (2 * n - 1));
        let f2 = BigInt::from(b - 1) * &zones + BigInt::from(2 * b) * &zones
            - (BigInt::from(k) * &zones
                + BigInt::from(k) * (BigInt::from(n * (3 * b / 2 - k - 2) + n * n - n) - BigInt::from(2 * m))
                + BigInt::from(2 * n * (3 * b / 4 - k - 2)));
        let f2 = f2
            .to_biguint()
            .ok_or_else(|| Error::InvalidParameter(format!("second filler length is negative ({f2})")))?;

        Ok(ReductionPlan {
            n,
            k,
            m,
            b,
            p,
            demo: false,
            gates_first: &bb * &m1,
            m1,
            selector_tail_gates: &bb * &sel_core,
            gates_middle: &bb * &m2,
            validator_tail_gates: &bb * &val_core,
            gates_last: &bb * &m3,
            last_wasteland: (&bb * &bb - 1u32) * &two_b1 * &m3 + 1u32,
            thread_extension: &bb * &two_b1 * &m3,
            filler_first: f1,
            filler_second: f2,
        })
    }

    pub fn demo(n: usize, k: usize, m: usize, scale: &DemoScale) -> Result<ReductionPlan> {
        check_source(n, k, m)?;
        if scale.wasteland < 2 {
            return Err(Error::InvalidParameter("demo wasteland must reach index 2".into()));
        }
        if scale.last_wasteland == 0 {
            return Err(Error::InvalidParameter("demo last wasteland needs at least one vertex".into()));
        }
        Ok(ReductionPlan {
            n,
            k,
            m,
            b: 4 * k + 16,
            p: 4 * n + 3,
            demo: true,
            m1: big(scale.wasteland),
            gates_first: big(scale.gates),
            selector_tail_gates: big(scale.tail_gates),
            gates_middle: big(scale.gates),
            validator_tail_gates: big(scale.tail_gates),
            gates_last: big(scale.gates),
            last_wasteland: big(scale.last_wasteland),
            thread_extension: big(scale.thread_extension),
            filler_first: big(scale.filler_first),
            filler_second: big(scale.filler_second),
        })
    }

    fn selector_core(&self) -> BigUint {
        big(self.p * (self.n - 1) + 3)
    }

    fn validator_core(&self) -> BigUint {
        big((2 * self.n - 1) * (4 * self.n + 3))
    }

    pub fn selector_start(&self) -> BigUint {
        &self.m1 + 2u32 * &self.gates_first
    }

    pub fn middle_start(&self) -> BigUint {
        self.selector_start() + self.selector_core() + 2u32 * &self.selector_tail_gates
    }

    pub fn validator_start(&self) -> BigUint {
        self.middle_start() + 2u32 * &self.gates_middle
    }

    pub fn last_gateland_start(&self) -> BigUint {
        self.validator_start() + self.validator_core() + 2u32 * &self.validator_tail_gates
    }

    pub fn last_wasteland_start(&self) -> BigUint {
        self.last_gateland_start() + 2u32 * &self.gates_last
    }

    /// Index `L` of the last wall center, which is also the main path length.
    pub fn main_path_len(&self) -> BigUint {
        self.last_wasteland_start() + &self.last_wasteland
    }

    /// Thread index of the first matrix block.
    pub fn blocks_start(&self) -> BigUint {
        self.validator_start() + big((self.n - 1) * (4 * self.n + 3))
    }

    /// Largest thread index.
    pub fn thread_last(&self) -> BigUint {
        self.blocks_start() + big(self.n * (4 * self.n + 3)) - 1u32 + &self.thread_extension
    }

    /// Thread path vertices beyond the shared `t_2 = u_2`.
    pub fn thread_len(&self) -> BigUint {
        self.thread_last() - 2u32
    }

    /// Half-open main path index ranges, in sector order.
    pub fn sector_ranges(&self) -> Vec<(&'static str, BigUint, BigUint)> {
        let l = self.main_path_len();
        let cuts = [
            big(1),
            big(2),
            self.m1.clone(),
            self.selector_start(),
            self.middle_start(),
            self.validator_start(),
            self.last_gateland_start(),
            self.last_wasteland_start(),
            l.clone(),
            l + 1u32,
        ];
        SECTORS
            .iter()
            .enumerate()
            .map(|(i, &name)| (name, cuts[i].clone(), cuts[i + 1].clone()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorCount {
    pub name: &'static str,
    #[serde(serialize_with = "as_decimal")]
    pub start: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub end: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub path_vertices: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub extra_vertices: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub sector: &'static str,
    pub gadget: String,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigUint,
    pub exclusive_each: usize,
    #[serde(serialize_with = "as_decimal")]
    pub exclusive_total: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionSizes {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub b: usize,
    pub p: usize,
    pub demo: bool,
    #[serde(serialize_with = "as_decimal")]
    pub m1: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub m2: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub m3: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub main_path: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub thread_len: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub filler_first: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub filler_second: BigUint,
    pub sectors: Vec<SectorCount>,
    #[serde(serialize_with = "as_decimal")]
    pub threads_total: BigUint,
    pub census: Vec<CensusRow>,
    /// Sum over sectors, threads and fillers.
    #[serde(serialize_with = "as_decimal")]
    pub total: BigUint,
    /// Sum over gadget instances plus bare path vertices.
    #[serde(serialize_with = "as_decimal")]
    pub census_total: BigUint,
    pub consistent: bool,
    pub notes: Vec<String>,
}

pub fn reduction_sizes(n: usize, k: usize, m: usize) -> Result<ReductionSizes> {
    let plan = ReductionPlan::honest(n, k, m)?;
    let sizes = sizes_of(&plan)?;
    // the sector chain must land on the closed forms
    let b = big(plan.b);
    let two_b1 = big(2 * plan.b + 1);
    let expect_l = &b * &b * &two_b1 * &sizes.m3 + 1u32;
    if sizes.main_path != expect_l || plan.selector_start() != &two_b1 * &plan.m1 {
        return Err(Error::Invariant("sector positions disagree with the closed forms".into()));
    }
    Ok(sizes)
}

pub fn sizes_of(plan: &ReductionPlan) -> Result<ReductionSizes> {
    let (n, k, m, b, p) = (plan.n, plan.k, plan.m, plan.b, plan.p);

    // route A: closed-form leaf counts per sector
    let gate_k = big(2 * (b - k - 1));
    let gate_k1 = big(2 * (b - k - 2));
    let hole_k1 = big(2 * (3 * b / 4 - k - 2));
    let knot_k1 = big(3 * b / 2 - k - 2);
    let wall = big(2 * b - 1);
    let between = big((n - 1) * (p - 3) / 2);
    let extras = [
        wall.clone(),
        BigUint::zero(),
        &plan.gates_first * &gate_k,
        big(n) * &hole_k1 + (&between + &plan.selector_tail_gates) * &gate_k1,
        &plan.gates_middle * &gate_k,
        big(n) * &hole_k1 + &plan.validator_tail_gates * &gate_k1,
        &plan.gates_last * &gate_k,
        BigUint::zero(),
        wall,
    ];
    let sectors: Vec<SectorCount> = plan
        .sector_ranges()
        .into_iter()
        .zip(extras)
        .map(|((name, start, end), extra)| SectorCount {
            name,
            path_vertices: &end - &start,
            start,
            end,
            extra_vertices: extra,
        })
        .collect();
    let non_neighbour = n * (n - 1) - 2 * m;
    let threads_total = big(k) * (plan.thread_len() + big(n + 1) * &knot_k1 + big(non_neighbour));
    let total = sectors
        .iter()
        .map(|s| &s.path_vertices + &s.extra_vertices)
        .sum::<BigUint>()
        + &threads_total
        + &plan.filler_first
        + &plan.filler_second;

    // route B: gadget instances built and counted
    let exclusive = |kind: GadgetKind| -> Result<usize> {
        let g = build_gadget(GadgetSpec::new(kind, b)?)?;
        Ok(g.tree.n() - g.spec.on_path())
    };
    let mut census = Vec::new();
    let mut row = |sector: &'static str, gadget: String, count: BigUint, each: usize| {
        census.push(CensusRow {
            sector,
            gadget,
            exclusive_total: &count * big(each),
            count,
            exclusive_each: each,
        });
    };
    let (wall_x, gate_x, gate1_x) = (
        exclusive(GadgetKind::Wall)?,
        exclusive(GadgetKind::Gate(k))?,
        exclusive(GadgetKind::Gate(k + 1))?,
    );
    let (hole_x, knot_x) = (exclusive(GadgetKind::Hole(k + 1))?, exclusive(GadgetKind::Knot(k + 1))?);
    row("first wall", GadgetKind::Wall.to_string(), big(1), wall_x);
    row("first gateland", GadgetKind::Gate(k).to_string(), plan.gates_first.clone(), gate_x);
    row("selector", GadgetKind::Hole(k + 1).to_string(), big(n), hole_x);
    row(
        "selector",
        GadgetKind::Gate(k + 1).to_string(),
        big((n - 1) * (p - 3) / 2) + &plan.selector_tail_gates,
        gate1_x,
    );
    row("middle gateland", GadgetKind::Gate(k).to_string(), plan.gates_middle.clone(), gate_x);
    row("validator", GadgetKind::Hole(k + 1).to_string(), big(n), hole_x);
    row("validator", GadgetKind::Gate(k + 1).to_string(), plan.validator_tail_gates.clone(), gate1_x);
    row("last gateland", GadgetKind::Gate(k).to_string(), plan.gates_last.clone(), gate_x);
    row("last wall", GadgetKind::Wall.to_string(), big(1), wall_x);
    row("threads", GadgetKind::Knot(k + 1).to_string(), big(k * (n + 1)), knot_x);
    row("threads", "non-neighbour leaf".into(), big(k) * big(non_neighbour), 1);
    let census_total = census.iter().map(|r| &r.exclusive_total).sum::<BigUint>()
        + plan.main_path_len()
        + big(k) * plan.thread_len()
        + &plan.filler_first
        + &plan.filler_second;

    let knot_def = GadgetSpec::new(GadgetKind::Knot(k + 1), b)?.leaves_per_center();
    let hole_def = GadgetSpec::new(GadgetKind::Hole(k + 1), b)?.leaves_per_center();
    let notes = vec![
        format!(
            "(k+1)-knot: {knot_def} leaves by definition, filler term 3b/2-k-2 = {}{}",
            3 * b / 2 - k - 2,
            if knot_def == 3 * b / 2 - k - 2 { ", consistent" } else { ", MISMATCH" }
        ),
        format!(
            "(k+1)-hole: {hole_def} leaves per center by definition, filler term 3b/4-k-2 = {}{}",
            3 * b / 4 - k - 2,
            if hole_def == 3 * b / 4 - k - 2 { ", consistent" } else { ", MISMATCH" }
        ),
        format!("filler formula uses m = |E(G)| = {m}; non-neighbour leaves per thread = {non_neighbour}"),
    ];

    Ok(ReductionSizes {
        n,
        k,
        m,
        b,
        p,
        demo: plan.demo,
        m1: plan.m1.clone(),
        m2: plan.middle_start(),
        m3: plan.last_gateland_start(),
        main_path: plan.main_path_len(),
        thread_len: plan.thread_len(),
        filler_first: plan.filler_first.clone(),
        filler_second: plan.filler_second.clone(),
        sectors,
        threads_total,
        consistent: total == census_total,
        census,
        total,
        census_total,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    PathVertex,
    WallCenter,
    GateCenter,
    HoleCenter,
    GadgetLeaf,
    ThreadAttachment,
    FillerAttachment,
    ThreadVertex,
    KnotCenter,
    /// A thread vertex carrying a non-neighbour leaf.
    Danglement,
    DanglementLeaf,
    FillerVertex,
}

impl Role {
    /// Roles allowed to have degree 3 or more.
    pub fn may_branch(self) -> bool {
        matches!(
            self,
            Role::WallCenter
                | Role::GateCenter
                | Role::HoleCenter
                | Role::KnotCenter
                | Role::ThreadAttachment
                | Role::FillerAttachment
                | Role::Danglement
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorSpan {
    pub name: &'static str,
    /// Half-open range of main path indices.
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub vertices: usize,
    pub census_match: bool,
    pub sector_order: bool,
    pub roles_ok: bool,
    pub max_sector_pathwidth: usize,
    pub pathwidth: usize,
}

#[derive(Debug, Clone)]
pub struct MaterializedReduction {
    pub tree: Tree,
    pub roles: Vec<Role>,
    pub sectors: Vec<SectorSpan>,
    pub sizes: ReductionSizes,
    pub report: ValidationReport,
}

/// Builds the honest instance if it fits in `budget` vertices; otherwise
/// reports the exact total.
pub fn materialize_reduction(n: usize, k: usize, edges: &[(usize, usize)], budget: u64) -> Result<MaterializedReduction> {
    let plan = ReductionPlan::honest(n, k, edges.len())?;
    let sizes = sizes_of(&plan)?;
    if sizes.total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            total: sizes.total,
            budget,
        });
    }
    build(&plan, sizes, edges)
}

/// Builds a scaled-down instance with the same sector structure.
pub fn materialize_demo(n: usize, k: usize, edges: &[(usize, usize)], scale: &DemoScale) -> Result<MaterializedReduction> {
    let plan = ReductionPlan::demo(n, k, edges.len(), scale)?;
    let sizes = sizes_of(&plan)?;
    build(&plan, sizes, edges)
}

fn small(x: &BigUint) -> Result<usize> {
    x.to_usize()
        .ok_or_else(|| Error::TooLarge(format!("{x} does not fit in memory indices")))
}

struct Assembly {
    edges: Vec<(usize, usize)>,
    roles: Vec<Role>,
    sector: Vec<Option<usize>>,
}

impl Assembly {
    fn add(&mut self, role: Role, sector: Option<usize>) -> usize {
        self.roles.push(role);
        self.sector.push(sector);
        self.roles.len() - 1
    }

    fn leaves(&mut self, center: usize, count: usize, role: Role, sector: Option<usize>) {
        for _ in 0..count {
            let v = self.add(role, sector);
            self.edges.push((center, v));
        }
    }

    fn pendant_path(&mut self, at: usize, len: usize, role: Role) -> Vec<usize> {
        let mut prev = at;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let v = self.add(role, None);
            self.edges.push((prev, v));
            out.push(v);
            prev = v;
        }
        out
    }
}

fn build(plan: &ReductionPlan, sizes: ReductionSizes, g_edges: &[(usize, usize)]) -> Result<MaterializedReduction> {
    let (n, k, b, p) = (plan.n, plan.k, plan.b, plan.p);
    let mut adjacent = vec![vec![false; n]; n];
    for &(x, y) in g_edges {
        if x >= n || y >= n || x == y || adjacent[x][y] {
            return Err(Error::InvalidParameter(format!("bad source edge ({x}, {y})")));
        }
        adjacent[x][y] = true;
        adjacent[y][x] = true;
    }

    let l = small(&plan.main_path_len())?;
    let spans: Vec<SectorSpan> = plan
        .sector_ranges()
        .into_iter()
        .map(|(name, s, e)| Ok(SectorSpan { name, start: small(&s)?, end: small(&e)? }))
        .collect::<Result<_>>()?;
    let sector_at = |i: usize| spans.iter().position(|s| s.start <= i && i < s.end);

    let mut a = Assembly {
        edges: Vec::with_capacity(l),
        roles: Vec::with_capacity(l),
        sector: Vec::with_capacity(l),
    };
    // u_i has id i - 1
    for i in 1..=l {
        a.add(Role::PathVertex, sector_at(i));
        if i > 1 {
            a.edges.push((i - 2, i - 1));
        }
    }
    let u = |i: usize| i - 1;

    let wall = GadgetSpec::new(GadgetKind::Wall, b)?;
    let gate_k = GadgetSpec::new(GadgetKind::Gate(k), b)?;
    let gate_k1 = GadgetSpec::new(GadgetKind::Gate(k + 1), b)?;
    let hole = GadgetSpec::new(GadgetKind::Hole(k + 1), b)?;
    let knot = GadgetSpec::new(GadgetKind::Knot(k + 1), b)?;

    for at in [1, l] {
        a.roles[u(at)] = Role::WallCenter;
        a.leaves(u(at), wall.exclusive(), Role::GadgetLeaf, sector_at(at));
    }
    let gates = |a: &mut Assembly, from: usize, count: usize, spec: GadgetSpec| {
        for j in 0..count {
            let c = from + 2 * j + 1;
            a.roles[u(c)] = Role::GateCenter;
            a.leaves(u(c), spec.exclusive(), Role::GadgetLeaf, sector_at(c));
        }
    };
    let hole_at = |a: &mut Assembly, inn: usize| {
        for c in [inn + 1, inn + 2] {
            a.roles[u(c)] = Role::HoleCenter;
            a.leaves(u(c), hole.leaves_per_center(), Role::GadgetLeaf, sector_at(c));
        }
    };

    let m1 = small(&plan.m1)?;
    let sel = small(&plan.selector_start())?;
    let mid = small(&plan.middle_start())?;
    let val = small(&plan.validator_start())?;
    let last_g = small(&plan.last_gateland_start())?;
    let sel_core = p * (n - 1) + 3;
    let val_core = (2 * n - 1) * (4 * n + 3);

    gates(&mut a, m1, small(&plan.gates_first)?, gate_k);
    for h in 0..n {
        hole_at(&mut a, sel + h * p);
        if h + 1 < n {
            gates(&mut a, sel + h * p + 3, (p - 3) / 2, gate_k1);
        }
    }
    gates(&mut a, sel + sel_core, small(&plan.selector_tail_gates)?, gate_k1);
    gates(&mut a, mid, small(&plan.gates_middle)?, gate_k);
    let zone = val + (n - 1) * (4 * n + 3);
    for h in 0..n {
        hole_at(&mut a, zone + n + 3 + 3 * h);
    }
    gates(&mut a, val + val_core, small(&plan.validator_tail_gates)?, gate_k1);
    gates(&mut a, last_g, small(&plan.gates_last)?, gate_k);

    let thread_last = small(&plan.thread_last())?;
    let blocks = small(&plan.blocks_start())?;
    for _ in 0..k {
        // thread[i] is t_i; t_2 is the shared u_2
        let mut thread = vec![usize::MAX, usize::MAX, u(2)];
        thread.extend(a.pendant_path(u(2), thread_last - 2, Role::ThreadVertex));
        let c = thread[sel + 1];
        a.roles[c] = Role::KnotCenter;
        a.leaves(c, knot.exclusive(), Role::GadgetLeaf, None);
        for (bi, row) in adjacent.iter().enumerate() {
            let base = blocks + bi * (4 * n + 3);
            for (bj, &adj) in row.iter().enumerate() {
                let mid_v = thread[base + n + 3 + 3 * bj + 1];
                if bi == bj {
                    a.roles[mid_v] = Role::KnotCenter;
                    a.leaves(mid_v, knot.exclusive(), Role::GadgetLeaf, None);
                } else if !adj {
                    a.roles[mid_v] = Role::Danglement;
                    a.leaves(mid_v, 1, Role::DanglementLeaf, None);
                }
            }
        }
    }
    a.roles[u(2)] = Role::ThreadAttachment;
    for (at, len) in [(sel, &plan.filler_first), (val, &plan.filler_second)] {
        a.roles[u(at)] = Role::FillerAttachment;
        a.pendant_path(u(at), small(len)?, Role::FillerVertex);
    }

    let tree = Tree::from_edges(a.roles.len(), &a.edges)?;
    let report = validate(&tree, &a, &spans, &sizes, l)?;
    Ok(MaterializedReduction {
        tree,
        roles: a.roles,
        sectors: spans,
        sizes,
        report,
    })
}

fn validate(
    tree: &Tree,
    a: &Assembly,
    spans: &[SectorSpan],
    sizes: &ReductionSizes,
    l: usize,
) -> Result<ValidationReport> {
    let vertices = tree.n();
    let census_match = BigUint::from(vertices) == sizes.total && sizes.total == sizes.census_total;
    let sector_order = spans.first().is_some_and(|s| s.start == 1)
        && spans.windows(2).all(|w| w[0].end == w[1].start && w[0].start <= w[0].end)
        && spans.last().is_some_and(|s| s.end == l + 1)
        && spans.iter().map(|s| s.name).eq(SECTORS.iter().copied());
    let bad_role = (0..vertices).find(|&v| tree.degree(v) >= 3 && !a.roles[v].may_branch());
    let mut max_sector_pathwidth = 0;
    for (i, span) in spans.iter().enumerate() {
        let verts: Vec<usize> = (0..vertices).filter(|&v| a.sector[v] == Some(i)).collect();
        if verts.is_empty() {
            continue;
        }
        let (frag, _) = tree.induced(&verts)?;
        let pw = pathwidth(&frag);
        if pw > 2 {
            return Err(Error::Invariant(format!("sector {} has pathwidth {pw}", span.name)));
        }
        max_sector_pathwidth = max_sector_pathwidth.max(pw);
    }
    if !census_match {
        return Err(Error::Invariant(format!(
            "built {vertices} vertices, census says {} / {}",
            sizes.total, sizes.census_total
        )));
    }
    if !sector_order {
        return Err(Error::Invariant("sectors are out of order".into()));
    }
    if let Some(v) = bad_role {
        return Err(Error::Invariant(format!(
            "vertex {v} has degree {} but role {:?}",
            tree.degree(v),
            a.roles[v]
        )));
    }
    Ok(ValidationReport {
        vertices,
        census_match,
        sector_order,
        roles_ok: true,
        max_sector_pathwidth,
        pathwidth: pathwidth(tree),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instance_constants() {
        let s = reduction_sizes(3, 2, 3).unwrap();
        assert_eq!((s.b, s.p), (24, 15));
        assert_eq!(s.m1, big(92));
        assert_eq!(s.m2, big(6125));
        assert_eq!(s.m3, big(303_800));
        assert!(s.consistent);
    }

    #[test]
    fn odd_k_rejected() {
        assert!(matches!(reduction_sizes(5, 3, 2), Err(Error::InvalidParameter(_))));
        assert!(matches!(reduction_sizes(2, 4, 1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn honest_instance_exceeds_budget() {
        match materialize_reduction(3, 2, &[(0, 1), (1, 2), (0, 2)], 1_000_000) {
            Err(Error::BudgetExceeded { total, budget }) => {
                assert_eq!(budget, 1_000_000);
                assert_eq!(total, reduction_sizes(3, 2, 3).unwrap().total);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn demo_instance_validates() {
        let r = materialize_demo(3, 2, &[(0, 1), (1, 2)], &DemoScale::default()).unwrap();
        assert!(r.report.census_match && r.report.sector_order && r.report.roles_ok);
        assert!(r.report.max_sector_pathwidth <= 2);
        assert_eq!(BigUint::from(r.tree.n()), r.sizes.total);
    }

    #[test]
    fn notes_confirm_gadget_terms() {
        let s = reduction_sizes(4, 4, 6).unwrap();
        assert!(s.notes.iter().take(2).all(|n| n.ends_with("consistent")));
    }
}
