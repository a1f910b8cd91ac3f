//! Benchmark runner: instance families crossed with algorithms, one
//! `RunRecord` per pair.

use std::fs;
use std::path::Path;
use std::time::Instant;

use bandwidthkit::cat_approx::{cat_alg, CatOutcome};
use bandwidthkit::generators::{gen_caterpillar, gen_skewed_comb, gen_tree_bounded_pw, StrayProfile};
use bandwidthkit::graph::{bandwidth_of_layout, diameter_path};
use bandwidthkit::io::{write_edge_list, write_layout, LabeledTree};
use bandwidthkit::oracles::lower_bounds_report;
use bandwidthkit::tree_approx::approximate_bandwidth;
use bandwidthkit::{Error, Layout, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::Failure;

/// One CSV row. Columns, in order: command, instance, digest, n, algorithm,
/// parameters, outcome, bandwidth, bound, density_floor, pathwidth, wall_ms.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    pub instance: String,
    pub digest: String,
    pub n: usize,
    pub algorithm: String,
    pub parameters: String,
    pub outcome: String,
    pub bandwidth: Option<u64>,
    pub bound: Option<String>,
    pub density_floor: usize,
    pub pathwidth: usize,
    pub wall_ms: f64,
}

struct Instance {
    name: String,
    tree: Tree,
}

fn range(spec: &str) -> Result<(usize, usize), Failure> {
    match spec.split_once('-') {
        Some((a, b)) => Ok((a.parse()?, b.parse()?)),
        None => {
            let a = spec.parse()?;
            Ok((a, a))
        }
    }
}

fn need_seed(seed: Option<u64>, family: &str) -> Result<u64, Failure> {
    seed.ok_or_else(|| Failure(format!("family {family:?} is random and needs --seed")))
}

fn instances(family: &str, seed: Option<u64>) -> Result<Vec<Instance>, Failure> {
    let parts: Vec<&str> = family.split(':').collect();
    let mut out = Vec::new();
    match parts[..] {
        ["comb", bs] => {
            let (lo, hi) = range(bs)?;
            for b in lo..=hi {
                for k in 1..=b {
                    out.push(Instance {
                        name: format!("comb b={b} k={k}"),
                        tree: gen_skewed_comb(b, k, 1)?.tree,
                    });
                }
            }
        }
        ["path", ns] => {
            for n in ns.split(',') {
                let n: usize = n.trim().parse()?;
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                out.push(Instance {
                    name: format!("path n={n}"),
                    tree: Tree::from_edges(n, &edges)?,
                });
            }
        }
        ["caterpillar", count, spine] => {
            let mut rng = ChaCha8Rng::seed_from_u64(need_seed(seed, family)?);
            let spine: usize = spine.parse()?;
            for i in 0..count.parse::<usize>()? {
                let profile = StrayProfile::Random {
                    max_len: rng.gen_range(1..=4),
                    max_per_vertex: rng.gen_range(0..=2),
                };
                out.push(Instance {
                    name: format!("caterpillar #{i} spine={spine}"),
                    tree: gen_caterpillar(spine, &profile, rng.gen())?,
                });
            }
        }
        ["tree", count, n, pw] => {
            let mut rng = ChaCha8Rng::seed_from_u64(need_seed(seed, family)?);
            let (n, pw): (usize, usize) = (n.parse()?, pw.parse()?);
            for i in 0..count.parse::<usize>()? {
                out.push(Instance {
                    name: format!("tree #{i} n={n} pw<={pw}"),
                    tree: gen_tree_bounded_pw(n, pw, rng.gen())?,
                });
            }
        }
        _ => return Err(Failure(format!("unknown family {family:?}"))),
    }
    Ok(out)
}

/// Breadth-first order from one end of a longest path.
pub fn bfs_baseline(t: &Tree) -> Layout {
    let start = diameter_path(t)[0];
    let dist = t.bfs_distances(start);
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by_key(|&v| (dist[v], v));
    Layout::from_order(&order).expect("a permutation")
}

enum Run {
    Layout { layout: Layout, bound: Option<String>, parameters: String },
    Other { outcome: String, parameters: String },
}

fn run_one(t: &Tree, algorithm: &str, floor: usize) -> Result<Run, Failure> {
    match algorithm {
        "cat" => {
            // smallest accepted b, starting from the certified lower bound
            for b in floor.max(1)..=t.n().max(1) {
                match cat_alg(t, b) {
                    Ok(CatOutcome::Layout { layout, .. }) => {
                        return Ok(Run::Layout {
                            layout,
                            bound: Some((48 * (b as u64).pow(3)).to_string()),
                            parameters: format!("b={b}"),
                        })
                    }
                    Ok(CatOutcome::Exceeds(_)) => continue,
                    Err(Error::NotACaterpillar(_)) => {
                        return Ok(Run::Other {
                            outcome: "not-a-caterpillar".into(),
                            parameters: String::new(),
                        })
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(Run::Other {
                outcome: "exceeds".into(),
                parameters: format!("b<={}", t.n()),
            })
        }
        "tree" => {
            let r = approximate_bandwidth(t)?;
            Ok(Run::Layout {
                layout: r.layout,
                bound: Some(r.ratio_bound.to_string()),
                parameters: format!("b={} p={}", r.b_star, r.p),
            })
        }
        "bfs" => Ok(Run::Layout {
            layout: bfs_baseline(t),
            bound: None,
            parameters: String::new(),
        }),
        other => Err(Failure(format!("unknown algorithm {other:?}"))),
    }
}

pub fn run(family: &str, algorithms: &str, seed: Option<u64>, layouts: Option<&Path>) -> Result<Vec<RunRecord>, Failure> {
    let algs: Vec<&str> = algorithms.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
    if algs.is_empty() {
        return Err(Failure("no algorithms given".into()));
    }
    if let Some(dir) = layouts {
        fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
    }
    let mut rows = Vec::new();
    for inst in instances(family, seed)? {
        let lt = LabeledTree::unlabeled(inst.tree);
        let edge_text = write_edge_list(&lt);
        let digest = hex::encode(Sha256::digest(edge_text.as_bytes()))[..16].to_string();
        let lb = lower_bounds_report(&lt.tree);
        if let Some(dir) = layouts {
            fs::write(dir.join(format!("{digest}.edges")), &edge_text)?;
        }
        for &alg in &algs {
            let start = Instant::now();
            let run = run_one(&lt.tree, alg, lb.best())?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let mut row = RunRecord {
                command: "bench",
                instance: inst.name.clone(),
                digest: digest.clone(),
                n: lt.tree.n(),
                algorithm: alg.to_string(),
                parameters: String::new(),
                outcome: String::new(),
                bandwidth: None,
                bound: None,
                density_floor: lb.density_floor,
                pathwidth: lb.pathwidth,
                wall_ms,
            };
            match run {
                Run::Layout { layout, bound, parameters } => {
                    row.bandwidth = Some(bandwidth_of_layout(&lt.tree, &layout)?);
                    row.outcome = "layout".into();
                    row.bound = bound;
                    row.parameters = parameters;
                    if let Some(dir) = layouts {
                        fs::write(dir.join(format!("{digest}-{alg}.layout")), write_layout(&layout, &lt))?;
                    }
                }
                Run::Other { outcome, parameters } => {
                    row.outcome = outcome;
                    row.parameters = parameters;
                }
            }
            rows.push(row);
        }
    }
    let rank = |a: &str| algs.iter().position(|x| *x == a);
    rows.sort_by(|x, y| (&x.digest, rank(&x.algorithm)).cmp(&(&y.digest, rank(&y.algorithm))));
    Ok(rows)
}
