//! `bandwidthkit` command line.
//!
//! Exit status: 0 when a layout was produced and verified, 2 when an
//! algorithm concluded that the bandwidth exceeds `b`, 1 on usage, parse or
//! verification errors.

mod bench;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bandwidthkit::cat_approx::{cat_alg, ratio_bound, CatOutcome};
use bandwidthkit::decomposition::pathwidth;
use bandwidthkit::generators::{
    gen_caterpillar, gen_skewed_comb, gen_tree_bounded_pw, materialize_demo, materialize_reduction,
    reduction_sizes, DemoScale, StrayProfile,
};
use bandwidthkit::graph::bandwidth_of_layout;
use bandwidthkit::io::{parse_edge_list, parse_layout, parse_source_graph, write_edge_list, write_layout, LabeledTree};
use bandwidthkit::oracles::{
    exact_bandwidth_bruteforce, local_density, lower_bounds_report, saxe_decide, Center,
};
use bandwidthkit::tree_approx::{approximate_bandwidth_with, tree_alg_with, TraceEntry, TreeAlgOptions, TreeOutcome};
use bandwidthkit::Layout;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bandwidthkit", version, about = "Bandwidth approximation and exact oracles for trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Caterpillar approximation with ratio 48b^3.
    ApproxCat {
        #[arg(long)]
        b: usize,
        graph: PathBuf,
        /// Write the layout here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tree approximation with ratio (768b^3)^p. Without --b, scans b upward.
    ApproxTree {
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        tighten_p: bool,
        /// JSON-lines trace of per-level decisions.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Exact bandwidth (branch and bound) or a decision for a given b.
    Exact {
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long)]
        b: Option<usize>,
        graph: PathBuf,
    },
    /// Exact local density with a witness ball.
    Density { graph: PathBuf },
    /// Certified lower bounds as JSON.
    Bounds { graph: PathBuf },
    /// Instance generators; all write the edge-list format.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Checks that a layout is a bijection and reports its bandwidth.
    Verify {
        graph: PathBuf,
        layout: PathBuf,
        #[arg(long)]
        max: Option<u64>,
    },
    /// Runs algorithms over an instance family and writes one CSV row per run.
    Bench {
        /// `comb:B` or `comb:B1-B2`, `path:N1,N2,..`, `caterpillar:COUNT:SPINE`,
        /// `tree:COUNT:N:PW`.
        #[arg(long)]
        family: String,
        /// Comma separated subset of `cat,tree,bfs`.
        #[arg(long, default_value = "cat,tree,bfs")]
        algorithms: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        /// Also write every instance and layout into this directory.
        #[arg(long)]
        layouts: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Saxe,
}

#[derive(Subcommand)]
enum Gen {
    /// Skewed Cantor comb.
    Comb {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        slack: usize,
    },
    /// Caterpillar with explicit (`2,0,1,..`) or random (`random:MAXLEN:MAXPER`) strays.
    Caterpillar {
        #[arg(long)]
        spine: usize,
        #[arg(long)]
        strays: String,
        #[arg(long)]
        seed: u64,
    },
    /// Random tree of bounded pathwidth.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pw: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Exact size census of the reduction instance, as JSON.
    ReductionSizes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Builds the reduction instance for a source graph.
    Reduction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        edges_file: PathBuf,
        /// `default` or `wasteland=6,gates=2,tail=1,last=4,ext=3,f1=5,f2=5`.
        #[arg(long)]
        demo_scale: Option<String>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

/// Any failure that maps to exit status 1.
#[derive(Debug)]
pub struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_tree(path: &Path) -> Result<LabeledTree, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => match std::io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

const EXCEEDS: u8 = 2;

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::ApproxCat { b, graph, out } => {
            let lt = read_tree(&graph)?;
            match cat_alg(&lt.tree, b)? {
                CatOutcome::Layout { layout, chi, .. } => {
                    let bw = bandwidth_of_layout(&lt.tree, &layout)?;
                    let bound = ratio_bound(b)? as u64;
                    if bw > bound {
                        return Err(Failure(format!("layout bandwidth {bw} exceeds 48b^3 = {bound}")));
                    }
                    emit(&write_layout(&layout, &lt), out.as_deref())?;
                    eprintln!("bandwidth {bw} (bound {bound}), {chi} stray colors");
                    Ok(ExitCode::SUCCESS)
                }
                CatOutcome::Exceeds(r) => {
                    eprintln!("bandwidth exceeds {b}: {r}");
                    Ok(ExitCode::from(EXCEEDS))
                }
            }
        }
        Command::ApproxTree {
            b,
            tighten_p,
            trace,
            out,
            graph,
        } => {
            let lt = read_tree(&graph)?;
            let opts = TreeAlgOptions { tighten_p };
            let (layout, bound, entries, b) = match b {
                None => {
                    let r = approximate_bandwidth_with(&lt.tree, opts)?;
                    (Some(r.layout), r.ratio_bound, r.trace, r.b_star)
                }
                Some(b) => {
                    let p = pathwidth(&lt.tree).max(1);
                    let r = tree_alg_with(&lt.tree, p, b, opts)?;
                    match r.outcome {
                        TreeOutcome::Layout(l) => (Some(l), r.ratio_bound, r.trace, b),
                        TreeOutcome::Exceeds { reason, .. } => {
                            eprintln!("bandwidth exceeds {b}: {reason}");
                            (None, r.ratio_bound, r.trace, b)
                        }
                    }
                }
            };
            if let Some(path) = trace {
                write_trace(&path, &entries)?;
            }
            let Some(layout) = layout else {
                return Ok(ExitCode::from(EXCEEDS));
            };
            let bw = bandwidth_of_layout(&lt.tree, &layout)?;
            if u128::from(bw) > bound {
                return Err(Failure(format!("layout bandwidth {bw} exceeds the certified bound {bound}")));
            }
            emit(&write_layout(&layout, &lt), out.as_deref())?;
            eprintln!("b = {b}, bandwidth {bw} (bound {bound})");
            Ok(ExitCode::SUCCESS)
        }
        Command::Exact { method, b, graph } => {
            let lt = read_tree(&graph)?;
            let found: Option<(Layout, u64)> = match (method, b) {
                (Method::Brute, _) => {
                    let (bw, layout) = exact_bandwidth_bruteforce(&lt.tree)?;
                    Some((layout, bw as u64))
                }
                (Method::Saxe, Some(b)) => match saxe_decide(&lt.tree, b)? {
                    Some(layout) => {
                        let bw = bandwidth_of_layout(&lt.tree, &layout)?;
                        Some((layout, bw))
                    }
                    None => None,
                },
                (Method::Saxe, None) => return Err(Failure("--method saxe needs --b".into())),
            };
            match (found, b) {
                (Some((_, bw)), Some(b)) if bw > b as u64 => {
                    eprintln!("bandwidth is {bw}, exceeds {b}");
                    Ok(ExitCode::from(EXCEEDS))
                }
                (Some((layout, bw)), _) => {
                    let exact = matches!(method, Method::Brute);
                    let head = format!("# bandwidth {bw}{}\n", if exact { "" } else { " (at most b)" });
                    emit(&(head + &write_layout(&layout, &lt)), None)?;
                    Ok(ExitCode::SUCCESS)
                }
                (None, b) => {
                    eprintln!("bandwidth exceeds {}", b.unwrap_or(0));
                    Ok(ExitCode::from(EXCEEDS))
                }
            }
        }
        Command::Density { graph } => {
            let lt = read_tree(&graph)?;
            let (d, w) = local_density(&lt.tree)?;
            let center = match w.center {
                Center::Vertex(v) => format!("vertex {}", lt.label(v)),
                Center::Edge(u, v) => format!("edge {}-{}", lt.label(u), lt.label(v)),
            };
            emit(
                &format!(
                    "density {d}\nwitness ball around {center}, radius {}, {} vertices, diameter {}\n",
                    w.radius, w.vertices, w.diameter
                ),
                None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { graph } => {
            let lt = read_tree(&graph)?;
            let lb = lower_bounds_report(&lt.tree);
            let density = if lt.tree.n() >= 2 {
                local_density(&lt.tree)?.0.to_string()
            } else {
                "0".into()
            };
            let v = serde_json::json!({
                "vertices": lt.tree.n(),
                "density": density,
                "density_floor": lb.density_floor,
                "pathwidth": lb.pathwidth,
                "best": lb.best(),
            });
            emit(&format!("{v}\n"), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { what } => generate(what),
        Command::Verify { graph, layout, max } => {
            let lt = read_tree(&graph)?;
            let text = fs::read_to_string(&layout).map_err(|e| Failure(format!("{}: {e}", layout.display())))?;
            let l = parse_layout(&text, &lt).map_err(|e| Failure(format!("{}: {e}", layout.display())))?;
            let bw = bandwidth_of_layout(&lt.tree, &l)?;
            let mut report = format!("valid layout of {} vertices\nbandwidth {bw}\n", lt.tree.n());
            let code = match max {
                Some(m) if bw > m => {
                    report += &format!("FAIL: exceeds {m}\n");
                    ExitCode::from(1)
                }
                Some(m) => {
                    report += &format!("PASS: at most {m}\n");
                    ExitCode::SUCCESS
                }
                None => ExitCode::SUCCESS,
            };
            emit(&report, None)?;
            Ok(code)
        }
        Command::Bench {
            family,
            algorithms,
            seed,
            out,
            layouts,
        } => {
            let rows = bench::run(&family, &algorithms, seed, layouts.as_deref())?;
            let mut w = csv::Writer::from_path(&out).map_err(|e| Failure(format!("{}: {e}", out.display())))?;
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
            eprintln!("{} runs written to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_trace(path: &Path, entries: &[TraceEntry]) -> Result<(), Failure> {
    let mut text = String::new();
    for e in entries {
        text.push_str(&serde_json::to_string(e)?);
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn parse_strays(spec: &str, spine: usize) -> Result<StrayProfile, Failure> {
    if let Some(rest) = spec.strip_prefix("random:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let [len, per] = parts[..] else {
            return Err(Failure(format!("random strays are random:MAXLEN:MAXPER, got {spec:?}")));
        };
        return Ok(StrayProfile::Random {
            max_len: len.parse()?,
            max_per_vertex: per.parse()?,
        });
    }
    let lens: Vec<usize> = spec
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure(format!("stray lengths {spec:?}: {e}")))?;
    if lens.len() != spine {
        return Err(Failure(format!("{} stray lengths for a spine of {spine}", lens.len())));
    }
    Ok(StrayProfile::Explicit(lens))
}

fn parse_demo_scale(spec: &str) -> Result<DemoScale, Failure> {
    let mut s = DemoScale::default();
    if spec == "default" {
        return Ok(s);
    }
    for item in spec.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Failure(format!("demo scale item {item:?} is not key=value")))?;
        let value: usize = value.parse()?;
        let slot = match key {
            "wasteland" => &mut s.wasteland,
            "gates" => &mut s.gates,
            "tail" => &mut s.tail_gates,
            "last" => &mut s.last_wasteland,
            "ext" => &mut s.thread_extension,
            "f1" => &mut s.filler_first,
            "f2" => &mut s.filler_second,
            _ => return Err(Failure(format!("unknown demo scale key {key:?}"))),
        };
        *slot = value;
    }
    Ok(s)
}

fn generate(what: Gen) -> Outcome {
    let tree = match what {
        Gen::Comb { b, k, slack } => gen_skewed_comb(b, k, slack)?.tree,
        Gen::Caterpillar { spine, strays, seed } => gen_caterpillar(spine, &parse_strays(&strays, spine)?, seed)?,
        Gen::Tree { n, pw, seed } => gen_tree_bounded_pw(n, pw, seed)?,
        Gen::ReductionSizes { n, k, m } => {
            let sizes = reduction_sizes(n, k, m)?;
            emit(&(serde_json::to_string_pretty(&sizes)? + "\n"), None)?;
            return Ok(ExitCode::SUCCESS);
        }
        Gen::Reduction {
            n,
            k,
            edges_file,
            demo_scale,
            budget,
        } => {
            let text =
                fs::read_to_string(&edges_file).map_err(|e| Failure(format!("{}: {e}", edges_file.display())))?;
            let (gn, edges) = parse_source_graph(&text).map_err(|e| Failure(format!("{}: {e}", edges_file.display())))?;
            if gn != n {
                return Err(Failure(format!("--n {n} but the graph has {gn} vertices")));
            }
            let r = match demo_scale {
                Some(spec) => materialize_demo(n, k, &edges, &parse_demo_scale(&spec)?)?,
                None => materialize_reduction(n, k, &edges, budget)?,
            };
            eprintln!(
                "{} vertices, pathwidth {}, largest sector pathwidth {}",
                r.report.vertices, r.report.pathwidth, r.report.max_sector_pathwidth
            );
            r.tree
        }
    };
    emit(&write_edge_list(&LabeledTree::unlabeled(tree)), None)?;
    Ok(ExitCode::SUCCESS)
}
