//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` of whitespace
//! separated labels. Layout: one `vertex rank` line per vertex. Blank lines
//! and lines starting with `#` are ignored in both.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Layout, Tree};

/// A tree together with the labels it was read with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub tree: Tree,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Edges in input order, kept so that writing reproduces the input.
    edges: Vec<(usize, usize)>,
}

impl LabeledTree {
    /// Wraps a tree using decimal vertex ids as labels.
    pub fn unlabeled(tree: Tree) -> LabeledTree {
        let labels: Vec<String> = (0..tree.n()).map(|v| v.to_string()).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let edges = tree.edges().collect();
        LabeledTree {
            tree,
            labels,
            index,
            edges,
        }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} {tok:?} is not a non-negative integer"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<LabeledTree> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input, expected header \"n m\"".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = parse_count(toks.next(), hline, "vertex count")?;
    let m = parse_count(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(Error::Parse {
            line: hline,
            message: "header has more than two fields".into(),
        });
    }

    let mut labels = Vec::new();
    let mut index = HashMap::new();
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected \"u v\", found {} fields", toks.len()),
            });
        }
        let mut ids = [0; 2];
        for (slot, tok) in ids.iter_mut().zip(&toks) {
            *slot = match index.get(*tok) {
                Some(&id) => id,
                None => {
                    let id = labels.len();
                    if id == n {
                        return Err(Error::Parse {
                            line,
                            message: format!("more than {n} distinct vertex labels"),
                        });
                    }
                    labels.push(tok.to_string());
                    index.insert(tok.to_string(), id);
                    id
                }
            };
        }
        edges.push((ids[0], ids[1]));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    if n == 1 && labels.is_empty() {
        labels.push("0".into());
        index.insert("0".into(), 0);
    }
    if labels.len() != n {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {n} vertices, edges mention {}", labels.len()),
        });
    }
    let tree = Tree::from_edges(n, &edges)?;
    Ok(LabeledTree {
        tree,
        labels,
        index,
        edges,
    })
}

/// Reads a simple graph in the edge-list format whose vertices are labelled
/// `1..=n`. Returns `n` and 0-based edges.
pub fn parse_source_graph(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input, expected header \"n m\"".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = parse_count(toks.next(), hline, "vertex count")?;
    let m = parse_count(toks.next(), hline, "edge count")?;
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected \"u v\", found {} fields", toks.len()),
            });
        }
        let u = parse_count(Some(toks[0]), line, "vertex")?;
        let v = parse_count(Some(toks[1]), line, "vertex")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::Parse {
                line,
                message: format!("vertices are numbered 1..={n}"),
            });
        }
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                message: format!("self loop or repeated edge {u} {v}"),
            });
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

pub fn write_edge_list(lt: &LabeledTree) -> String {
    let mut out = format!("{} {}\n", lt.tree.n(), lt.edges.len());
    for &(u, v) in &lt.edges {
        let _ = writeln!(out, "{} {}", lt.labels[u], lt.labels[v]);
    }
    out
}

pub fn parse_layout(text: &str, lt: &LabeledTree) -> Result<Layout> {
    let n = lt.tree.n();
    let mut ranks = vec![0usize; n];
    let mut last_line = 0;
    for (line, body) in content_lines(text) {
        last_line = line;
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected \"vertex rank\", found {} fields", toks.len()),
            });
        }
        let v = lt.vertex(toks[0]).ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown vertex {:?}", toks[0]),
        })?;
        let r = parse_count(Some(toks[1]), line, "rank")?;
        if ranks[v] != 0 {
            return Err(Error::Parse {
                line,
                message: format!("vertex {:?} listed twice", toks[0]),
            });
        }
        if r == 0 {
            return Err(Error::Parse {
                line,
                message: "ranks start at 1".into(),
            });
        }
        ranks[v] = r;
    }
    if let Some(v) = ranks.iter().position(|&r| r == 0) {
        return Err(Error::Parse {
            line: last_line,
            message: format!("vertex {:?} has no rank", lt.label(v)),
        });
    }
    Layout::new(ranks)
}

/// Writes one `vertex rank` line per vertex, in rank order.
pub fn write_layout(layout: &Layout, lt: &LabeledTree) -> String {
    let mut out = String::new();
    for v in layout.order() {
        let _ = writeln!(out, "{} {}", lt.label(v), layout.rank(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\na b\nb c\nc d\n";
        let lt = parse_edge_list(text).unwrap();
        assert_eq!(lt.tree.n(), 4);
        assert_eq!(write_edge_list(&lt), text);
        assert_eq!(parse_edge_list(&write_edge_list(&lt)).unwrap(), lt);
    }

    #[test]
    fn layout_round_trip() {
        let lt = parse_edge_list("3 2\nx y\ny z\n").unwrap();
        let l = parse_layout("y 1\nx 2\nz 3\n", &lt).unwrap();
        assert_eq!(l.bandwidth(&lt.tree).unwrap(), 2);
        let text = write_layout(&l, &lt);
        assert_eq!(text, "y 1\nx 2\nz 3\n");
        assert_eq!(parse_layout(&text, &lt).unwrap(), l);
    }

    #[test]
    fn single_vertex_needs_no_edges() {
        let lt = parse_edge_list("1 0\n").unwrap();
        assert_eq!(lt.tree.n(), 1);
        assert_eq!(lt.label(0), "0");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_edge_list("3 2\na b\nb\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "expected \"u v\", found 1 fields".into()
            }
        );
        assert!(matches!(parse_edge_list("x 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\na b\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn missing_layout_vertex_is_named() {
        let lt = parse_edge_list("3 2\nx y\ny z\n").unwrap();
        let err = parse_layout("x 1\ny 2\n", &lt).unwrap_err();
        match err {
            Error::Parse { message, .. } => assert!(message.contains("\"z\"")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_is_rejected_after_parsing() {
        assert!(matches!(
            parse_edge_list("3 3\na b\nb c\nc a\n"),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn source_graph() {
        let (n, edges) = parse_source_graph("3 2\n1 2\n# c\n2 3\n").unwrap();
        assert_eq!((n, edges), (3, vec![(0, 1), (1, 2)]));
        assert!(matches!(parse_source_graph("3 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_source_graph("3 2\n1 2\n2 1\n").is_err());
        assert!(parse_source_graph("3 1\n1 4\n").is_err());
    }
}
