//! Walls, gates, knots and holes.
//!
//! A gadget is embedded on a host path (the main path or a thread). Its
//! labelled vertices lie on that path; everything else is exclusive to the
//! gadget.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetKind {
    Wall,
    Gate(usize),
    Knot(usize),
    Hole(usize),
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetKind::Wall => write!(f, "wall"),
            GadgetKind::Gate(k) => write!(f, "{k}-gate"),
            GadgetKind::Knot(k) => write!(f, "{k}-knot"),
            GadgetKind::Hole(k) => write!(f, "{k}-hole"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GadgetSpec {
    pub kind: GadgetKind,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Port {
    Center,
    In,
    Out,
    InCenter,
    OutCenter,
    First,
    Last,
}

impl Port {
    pub fn name(self) -> &'static str {
        match self {
            Port::Center => "center",
            Port::In => "in",
            Port::Out => "out",
            Port::InCenter => "in-center",
            Port::OutCenter => "out-center",
            Port::First => "first",
            Port::Last => "last",
        }
    }
}

impl GadgetSpec {
    pub fn new(kind: GadgetKind, b: usize) -> Result<GadgetSpec> {
        let spec = GadgetSpec { kind, b };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<()> {
        let b = self.b;
        match self.kind {
            GadgetKind::Wall if b == 0 => Err(Error::InvalidParameter("a wall needs b >= 1".into())),
            GadgetKind::Gate(k) if k >= b => {
                Err(Error::InvalidParameter(format!("a {k}-gate needs b > k, got b = {b}")))
            }
            GadgetKind::Knot(k) | GadgetKind::Hole(k) if b < 2 * k + 14 || !b.is_multiple_of(4) => Err(
                Error::InvalidParameter(format!("knots and holes need b >= 2k + 14 and 4 | b, got b = {b}, k = {k}")),
            ),
            _ => Ok(()),
        }
    }

    /// Leaves attached to each leaf-carrying vertex.
    pub fn leaves_per_center(&self) -> usize {
        let b = self.b;
        match self.kind {
            GadgetKind::Wall => 2 * b,
            GadgetKind::Gate(k) => 2 * (b - k),
            GadgetKind::Knot(k) => 3 * b / 2 - k - 1,
            GadgetKind::Hole(k) => 3 * b / 4 - k - 1,
        }
    }

    /// Vertices of the gadget that lie on its host path.
    pub fn on_path(&self) -> usize {
        match self.kind {
            GadgetKind::Wall => 2,
            GadgetKind::Gate(_) | GadgetKind::Knot(_) => 3,
            GadgetKind::Hole(_) => 4,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            GadgetKind::Wall | GadgetKind::Gate(_) => 1 + self.leaves_per_center(),
            GadgetKind::Knot(_) => 3 + self.leaves_per_center(),
            GadgetKind::Hole(_) => 4 + 2 * self.leaves_per_center(),
        }
    }

    /// Vertices not on the host path. A wall sits at the end of the main
    /// path, so one of its leaves is the next path vertex.
    pub fn exclusive(&self) -> usize {
        self.vertex_count() - self.on_path()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub spec: GadgetSpec,
    pub tree: Tree,
    pub ports: Vec<(Port, usize)>,
}

impl Gadget {
    pub fn port(&self, p: Port) -> Option<usize> {
        self.ports.iter().find(|(q, _)| *q == p).map(|&(_, v)| v)
    }
}

pub fn build_gadget(spec: GadgetSpec) -> Result<Gadget> {
    spec.check()?;
    let leaves = spec.leaves_per_center();
    let mut edges = Vec::new();
    let (n, ports) = match spec.kind {
        GadgetKind::Wall => {
            edges.extend((1..=leaves).map(|v| (0, v)));
            (1 + leaves, vec![(Port::Center, 0)])
        }
        GadgetKind::Gate(_) => {
            edges.extend((1..=leaves).map(|v| (0, v)));
            (1 + leaves, vec![(Port::Center, 0), (Port::In, 1), (Port::Out, 2)])
        }
        GadgetKind::Knot(_) => {
            edges.push((0, 1));
            edges.push((1, 2));
            edges.extend((3..3 + leaves).map(|v| (1, v)));
            (3 + leaves, vec![(Port::First, 0), (Port::Center, 1), (Port::Last, 2)])
        }
        GadgetKind::Hole(_) => {
            edges.extend([(0, 1), (1, 2), (2, 3)]);
            edges.extend((4..4 + leaves).map(|v| (1, v)));
            edges.extend((4 + leaves..4 + 2 * leaves).map(|v| (2, v)));
            (
                4 + 2 * leaves,
                vec![(Port::In, 0), (Port::InCenter, 1), (Port::OutCenter, 2), (Port::Out, 3)],
            )
        }
    };
    let tree = Tree::from_edges(n, &edges)?;
    Ok(Gadget { spec, tree, ports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_for_b_four() {
        let g = build_gadget(GadgetSpec::new(GadgetKind::Wall, 4).unwrap()).unwrap();
        assert_eq!(g.tree.n(), 9);
        assert_eq!(g.tree.degree(g.port(Port::Center).unwrap()), 8);
    }

    #[test]
    fn gate_leaf_count() {
        let g = build_gadget(GadgetSpec::new(GadgetKind::Gate(1), 24).unwrap()).unwrap();
        assert_eq!(g.tree.degree(0), 46);
        assert_eq!(g.spec.exclusive(), 44);
        assert!(g.tree.has_edge(0, g.port(Port::In).unwrap()));
        assert!(g.tree.has_edge(0, g.port(Port::Out).unwrap()));
    }

    #[test]
    fn knot_and_hole_counts() {
        let knot = build_gadget(GadgetSpec::new(GadgetKind::Knot(2), 24).unwrap()).unwrap();
        assert_eq!(knot.tree.degree(knot.port(Port::Center).unwrap()), 33 + 2);
        let hole = build_gadget(GadgetSpec::new(GadgetKind::Hole(2), 24).unwrap()).unwrap();
        assert_eq!(hole.spec.leaves_per_center(), 15);
        assert_eq!(hole.tree.n(), 34);
        assert_eq!(hole.spec.exclusive(), 30);
    }

    #[test]
    fn knot_constraints() {
        assert!(GadgetSpec::new(GadgetKind::Knot(2), 16).is_err());
        assert!(GadgetSpec::new(GadgetKind::Hole(1), 18).is_err());
        assert!(GadgetSpec::new(GadgetKind::Gate(4), 4).is_err());
        assert!(GadgetSpec::new(GadgetKind::Hole(1), 16).is_ok());
    }
}
