//! Plane drawings of abstract graphs and the parity refutation for
//! near-complete bipartite drawings.
//!
//! A [`Drawing`] is a set of named terminal points plus PL arcs realizing
//! edges. [`validate_drawing`] decides — exactly — whether the arc
//! interiors are pairwise disjoint and avoid all terminals, reporting the
//! first violation with a witness point. [`k33_certificate`] takes a
//! drawing of K₃,₃ minus one edge, assembles the unique 4-cycle avoiding
//! the missing edge's endpoints, and compares their parities: unequal
//! parities certify that no ninth arc can be drawn.

use crate::exact::{seg_intersection, Point, SegIntersection};
use crate::parity;
use crate::path::{PLArc, PLCircuit, PLPath, PathLocation};
use std::collections::BTreeMap;
use thiserror::Error;

/// One drawn edge: an arc whose first point is terminal `u` and whose
/// last point is terminal `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DrawnEdge {
    pub u: String,
    pub v: String,
    pub arc: PLArc,
}

/// A plane drawing: distinct named terminals and arcs joining them.
/// Structural rules (names resolve, endpoints match, no repeated pair)
/// are enforced at construction; geometric disjointness is a separate
/// question answered by [`validate_drawing`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Drawing {
    terminals: Vec<(String, Point)>,
    edges: Vec<DrawnEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("terminal name {0:?} is declared twice")]
    DuplicateTerminalName(String),
    #[error("terminals {0:?} and {1:?} share one point")]
    CoincidentTerminals(String, String),
    #[error("edge references unknown terminal {0:?}")]
    UnknownTerminal(String),
    #[error("edge joins terminal {0:?} to itself")]
    LoopEdge(String),
    #[error("edge pair {0:?}-{1:?} appears twice")]
    DuplicateEdge(String, String),
    #[error("arc endpoints do not match terminals {0:?}-{1:?}")]
    ArcEndpointMismatch(String, String),
}

impl Drawing {
    pub fn new(
        terminals: Vec<(String, Point)>,
        edges: Vec<DrawnEdge>,
    ) -> Result<Drawing, DrawingError> {
        for (i, (name, p)) in terminals.iter().enumerate() {
            for (other, q) in &terminals[..i] {
                if other == name {
                    return Err(DrawingError::DuplicateTerminalName(name.clone()));
                }
                if p == q {
                    return Err(DrawingError::CoincidentTerminals(
                        other.clone(),
                        name.clone(),
                    ));
                }
            }
        }
        let point_of = |name: &str| -> Option<&Point> {
            terminals.iter().find(|(n, _)| n == name).map(|(_, p)| p)
        };
        for (i, e) in edges.iter().enumerate() {
            if e.u == e.v {
                return Err(DrawingError::LoopEdge(e.u.clone()));
            }
            let pu = point_of(&e.u).ok_or_else(|| DrawingError::UnknownTerminal(e.u.clone()))?;
            let pv = point_of(&e.v).ok_or_else(|| DrawingError::UnknownTerminal(e.v.clone()))?;
            if e.arc.path().first() != pu || e.arc.path().last() != pv {
                return Err(DrawingError::ArcEndpointMismatch(e.u.clone(), e.v.clone()));
            }
            for prior in &edges[..i] {
                let same = (prior.u == e.u && prior.v == e.v) || (prior.u == e.v && prior.v == e.u);
                if same {
                    return Err(DrawingError::DuplicateEdge(e.u.clone(), e.v.clone()));
                }
            }
        }
        Ok(Drawing { terminals, edges })
    }

    pub fn terminals(&self) -> &[(String, Point)] {
        &self.terminals
    }

    pub fn edges(&self) -> &[DrawnEdge] {
        &self.edges
    }

    pub fn terminal_point(&self, name: &str) -> Option<&Point> {
        self.terminals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }
}

/// Outcome of geometric validation of a drawing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DrawingVerdict {
    Ok,
    /// Two arc interiors meet; `point` is the earliest contact along the
    /// lower-indexed edge.
    Violation {
        edge1: usize,
        edge2: usize,
        point: Point,
    },
    /// An arc passes through a terminal that is not one of its endpoints.
    TerminalHit {
        edge: usize,
        terminal: String,
        point: Point,
    },
}

/// Decides whether all arc interiors are pairwise disjoint and disjoint
/// from every terminal. The first violation is reported deterministically:
/// terminal hits are scanned edge by edge (terminals in declaration
/// order), then edge pairs in index order with the witness chosen at the
/// smallest parameter along the lower-indexed arc.
pub fn validate_drawing(d: &Drawing) -> DrawingVerdict {
    for (i, e) in d.edges.iter().enumerate() {
        for (name, p) in &d.terminals {
            if name == &e.u || name == &e.v {
                continue;
            }
            if e.arc.path().on_carrier(p) {
                return DrawingVerdict::TerminalHit {
                    edge: i,
                    terminal: name.clone(),
                    point: p.clone(),
                };
            }
        }
    }
    for i in 0..d.edges.len() {
        let mut best: Option<(PathLocation, usize, Point)> = None;
        for j in (i + 1)..d.edges.len() {
            let shared = shared_terminal(&d.edges[i], &d.edges[j])
                .and_then(|name| d.terminal_point(&name).cloned());
            for p in contact_points(&d.edges[i].arc, &d.edges[j].arc) {
                if Some(&p) == shared.as_ref() {
                    continue;
                }
                let loc = d.edges[i]
                    .arc
                    .path()
                    .locate(&p)
                    .expect("contact point lies on the arc");
                let better = match &best {
                    None => true,
                    Some((cur, _, _)) => loc.global_param() < cur.global_param(),
                };
                if better {
                    best = Some((loc, j, p));
                }
            }
        }
        if let Some((_, j, point)) = best {
            return DrawingVerdict::Violation {
                edge1: i,
                edge2: j,
                point,
            };
        }
    }
    DrawingVerdict::Ok
}

fn shared_terminal(e1: &DrawnEdge, e2: &DrawnEdge) -> Option<String> {
    for a in [&e1.u, &e1.v] {
        for b in [&e2.u, &e2.v] {
            if a == b {
                return Some(a.clone());
            }
        }
    }
    None
}

/// Exact contact points of two arcs (overlaps contribute both overlap
/// endpoints).
fn contact_points(a: &PLArc, b: &PLArc) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 1..=a.path().piece_count() {
        let s = a.path().piece(i);
        for j in 1..=b.path().piece_count() {
            match seg_intersection(&s, &b.path().piece(j)) {
                SegIntersection::Empty => {}
                SegIntersection::Point(p) => out.push(p),
                SegIntersection::Overlap(o) => {
                    out.push(o.a);
                    out.push(o.b);
                }
            }
        }
    }
    out
}

/// The refutation produced for a drawing of K₃,₃ minus one edge: the
/// 4-cycle over the four terminals not incident to the missing edge
/// separates its two endpoints, proven by their parities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RefutationCertificate {
    pub missing_edge: (String, String),
    /// The four edges of the separating cycle, in traversal order.
    pub separating_cycle: Vec<(String, String)>,
    pub cycle_circuit: PLCircuit,
    pub parity_u: u8,
    pub parity_v: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("drawing is not K3,3 minus exactly one edge")]
    WrongGraph,
    #[error("drawing fails geometric validation")]
    InvalidDrawing,
    #[error("cycle parities are equal — no separation certified")]
    CertificateFailure,
}

/// Certifies that a valid drawing of K₃,₃ minus one edge cannot be
/// completed: the unique 4-cycle on the terminals away from the missing
/// edge is assembled into a circuit, and the missing edge's endpoints
/// have different parities against it, so no arc can join them without
/// crossing the cycle.
pub fn k33_certificate(d: &Drawing) -> Result<RefutationCertificate, CertificateError> {
    let (u, v, part_u, part_v) = missing_pair(d)?;
    if validate_drawing(d) != DrawingVerdict::Ok {
        return Err(CertificateError::InvalidDrawing);
    }

    // Remaining terminals, two per part, in sorted name order for
    // deterministic assembly: x1 - y1 - x2 - y2 - x1.
    let xs: Vec<&String> = part_u.iter().filter(|n| **n != u).collect();
    let ys: Vec<&String> = part_v.iter().filter(|n| **n != v).collect();
    let cycle_names = [xs[0], ys[0], xs[1], ys[1]];
    let mut corners: Vec<Point> = Vec::new();
    let mut cycle_edges = Vec::new();
    for k in 0..4 {
        let from = cycle_names[k];
        let to = cycle_names[(k + 1) % 4];
        let path = oriented_arc(d, from, to).ok_or(CertificateError::WrongGraph)?;
        cycle_edges.push((from.clone(), to.clone()));
        let start = if k == 0 { 0 } else { 1 };
        corners.extend_from_slice(&path.corners()[start..]);
    }
    let cycle_path = PLPath::new(corners, true).map_err(|_| CertificateError::InvalidDrawing)?;
    let cycle_circuit = PLCircuit::new(cycle_path).map_err(|_| CertificateError::InvalidDrawing)?;

    let pu = d.terminal_point(&u).expect("endpoint exists");
    let pv = d.terminal_point(&v).expect("endpoint exists");
    let parity_u =
        parity::parity(pu, cycle_circuit.path()).map_err(|_| CertificateError::InvalidDrawing)?;
    let parity_v =
        parity::parity(pv, cycle_circuit.path()).map_err(|_| CertificateError::InvalidDrawing)?;
    if parity_u == parity_v {
        return Err(CertificateError::CertificateFailure);
    }
    Ok(RefutationCertificate {
        missing_edge: (u, v),
        separating_cycle: cycle_edges,
        cycle_circuit,
        parity_u,
        parity_v,
    })
}

/// The drawn arc between two terminals, oriented `from -> to`.
fn oriented_arc(d: &Drawing, from: &str, to: &str) -> Option<PLPath> {
    for e in &d.edges {
        if e.u == from && e.v == to {
            return Some(e.arc.path().clone());
        }
        if e.u == to && e.v == from {
            return Some(e.arc.path().reversed());
        }
    }
    None
}

/// Checks the abstract graph is K₃,₃ minus exactly one edge and returns
/// (missing u, missing v, u's part, v's part), parts sorted by name.
fn missing_pair(
    d: &Drawing,
) -> Result<(String, String, Vec<String>, Vec<String>), CertificateError> {
    if d.terminals.len() != 6 || d.edges.len() != 8 {
        return Err(CertificateError::WrongGraph);
    }
    let mut names: Vec<String> = d.terminals.iter().map(|(n, _)| n.clone()).collect();
    names.sort();
    let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for e in &d.edges {
        adj.entry(&e.u).or_default().push(&e.v);
        adj.entry(&e.v).or_default().push(&e.u);
    }
    // 2-color by breadth-first search from the lexicographically first
    // terminal; K3,3 minus one edge is connected and bipartite.
    let mut color: BTreeMap<&str, u8> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    color.insert(names[0].as_str(), 0);
    queue.push_back(names[0].as_str());
    while let Some(n) = queue.pop_front() {
        let c = color[n];
        for m in adj.get(n).into_iter().flatten() {
            match color.get(m) {
                None => {
                    color.insert(m, 1 - c);
                    queue.push_back(m);
                }
                Some(&cm) if cm == c => return Err(CertificateError::WrongGraph),
                Some(_) => {}
            }
        }
    }
    if color.len() != 6 {
        return Err(CertificateError::WrongGraph);
    }
    let part0: Vec<String> = names
        .iter()
        .filter(|n| color[n.as_str()] == 0)
        .cloned()
        .collect();
    let part1: Vec<String> = names
        .iter()
        .filter(|n| color[n.as_str()] == 1)
        .cloned()
        .collect();
    if part0.len() != 3 || part1.len() != 3 {
        return Err(CertificateError::WrongGraph);
    }
    let mut missing: Option<(String, String)> = None;
    for a in &part0 {
        for b in &part1 {
            let present = adj[a.as_str()].contains(&b.as_str());
            if !present {
                if missing.is_some() {
                    return Err(CertificateError::WrongGraph);
                }
                missing = Some((a.clone(), b.clone()));
            }
        }
    }
    let (u, v) = missing.ok_or(CertificateError::WrongGraph)?;
    Ok((u, v, part0, part1))
}
