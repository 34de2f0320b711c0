//! Separation witnesses: concrete point pairs that no path can join
//! without crossing a given circuit.
//!
//! [`separation_witness`] deterministically constructs such a pair for any
//! circuit — an interior point `c` squeezed under the highest carrier
//! point on a vertical mid-line, and an exterior point `d` left of
//! everything — and [`verify_witness`] checks candidate joining paths by
//! exact first-hit queries. The supporting machinery ([`clearance_budget`],
//! [`refine_closed`], [`BarrierChain`]) makes the underlying distance and
//! subdivision bookkeeping explicit and exact. [`claim4_probe`] builds the
//! three-arc gadget (two circuit halves plus an outer detour) whose
//! eight-arc drawing exhibits the separation as a parity mismatch between
//! a chord midpoint and a detour midpoint.

use crate::complement::{chord_candidates, outer_detour, ComplementError};
use crate::exact::{contains_point, rat, rat_int, sqrt_under, GeomSet, Point, Rational, Segment};
use crate::parity;
use crate::path::{
    extreme_points, first_hit, split_circuit, PLArc, PLCircuit, PLPath, PathLocation,
};
use crate::planarity::{Drawing, DrawnEdge};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("sets are not disjoint; they share {witness}")]
    NotDisjoint { witness: Point },
    #[error("barrier chain has a gap between consecutive items")]
    NotChained,
    #[error("barrier chain has no items")]
    EmptyChain,
    #[error("mandatory point {0} is not on the sample path")]
    MandatoryOffCurve(Point),
    #[error("path endpoints do not match the witness pair")]
    EndpointMismatch,
    #[error("no chord of the mid-line lies in the bounded component")]
    NoSeparatingChord,
    #[error(transparent)]
    Complement(#[from] ComplementError),
}

/// A connected chain of geometric items: consecutive items share at least
/// one point, so the union is a single connected barrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarrierChain {
    parts: GeomSet,
}

impl BarrierChain {
    pub fn new(parts: GeomSet) -> Result<BarrierChain, WitnessError> {
        let items = parts.items();
        if items.is_empty() {
            return Err(WitnessError::EmptyChain);
        }
        for pair in items.windows(2) {
            let a = GeomSet::new(vec![pair[0].clone()]);
            let b = GeomSet::new(vec![pair[1].clone()]);
            if a.intersection_witness(&b).is_none() {
                return Err(WitnessError::NotChained);
            }
        }
        Ok(BarrierChain { parts })
    }

    pub fn parts(&self) -> &GeomSet {
        &self.parts
    }
}

/// The exact squared clearance of a configuration of paths and barriers:
/// the minimum of dist²(g, f₀) and dist²(barrierⱼ, fⱼ₊₁) over all j.
/// Every listed pair must be disjoint; a touching pair is reported with a
/// shared point. Adding pieces or barriers can only shrink the result.
pub fn clearance_budget(
    g: &PLPath,
    f_pieces: &[PLPath],
    barriers: &[BarrierChain],
) -> Result<Rational, WitnessError> {
    assert_eq!(
        f_pieces.len(),
        barriers.len() + 1,
        "each barrier pairs with the piece after the first"
    );
    let mut best: Option<Rational> = None;
    let mut take = |lhs: &GeomSet, rhs: &GeomSet| -> Result<(), WitnessError> {
        let d = lhs.dist2(rhs).expect("paths and chains are nonempty");
        if d.is_zero() {
            let witness = lhs
                .intersection_witness(rhs)
                .expect("touching closed sets share a point");
            return Err(WitnessError::NotDisjoint { witness });
        }
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
        Ok(())
    };
    take(&g.carrier(), &f_pieces[0].carrier())?;
    for (j, barrier) in barriers.iter().enumerate() {
        take(barrier.parts(), &f_pieces[j + 1].carrier())?;
    }
    Ok(best.expect("at least one pair"))
}

/// Subdivides a closed PL path until consecutive corners are closer than
/// the squared bound `h2`, inserting the given mandatory points as
/// corners first. All output corners lie on the input carrier and every
/// input corner is kept; subdivision is by exact midpoints, so the output
/// carrier equals the input carrier.
pub fn refine_closed(
    samples: &PLPath,
    h2: &Rational,
    mandatory: &[Point],
) -> Result<PLPath, WitnessError> {
    assert!(
        samples.is_closed(),
        "refinement is defined for closed paths"
    );
    assert!(h2.is_positive(), "squared spacing bound must be positive");
    for p in mandatory {
        if !samples.on_carrier(p) {
            return Err(WitnessError::MandatoryOffCurve(p.clone()));
        }
    }
    let mut corners: Vec<Point> = vec![samples.corners()[0].clone()];
    for i in 1..=samples.piece_count() {
        let piece = samples.piece(i);
        let mut cuts: Vec<Rational> = mandatory
            .iter()
            .filter(|p| contains_point(&piece, p))
            .map(|p| piece.param_of(p))
            .filter(|t| t.is_positive() && *t < Rational::one())
            .collect();
        cuts.sort();
        cuts.dedup();
        let mut stops: Vec<Point> = cuts.iter().map(|t| piece.point_at(t)).collect();
        stops.push(piece.b.clone());
        let mut from = piece.a.clone();
        for to in stops {
            subdivide_into(&from, &to, h2, &mut corners);
            from = to;
        }
    }
    Ok(PLPath::new(corners, true).expect("subdivision preserves distinct corners"))
}

/// Appends the points dividing `from -> to` into 2^k equal parts — the
/// smallest power of two with squared spacing below `h2` — including `to`
/// but not `from`.
fn subdivide_into(from: &Point, to: &Point, h2: &Rational, out: &mut Vec<Point>) {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    let d2 = &dx * &dx + &dy * &dy;
    let mut n: i64 = 1;
    while d2 >= h2 * rat_int(n * n) {
        n *= 2;
    }
    for k in 1..=n {
        if k == n {
            out.push(to.clone());
        } else {
            let t = rat(k, n);
            out.push(Point::new(&from.x + &t * &dx, &from.y + &t * &dy));
        }
    }
}

/// A certified separation pair for a circuit: `c` (parity 1) and `d`
/// (parity 0) such that every PL path joining them crosses the carrier.
///
/// The supporting points record the construction: `l`/`p` the extreme
/// left/right carrier points, `line_x` the chosen vertical line between
/// them, `a` the highest carrier point on that line, `b` the lowest
/// line point of the split arc through `a`. `c` hangs below `b` closer
/// than the other arc ever comes; `d` sits one unit left of everything.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationWitness {
    pub circuit: PLCircuit,
    pub c: Point,
    pub d: Point,
    pub l: Point,
    pub p: Point,
    pub a: Point,
    pub b: Point,
    pub line_x: Rational,
    pub parity_c: u8,
    pub parity_d: u8,
}

/// All intersection heights of a path's carrier with the vertical line at
/// `x` (the caller guarantees no carrier piece runs along the line).
fn line_heights(path: &PLPath, x: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 1..=path.piece_count() {
        let s = path.piece(i);
        if s.a.x == s.b.x {
            debug_assert_ne!(&s.a.x, x, "line candidates avoid vertical pieces");
            continue;
        }
        let (lo, hi) = if s.a.x <= s.b.x {
            (&s.a.x, &s.b.x)
        } else {
            (&s.b.x, &s.a.x)
        };
        if lo <= x && x <= hi {
            let t = (x - &s.a.x) / (&s.b.x - &s.a.x);
            out.push(&s.a.y + &t * (&s.b.y - &s.a.y));
        }
    }
    out
}

/// Deterministically constructs a separation witness for the circuit.
///
/// The vertical line is the midpoint of the extreme x-range, shifted
/// right by halving offsets while any carrier piece runs along it (at
/// most one shift per vertical piece is ever needed). The interior point
/// `c` is dropped below `b` by half the root of min(1, dist²(b, other
/// arc)), keeping it strictly closer to `b` than that arc; the exterior
/// point `d` goes one unit left of the leftmost carrier point.
pub fn separation_witness(f: &PLCircuit) -> SeparationWitness {
    let ext = extreme_points(f.path());
    let l = ext.leftmost;
    let p = ext.rightmost;
    let mid = (&l.x + &p.x) / rat_int(2);
    let quarter = (&p.x - &l.x) / rat_int(4);

    let has_vertical_piece_at = |x: &Rational| -> bool {
        (1..=f.path().piece_count()).any(|i| {
            let s = f.path().piece(i);
            s.a.x == s.b.x && &s.a.x == x
        })
    };
    let mut line_x = mid.clone();
    let mut shift = quarter;
    for _ in 0..=f.path().piece_count() {
        if !has_vertical_piece_at(&line_x) {
            break;
        }
        line_x = &mid + &shift;
        shift /= rat_int(2);
    }
    assert!(
        !has_vertical_piece_at(&line_x),
        "more distinct shift candidates than vertical pieces"
    );

    let heights = line_heights(f.path(), &line_x);
    let a_y = heights
        .iter()
        .max()
        .expect("line between extremes meets the carrier");
    let a = Point::new(line_x.clone(), a_y.clone());

    let (g0, g1) = split_circuit(f, &l, &p).expect("extreme points are distinct corners");
    let (f1, f2) = if g0.path().on_carrier(&a) {
        (g0, g1)
    } else {
        (g1, g0)
    };
    let b_y = line_heights(f1.path(), &line_x)
        .into_iter()
        .min()
        .expect("the arc through a meets the line");
    let b = Point::new(line_x.clone(), b_y);

    let clearance = GeomSet::of_point(b.clone())
        .dist2(&f2.path().carrier())
        .expect("carrier is nonempty");
    let drop = sqrt_under(&clearance.min(Rational::one()), 16) / rat_int(2);
    let c = Point::new(line_x.clone(), &b.y - &drop);
    let d = Point::new(&l.x - rat_int(1), c.y.clone());

    let parity_c = parity::parity(&c, f.path()).expect("c is off the carrier");
    let parity_d = parity::parity(&d, f.path()).expect("d is left of the carrier");
    debug_assert_eq!(parity_c, 1, "interior witness point must have parity 1");
    debug_assert_eq!(parity_d, 0, "exterior witness point must have parity 0");
    SeparationWitness {
        circuit: f.clone(),
        c,
        d,
        l,
        p,
        a,
        b,
        line_x,
        parity_c,
        parity_d,
    }
}

/// Result of testing one candidate path against a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessCheck {
    /// The earliest point where the path meets the circuit's carrier.
    CrossingAt(PathLocation),
    /// The path misses the carrier — impossible for a correct witness,
    /// reported rather than assumed away.
    NoCrossing,
}

/// Tests a path joining `w.c` to `w.d` against the witness circuit by an
/// exact first-hit query.
pub fn verify_witness(w: &SeparationWitness, g: &PLPath) -> Result<WitnessCheck, WitnessError> {
    if g.first() != &w.c || g.last() != &w.d {
        return Err(WitnessError::EndpointMismatch);
    }
    match first_hit(g, &w.circuit.path().carrier()) {
        Some(loc) => Ok(WitnessCheck::CrossingAt(loc)),
        None => Ok(WitnessCheck::NoCrossing),
    }
}

/// The three-arc probe of a circuit: its two halves split at the vertical
/// extremes, the outer detour joining them, a mid-height chord `T` inside,
/// and the two probe points whose parities differ — `e` on the chord
/// (parity 1) and `g` on the detour (parity 0). No arc can join `e` to
/// `g` without crossing the configuration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Claim4Gadget {
    pub a: Point,
    pub b: Point,
    pub f0: PLArc,
    pub f1: PLArc,
    pub f2: PLArc,
    pub t: Segment,
    pub e: Point,
    pub g: Point,
    pub parity_e: u8,
    pub parity_g: u8,
}

/// Builds the probe gadget: split at the top/bottom extremes, detour
/// around the bounding box, and the leftmost mid-height chord between the
/// two halves that lies in the bounded component.
pub fn claim4_probe(f: &PLCircuit) -> Result<Claim4Gadget, WitnessError> {
    let ext = extreme_points(f.path());
    let a = ext.top;
    let b = ext.bottom;
    let (f0, f1) = split_circuit(f, &a, &b).expect("vertical extremes are distinct corners");
    let f2 = outer_detour(f, &a, &b)?;
    let y_mid = (&a.y + &b.y) / rat_int(2);

    let mut chosen: Option<Segment> = None;
    for cand in chord_candidates(&f0, &f1, &y_mid) {
        let par =
            parity::parity(&cand.midpoint(), f.path()).expect("chord interiors avoid the carrier");
        if par == 1 {
            chosen = Some(cand);
            break;
        }
    }
    let t = chosen.ok_or(WitnessError::NoSeparatingChord)?;
    let e = t.midpoint();

    let g = f2.path().piece(3).midpoint();
    let parity_g = parity::parity(&g, f.path()).expect("detour interior is off the carrier");
    debug_assert_eq!(parity_g, 0, "detour midpoint lies outside");
    Ok(Claim4Gadget {
        a,
        b,
        f0,
        f1,
        f2,
        t,
        e,
        g,
        parity_e: 1,
        parity_g,
    })
}

impl Claim4Gadget {
    /// The gadget as an eight-arc drawing on terminals {a, b, e} and
    /// {c, d, g}: the chord split at `e`, the circuit halves split at the
    /// chord endpoints, and the detour split at `g`. The missing ninth
    /// edge is (e, g).
    pub fn to_drawing(&self) -> Drawing {
        let (c, d) = if self.f0.path().on_carrier(&self.t.a) {
            (self.t.a.clone(), self.t.b.clone())
        } else {
            (self.t.b.clone(), self.t.a.clone())
        };
        debug_assert!(self
            .f1
            .path()
            .on_carrier(if c == self.t.a { &self.t.b } else { &self.t.a }));
        let (f_ac, f_cb) = self
            .f0
            .split_at(&c)
            .expect("chord endpoint is interior to its half");
        let (f_bd, f_da) = self
            .f1
            .split_at(&d)
            .expect("chord endpoint is interior to its half");
        let (f_ag, f_gb) = self
            .f2
            .split_at(&self.g)
            .expect("g is interior to the detour");
        let seg_arc = |from: &Point, to: &Point| {
            PLArc::new(PLPath::new(vec![from.clone(), to.clone()], false).unwrap())
                .expect("chord halves are simple segments")
        };
        let terminals = vec![
            ("a".to_string(), self.a.clone()),
            ("b".to_string(), self.b.clone()),
            ("e".to_string(), self.e.clone()),
            ("c".to_string(), c.clone()),
            ("d".to_string(), d.clone()),
            ("g".to_string(), self.g.clone()),
        ];
        let edge = |u: &str, v: &str, arc: PLArc| DrawnEdge {
            u: u.to_string(),
            v: v.to_string(),
            arc,
        };
        let edges = vec![
            edge("a", "c", f_ac),
            edge("a", "d", f_da.reversed()),
            edge("a", "g", f_ag),
            edge("b", "c", f_cb.reversed()),
            edge("b", "d", f_bd),
            edge("b", "g", f_gb.reversed()),
            edge("e", "c", seg_arc(&self.e, &c)),
            edge("e", "d", seg_arc(&self.e, &d)),
        ];
        Drawing::new(terminals, edges).expect("gadget terminals are distinct by construction")
    }
}
