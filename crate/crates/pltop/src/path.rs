//! Piecewise-linear paths, arcs, and circuits.
//!
//! A [`PLPath`] is the map, not just its image: corners `c_0..c_k` with the
//! canonical parameter domain `[0, k]`, piece `i` (1-based) covering
//! `[i-1, i]` linearly from `c_{i-1}` to `c_i`. Pieces must be non-constant;
//! nothing else is assumed, so a plain path may self-intersect. [`PLArc`]
//! (injective, open) and [`PLCircuit`] (injective closed, a simple polygon)
//! are validated refinements; their constructors run the full pairwise
//! injectivity check and hand back a concrete double-point witness when it
//! fails.

use crate::exact::{
    contains_point, dist2_points, seg_intersection, GeomItem, GeomSet, Point, Rational,
    SegIntersection, Segment, VerticalRay,
};
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors for path construction and surgery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("a path needs at least two corners")]
    TooFewCorners,
    #[error("piece {index} is constant (repeated corner)")]
    DegeneratePiece { index: usize },
    #[error("closed path must end at its first corner")]
    NotClosed,
    #[error("expected an open path")]
    NotOpen,
    #[error("concatenation endpoints do not match")]
    EndpointMismatch,
    #[error("path is not injective: {0}")]
    SelfIntersecting(InjectivityViolation),
    #[error("point does not lie on the circuit")]
    PointNotOnCircuit,
    #[error("split points coincide")]
    CoincidentSplitPoints,
}

/// A position on a path: 1-based piece index, parameter in `[0,1]` within
/// the piece, and the point it maps to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathLocation {
    pub segment_index: usize,
    pub parameter: Rational,
    pub point: Point,
}

impl PathLocation {
    /// Position in the canonical global domain `[0, k]`.
    pub fn global_param(&self) -> Rational {
        Rational::from_integer((self.segment_index as i64 - 1).into()) + &self.parameter
    }
}

impl fmt::Display for PathLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "piece {} at t={}, {}",
            self.segment_index, self.parameter, self.point
        )
    }
}

/// Two distinct parameters mapped to the same point — the witness returned
/// when injectivity validation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityViolation {
    pub first: PathLocation,
    pub second: PathLocation,
}

impl fmt::Display for InjectivityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} revisited: {} and {}",
            self.first.point, self.first, self.second
        )
    }
}

/// A piecewise-linear map from `[0, k]` into the plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLPath {
    corners: Vec<Point>,
    closed: bool,
}

impl PLPath {
    /// Builds a path, checking that consecutive corners differ and that a
    /// closed path returns to its first corner (kept explicitly in the
    /// corner list).
    pub fn new(corners: Vec<Point>, closed: bool) -> Result<Self, PathError> {
        if corners.len() < 2 {
            return Err(PathError::TooFewCorners);
        }
        for (i, w) in corners.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(PathError::DegeneratePiece { index: i + 1 });
            }
        }
        if closed && corners.first() != corners.last() {
            return Err(PathError::NotClosed);
        }
        Ok(PLPath { corners, closed })
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    /// Corners without the duplicated final corner of a closed path.
    pub fn ring(&self) -> &[Point] {
        if self.closed {
            &self.corners[..self.corners.len() - 1]
        } else {
            &self.corners
        }
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Number of pieces `k`.
    pub fn piece_count(&self) -> usize {
        self.corners.len() - 1
    }

    /// Piece `i`, 1-based.
    pub fn piece(&self, i: usize) -> Segment {
        assert!(
            1 <= i && i <= self.piece_count(),
            "piece index out of range"
        );
        Segment::new(self.corners[i - 1].clone(), self.corners[i].clone())
    }

    pub fn first(&self) -> &Point {
        &self.corners[0]
    }

    pub fn last(&self) -> &Point {
        self.corners.last().expect("nonempty")
    }

    /// The image of the path as a union of segments.
    pub fn carrier(&self) -> GeomSet {
        GeomSet::new(
            (1..=self.piece_count())
                .map(|i| GeomItem::Segment(self.piece(i)))
                .collect(),
        )
    }

    /// Does the carrier contain the point?
    pub fn on_carrier(&self, p: &Point) -> bool {
        (1..=self.piece_count()).any(|i| contains_point(&self.piece(i), p))
    }

    /// First location (by parameter) mapping to `p`, if any.
    pub fn locate(&self, p: &Point) -> Option<PathLocation> {
        for i in 1..=self.piece_count() {
            let s = self.piece(i);
            if contains_point(&s, p) {
                return Some(PathLocation {
                    segment_index: i,
                    parameter: s.param_of(p),
                    point: p.clone(),
                });
            }
        }
        None
    }

    /// Location for a global parameter in `[0, k]`. Integer parameters
    /// `g >= 1` are reported on piece `g` at `t = 1`.
    pub fn location_at(&self, g: &Rational) -> PathLocation {
        let k = self.piece_count();
        assert!(
            !g.is_negative() && *g <= Rational::from_integer((k as i64).into()),
            "global parameter out of domain"
        );
        let (idx, t) = if g.is_zero() {
            (1usize, Rational::zero())
        } else {
            let ceil = g.ceil();
            let i = ceil.to_integer();
            let i: usize = i.try_into().expect("parameter in range");
            (i, g - Rational::from_integer((i as i64 - 1).into()))
        };
        let point = self.piece(idx).point_at(&t);
        PathLocation {
            segment_index: idx,
            parameter: t,
            point,
        }
    }

    /// The point at a global parameter.
    pub fn point_at(&self, g: &Rational) -> Point {
        self.location_at(g).point
    }

    /// Joins two open paths sharing an endpoint: the result traverses
    /// `self` then `g`.
    pub fn concat(&self, g: &PLPath) -> Result<PLPath, PathError> {
        if self.closed || g.closed {
            return Err(PathError::NotOpen);
        }
        if self.last() != g.first() {
            return Err(PathError::EndpointMismatch);
        }
        let mut corners = self.corners.clone();
        corners.extend(g.corners[1..].iter().cloned());
        PLPath::new(corners, false)
    }

    /// Reinterprets an open path whose last corner equals its first as a
    /// closed path (e.g. the concatenation of the two halves of a split).
    pub fn into_closed(self) -> Result<PLPath, PathError> {
        if self.first() != self.last() {
            return Err(PathError::NotClosed);
        }
        Ok(PLPath {
            corners: self.corners,
            closed: true,
        })
    }

    /// The same carrier traversed backwards.
    pub fn reversed(&self) -> PLPath {
        let mut corners = self.corners.clone();
        corners.reverse();
        PLPath {
            corners,
            closed: self.closed,
        }
    }

    /// Axis-aligned bounding box of the corners, as `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut xs: Vec<&Rational> = self.corners.iter().map(|p| &p.x).collect();
        let mut ys: Vec<&Rational> = self.corners.iter().map(|p| &p.y).collect();
        xs.sort();
        ys.sort();
        (
            Point::new(
                (*xs.first().unwrap()).clone(),
                (*ys.first().unwrap()).clone(),
            ),
            Point::new((*xs.last().unwrap()).clone(), (*ys.last().unwrap()).clone()),
        )
    }
}

/// The allowed contact points for a pair of pieces: the corners the pieces
/// share by parameter adjacency (including the wrap pair of a closed path).
fn shared_corners(f: &PLPath, i: usize, j: usize) -> Vec<Point> {
    let k = f.piece_count();
    let mut out = Vec::new();
    if j == i + 1 {
        out.push(f.corners[i].clone());
    }
    if f.closed && i == 1 && j == k {
        out.push(f.corners[0].clone());
    }
    out
}

fn violation_for(f: &PLPath, i: usize, j: usize, p: Point) -> InjectivityViolation {
    let si = f.piece(i);
    let sj = f.piece(j);
    let first = PathLocation {
        segment_index: i,
        parameter: si.param_of(&p),
        point: p.clone(),
    };
    let second = PathLocation {
        segment_index: j,
        parameter: sj.param_of(&p),
        point: p,
    };
    InjectivityViolation { first, second }
}

/// Pairwise injectivity check shared by arcs and circuits: every piece pair
/// may meet only in the corners adjacency forces on it. Exhaustive and
/// exact; quadratic in the number of pieces.
fn validate_pieces(f: &PLPath) -> Result<(), InjectivityViolation> {
    let k = f.piece_count();
    for i in 1..=k {
        let si = f.piece(i);
        for j in (i + 1)..=k {
            let sj = f.piece(j);
            let allowed = shared_corners(f, i, j);
            match seg_intersection(&si, &sj) {
                SegIntersection::Empty => {}
                SegIntersection::Point(p) => {
                    if !allowed.contains(&p) {
                        return Err(violation_for(f, i, j, p));
                    }
                }
                SegIntersection::Overlap(o) => {
                    let mid = o.midpoint();
                    let p = [o.a.clone(), o.b.clone(), mid]
                        .into_iter()
                        .find(|q| !allowed.contains(q))
                        .expect("an overlap holds more than two points");
                    return Err(violation_for(f, i, j, p));
                }
            }
        }
    }
    Ok(())
}

/// Checks that an open path is injective. Returns the first violation in
/// piece-pair order with a concrete double point.
pub fn validate_arc(f: &PLPath) -> Result<(), InjectivityViolation> {
    assert!(!f.is_closed(), "validate_arc expects an open path");
    validate_pieces(f)
}

/// Checks that a closed path is injective except for the forced equality
/// `f(0) = f(k)` — that is, that it is a circuit (simple closed polygon).
pub fn validate_circuit(f: &PLPath) -> Result<(), InjectivityViolation> {
    assert!(f.is_closed(), "validate_circuit expects a closed path");
    validate_pieces(f)
}

/// An injective open PL path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLArc(PLPath);

impl PLArc {
    pub fn new(path: PLPath) -> Result<Self, PathError> {
        if path.is_closed() {
            return Err(PathError::NotOpen);
        }
        validate_arc(&path).map_err(PathError::SelfIntersecting)?;
        Ok(PLArc(path))
    }

    /// For internal constructions that are injective by design (sub-arcs of
    /// a circuit, grid routes). Checked in debug builds.
    pub(crate) fn new_unchecked(path: PLPath) -> Self {
        debug_assert!(validate_arc(&path).is_ok());
        PLArc(path)
    }

    pub fn path(&self) -> &PLPath {
        &self.0
    }

    pub fn into_path(self) -> PLPath {
        self.0
    }

    pub fn reversed(&self) -> PLArc {
        PLArc(self.0.reversed())
    }

    /// Splits at a point of the carrier; the point becomes the shared
    /// endpoint of the two halves (inserted as a corner if needed).
    pub fn split_at(&self, p: &Point) -> Result<(PLArc, PLArc), PathError> {
        let loc = self.0.locate(p).ok_or(PathError::PointNotOnCircuit)?;
        if p == self.0.first() || p == self.0.last() {
            return Err(PathError::CoincidentSplitPoints);
        }
        let mut head: Vec<Point> = Vec::new();
        let mut tail: Vec<Point> = Vec::new();
        for (idx, c) in self.0.corners.iter().enumerate() {
            // Corners with index < loc.segment_index are strictly before the
            // split; corner loc.segment_index is the end of the split piece.
            if idx < loc.segment_index {
                head.push(c.clone());
            } else {
                tail.push(c.clone());
            }
        }
        if head.last() != Some(p) {
            head.push(p.clone());
        }
        if tail.first() != Some(p) {
            tail.insert(0, p.clone());
        }
        Ok((
            PLArc::new_unchecked(PLPath::new(head, false)?),
            PLArc::new_unchecked(PLPath::new(tail, false)?),
        ))
    }
}

/// An injective closed PL path: a simple polygon, possibly with collinear
/// consecutive pieces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PLCircuit(PLPath);

impl PLCircuit {
    pub fn new(path: PLPath) -> Result<Self, PathError> {
        if !path.is_closed() {
            return Err(PathError::NotClosed);
        }
        validate_circuit(&path).map_err(PathError::SelfIntersecting)?;
        Ok(PLCircuit(path))
    }

    pub fn path(&self) -> &PLPath {
        &self.0
    }

    pub fn into_path(self) -> PLPath {
        self.0
    }

    /// Smallest feature scale, squared: the minimum of all squared piece
    /// lengths and all squared distances between non-adjacent pieces.
    /// Strictly positive for a circuit.
    pub fn min_feature2(&self) -> Rational {
        let f = &self.0;
        let k = f.piece_count();
        let mut best: Option<Rational> = None;
        let mut fold = |v: Rational| {
            if best.as_ref().map_or(true, |b| &v < b) {
                best = Some(v);
            }
        };
        for i in 1..=k {
            let s = f.piece(i);
            fold(dist2_points(&s.a, &s.b));
            for j in (i + 1)..=k {
                if shared_corners(f, i, j).is_empty() {
                    fold(crate::exact::d2_segment_segment(&s, &f.piece(j)));
                }
            }
        }
        let v = best.expect("circuit has pieces");
        debug_assert!(v.is_positive());
        v
    }
}

/// Splits a circuit at two distinct carrier points `u`, `v` into the arc
/// running forward (in the circuit's orientation) from `u` to `v` and the
/// arc continuing from `v` back to `u`. Mid-piece split points become
/// corners of the arcs.
pub fn split_circuit(f: &PLCircuit, u: &Point, v: &Point) -> Result<(PLArc, PLArc), PathError> {
    if u == v {
        return Err(PathError::CoincidentSplitPoints);
    }
    let path = f.path();
    let loc_u = path.locate(u).ok_or(PathError::PointNotOnCircuit)?;
    if path.locate(v).is_none() {
        return Err(PathError::PointNotOnCircuit);
    }
    let ring = path.ring();
    let k = ring.len();
    // Rotate the ring so the walk starts at u. If u is a corner, start
    // there; otherwise start mid-piece and emit u first.
    let mut rotated: Vec<Point> = Vec::with_capacity(k + 2);
    rotated.push(u.clone());
    let start = loc_u.segment_index % k; // first ring corner strictly after u
    for step in 0..k {
        let c = &ring[(start + step) % k];
        if rotated.last() != Some(c) {
            rotated.push(c.clone());
        }
    }
    if rotated.last() != Some(u) {
        rotated.push(u.clone());
    }
    // rotated is now the circuit re-based at u (closed: first == last).
    // Find v along it and cut.
    let rebased = PLPath::new(rotated, true)?;
    let loc_v = rebased.locate(v).expect("v is on the carrier");
    let mut first: Vec<Point> = Vec::new();
    let mut second: Vec<Point> = Vec::new();
    for (idx, c) in rebased.corners.iter().enumerate() {
        if idx < loc_v.segment_index {
            first.push(c.clone());
        } else {
            second.push(c.clone());
        }
    }
    if first.last() != Some(v) {
        first.push(v.clone());
    }
    if second.first() != Some(v) {
        second.insert(0, v.clone());
    }
    Ok((
        PLArc::new_unchecked(PLPath::new(first, false)?),
        PLArc::new_unchecked(PLPath::new(second, false)?),
    ))
}

/// Local parameter range (within one piece) of the piece's intersection
/// with one geometric item: `None` when disjoint, a degenerate range for a
/// point hit, a proper range for a sub-segment hit.
fn piece_item_range(s: &Segment, item: &GeomItem) -> Option<(Rational, Rational)> {
    match item {
        GeomItem::Point(p) => contains_point(s, p).then(|| {
            let t = s.param_of(p);
            (t.clone(), t)
        }),
        GeomItem::Segment(t) => match seg_intersection(s, t) {
            SegIntersection::Empty => None,
            SegIntersection::Point(p) => {
                let t = s.param_of(&p);
                Some((t.clone(), t))
            }
            SegIntersection::Overlap(o) => {
                let ta = s.param_of(&o.a);
                let tb = s.param_of(&o.b);
                Some(if ta <= tb { (ta, tb) } else { (tb, ta) })
            }
        },
        GeomItem::Ray(r) => piece_ray_range(s, r),
    }
}

fn piece_ray_range(s: &Segment, r: &VerticalRay) -> Option<(Rational, Rational)> {
    use crate::exact::RayDir;
    let ox = &r.origin.x;
    let oy = &r.origin.y;
    if s.a.x == *ox && s.b.x == *ox {
        // Piece lies on the ray's line: clamp the y-shadow.
        let (tlo_y, thi_y) = match r.dir {
            RayDir::Up => {
                let lo = s.a.y.clone().min(s.b.y.clone()).max(oy.clone());
                let hi = s.a.y.clone().max(s.b.y.clone());
                if lo > hi {
                    return None;
                }
                (lo, hi)
            }
            RayDir::Down => {
                let lo = s.a.y.clone().min(s.b.y.clone());
                let hi = s.a.y.clone().max(s.b.y.clone()).min(oy.clone());
                if lo > hi {
                    return None;
                }
                (lo, hi)
            }
        };
        let dy = &s.b.y - &s.a.y;
        let t1 = (&tlo_y - &s.a.y) / &dy;
        let t2 = (&thi_y - &s.a.y) / &dy;
        Some(if t1 <= t2 { (t1, t2) } else { (t2, t1) })
    } else {
        let (xlo, xhi) = if s.a.x <= s.b.x {
            (&s.a.x, &s.b.x)
        } else {
            (&s.b.x, &s.a.x)
        };
        if !(xlo <= ox && ox <= xhi) {
            return None;
        }
        let t = (ox - &s.a.x) / (&s.b.x - &s.a.x);
        let y = &s.a.y + &t * (&s.b.y - &s.a.y);
        let on = match r.dir {
            RayDir::Up => &y >= oy,
            RayDir::Down => &y <= oy,
        };
        on.then_some((t.clone(), t))
    }
}

/// Earliest parameter at which the path meets the set, if it does.
pub fn first_hit(f: &PLPath, x: &GeomSet) -> Option<PathLocation> {
    for i in 1..=f.piece_count() {
        let s = f.piece(i);
        let mut best: Option<Rational> = None;
        for item in x.items() {
            if let Some((lo, _)) = piece_item_range(&s, item) {
                if best.as_ref().map_or(true, |b| &lo < b) {
                    best = Some(lo);
                }
            }
        }
        if let Some(t) = best {
            let point = s.point_at(&t);
            return Some(PathLocation {
                segment_index: i,
                parameter: t,
                point,
            });
        }
    }
    None
}

/// Latest parameter at which the path meets the set, if it does.
pub fn last_hit(f: &PLPath, x: &GeomSet) -> Option<PathLocation> {
    for i in (1..=f.piece_count()).rev() {
        let s = f.piece(i);
        let mut best: Option<Rational> = None;
        for item in x.items() {
            if let Some((_, hi)) = piece_item_range(&s, item) {
                if best.as_ref().map_or(true, |b| &hi > b) {
                    best = Some(hi);
                }
            }
        }
        if let Some(t) = best {
            let point = s.point_at(&t);
            return Some(PathLocation {
                segment_index: i,
                parameter: t,
                point,
            });
        }
    }
    None
}

/// The four axis-extreme carrier points with deterministic tie-breaks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremePoints {
    /// Minimum x; ties broken toward minimum y.
    pub leftmost: Point,
    /// Maximum x; ties broken toward maximum y.
    pub rightmost: Point,
    /// Minimum y; ties broken toward minimum x.
    pub bottom: Point,
    /// Maximum y; ties broken toward maximum x.
    pub top: Point,
}

/// Extreme points of the carrier. Extremes of a PL carrier are attained at
/// corners, so a corner scan suffices.
pub fn extreme_points(f: &PLPath) -> ExtremePoints {
    let ring = f.ring();
    let mut leftmost = &ring[0];
    let mut rightmost = &ring[0];
    let mut bottom = &ring[0];
    let mut top = &ring[0];
    for c in &ring[1..] {
        if (&c.x, &c.y) < (&leftmost.x, &leftmost.y) {
            leftmost = c;
        }
        if (&c.x, &c.y) > (&rightmost.x, &rightmost.y) {
            rightmost = c;
        }
        if (&c.y, &c.x) < (&bottom.y, &bottom.x) {
            bottom = c;
        }
        if (&c.y, &c.x) > (&top.y, &top.x) {
            top = c;
        }
    }
    ExtremePoints {
        leftmost: leftmost.clone(),
        rightmost: rightmost.clone(),
        bottom: bottom.clone(),
        top: top.clone(),
    }
}

/// Shoelace area of a closed path: positive for counter-clockwise
/// orientation, negated by reversal. Nonzero for every circuit.
pub fn signed_area(f: &PLPath) -> Rational {
    assert!(f.is_closed(), "signed_area expects a closed path");
    let ring = f.ring();
    let mut twice = Rational::zero();
    for i in 0..ring.len() {
        let p = &ring[i];
        let q = &ring[(i + 1) % ring.len()];
        twice += &p.x * &q.y - &q.x * &p.y;
    }
    twice / Rational::from_integer(2.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pt, rat, rat_int};

    fn path(corners: &[(i64, i64)], closed: bool) -> PLPath {
        PLPath::new(corners.iter().map(|&(x, y)| pt(x, y)).collect(), closed).unwrap()
    }

    fn rect() -> PLPath {
        path(&[(0, 0), (4, 0), (4, 2), (0, 2), (0, 0)], true)
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            PLPath::new(vec![pt(0, 0)], false),
            Err(PathError::TooFewCorners)
        );
        assert_eq!(
            PLPath::new(vec![pt(0, 0), pt(0, 0), pt(1, 0)], false),
            Err(PathError::DegeneratePiece { index: 1 })
        );
        assert_eq!(
            PLPath::new(vec![pt(0, 0), pt(1, 0), pt(1, 1)], true),
            Err(PathError::NotClosed)
        );
        assert!(PLPath::new(vec![pt(0, 0), pt(1, 0)], false).is_ok());
    }

    #[test]
    fn concat_and_reverse() {
        let f = path(&[(0, 0), (2, 0)], false);
        let g = path(&[(2, 0), (2, 2)], false);
        let fg = f.concat(&g).unwrap();
        assert_eq!(fg.corners(), &[pt(0, 0), pt(2, 0), pt(2, 2)]);
        assert_eq!(
            f.concat(&path(&[(9, 9), (0, 9)], false)),
            Err(PathError::EndpointMismatch)
        );
        let r = fg.reversed();
        assert_eq!(r.corners(), &[pt(2, 2), pt(2, 0), pt(0, 0)]);
        assert_eq!(r.reversed(), fg);
    }

    #[test]
    fn validate_arc_accepts_straight_and_bent() {
        let l = path(&[(0, 0), (2, 0), (2, 2)], false);
        assert!(validate_arc(&l).is_ok());
        // Collinear continuation is fine.
        let c = path(&[(0, 0), (1, 0), (3, 0)], false);
        assert!(validate_arc(&c).is_ok());
    }

    #[test]
    fn validate_arc_catches_backtrack_overlap() {
        let f = path(&[(0, 0), (2, 0), (1, 0)], false);
        let err = validate_arc(&f).unwrap_err();
        // The double point must be genuine: two parameters, same point.
        assert_ne!(err.first.global_param(), err.second.global_param());
        assert_eq!(err.first.point, err.second.point);
        assert_eq!(err.first.segment_index, 1);
        assert_eq!(err.second.segment_index, 2);
    }

    #[test]
    fn validate_arc_catches_crossing() {
        let f = path(&[(0, 0), (4, 0), (4, 4), (2, -2)], false);
        let err = validate_arc(&f).unwrap_err();
        assert_eq!(err.first.point, err.second.point);
        assert!(f.on_carrier(&err.first.point));
    }

    #[test]
    fn validate_circuit_examples() {
        assert!(validate_circuit(&rect()).is_ok());
        // Figure-eight: corner revisited.
        let eight = path(
            &[
                (0, 0),
                (2, 0),
                (2, 2),
                (0, 2),
                (0, 0),
                (-2, 0),
                (-2, -2),
                (0, -2),
                (0, 0),
            ],
            true,
        );
        assert!(validate_circuit(&eight).is_err());
        // Out-and-back (k = 2) is closed but not a circuit.
        let back = path(&[(0, 0), (2, 0), (0, 0)], true);
        assert!(validate_circuit(&back).is_err());
    }

    #[test]
    fn arc_and_circuit_constructors() {
        assert!(PLArc::new(path(&[(0, 0), (1, 0), (1, 1)], false)).is_ok());
        assert!(matches!(PLArc::new(rect()), Err(PathError::NotOpen)));
        assert!(PLCircuit::new(rect()).is_ok());
        assert!(matches!(
            PLCircuit::new(path(&[(0, 0), (1, 0)], false)),
            Err(PathError::NotClosed)
        ));
    }

    #[test]
    fn split_circuit_at_corners() {
        let f = PLCircuit::new(rect()).unwrap();
        let (g, h) = split_circuit(&f, &pt(0, 0), &pt(4, 2)).unwrap();
        assert_eq!(g.path().corners(), &[pt(0, 0), pt(4, 0), pt(4, 2)]);
        assert_eq!(h.path().corners(), &[pt(4, 2), pt(0, 2), pt(0, 0)]);
    }

    #[test]
    fn split_circuit_mid_piece() {
        let f = PLCircuit::new(rect()).unwrap();
        let (g, h) = split_circuit(&f, &pt(2, 0), &pt(2, 2)).unwrap();
        assert_eq!(
            g.path().corners(),
            &[pt(2, 0), pt(4, 0), pt(4, 2), pt(2, 2)]
        );
        assert_eq!(
            h.path().corners(),
            &[pt(2, 2), pt(0, 2), pt(0, 0), pt(2, 0)]
        );
        // Union of the two arcs is the original carrier: endpoints meet.
        assert_eq!(g.path().last(), h.path().first());
        assert_eq!(h.path().last(), g.path().first());
    }

    #[test]
    fn split_circuit_errors() {
        let f = PLCircuit::new(rect()).unwrap();
        assert_eq!(
            split_circuit(&f, &pt(2, 1), &pt(0, 0)),
            Err(PathError::PointNotOnCircuit)
        );
        assert_eq!(
            split_circuit(&f, &pt(0, 0), &pt(0, 0)),
            Err(PathError::CoincidentSplitPoints)
        );
    }

    #[test]
    fn hits_along_an_l_path() {
        // An L-shaped path (0,0)-(4,0)-(4,4) against a vertical segment
        // through x = 2: the first hit is on the horizontal leg.
        let f = path(&[(0, 0), (4, 0), (4, 4)], false);
        let x = GeomSet::of_segment(Segment::new(pt(2, -1), pt(2, 5)));
        let hit = first_hit(&f, &x).unwrap();
        assert_eq!(hit.point, pt(2, 0));
        assert_eq!(hit.segment_index, 1);
        assert_eq!(hit.parameter, rat(1, 2));
        let last = last_hit(&f, &x).unwrap();
        assert_eq!(last.point, pt(2, 0));
        // No hit at all.
        let miss = GeomSet::of_point(pt(9, 9));
        assert_eq!(first_hit(&f, &miss), None);
    }

    #[test]
    fn hits_with_rays_and_overlaps() {
        let f = path(&[(0, 0), (4, 0), (4, 4)], false);
        // Upward ray through the vertical piece's interior.
        let ray = GeomSet::of_ray(VerticalRay::up(pt(4, 2)));
        let hit = first_hit(&f, &ray).unwrap();
        assert_eq!(hit.point, pt(4, 2));
        assert_eq!(hit.segment_index, 2);
        let last = last_hit(&f, &ray).unwrap();
        assert_eq!(last.point, pt(4, 4));
        // Overlapping segment: earliest point of the overlap wins.
        let over = GeomSet::of_segment(Segment::new(pt(1, 0), pt(3, 0)));
        assert_eq!(first_hit(&f, &over).unwrap().point, pt(1, 0));
        assert_eq!(last_hit(&f, &over).unwrap().point, pt(3, 0));
    }

    #[test]
    fn first_hit_prefers_earliest_parameter_across_items() {
        let f = path(&[(0, 0), (10, 0)], false);
        let x = GeomSet::new(vec![GeomItem::Point(pt(7, 0)), GeomItem::Point(pt(3, 0))]);
        assert_eq!(first_hit(&f, &x).unwrap().point, pt(3, 0));
        assert_eq!(last_hit(&f, &x).unwrap().point, pt(7, 0));
    }

    #[test]
    fn extremes_with_ties() {
        let f = rect();
        let e = extreme_points(&f);
        assert_eq!(e.leftmost, pt(0, 0));
        assert_eq!(e.rightmost, pt(4, 2));
        assert_eq!(e.bottom, pt(0, 0));
        assert_eq!(e.top, pt(4, 2));
    }

    #[test]
    fn area_sign_and_reversal() {
        let f = rect();
        assert_eq!(signed_area(&f), rat_int(8));
        assert_eq!(signed_area(&f.reversed()), rat_int(-8));
    }

    #[test]
    fn min_feature_of_rectangle() {
        let f = PLCircuit::new(rect()).unwrap();
        // Shortest side is 2; opposite long sides are 2 apart; 2^2 = 4.
        assert_eq!(f.min_feature2(), rat_int(4));
    }

    #[test]
    fn location_roundtrip() {
        let f = rect();
        let loc = f.location_at(&rat(5, 2));
        assert_eq!(loc.segment_index, 3);
        assert_eq!(loc.parameter, rat(1, 2));
        assert_eq!(loc.point, pt(2, 2));
        let corner = f.location_at(&rat_int(2));
        assert_eq!(corner.segment_index, 2);
        assert_eq!(corner.parameter, rat_int(1));
        assert_eq!(corner.point, pt(4, 2));
        assert_eq!(f.location_at(&rat_int(0)).point, pt(0, 0));
    }

    #[test]
    fn arc_split_at_interior_point() {
        let a = PLArc::new(path(&[(0, 0), (4, 0), (4, 4)], false)).unwrap();
        let (h, t) = a.split_at(&pt(2, 0)).unwrap();
        assert_eq!(h.path().corners(), &[pt(0, 0), pt(2, 0)]);
        assert_eq!(t.path().corners(), &[pt(2, 0), pt(4, 0), pt(4, 4)]);
        let (h2, t2) = a.split_at(&pt(4, 0)).unwrap();
        assert_eq!(h2.path().corners(), &[pt(0, 0), pt(4, 0)]);
        assert_eq!(t2.path().corners(), &[pt(4, 0), pt(4, 4)]);
    }
}
