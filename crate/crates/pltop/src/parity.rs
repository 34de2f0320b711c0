//! The ray-crossing parity map.
//!
//! For a query point `c` off a path's carrier, shoot the vertical ray
//! upward from `c` and decompose the *preimage* of the ray under the path
//! into maximal parameter components. Each component is classified by the
//! sides (left/right of the ray's line) the path occupies immediately
//! before and after it: different sides make it `Simple`, equal sides
//! `Double`. The parity of the number of Simple components is the value of
//! the parity map — the quantity that is constant along any connected set
//! avoiding the carrier, additive under concatenation, and equal to 1
//! inside a circuit.
//!
//! Working with preimage components (rather than geometric intersection
//! points) makes the map well-defined for arbitrary, possibly
//! self-intersecting PL maps, which is exactly what the additivity law
//! needs.

use crate::exact::{d2_point_ray, rat_int, Point, Rational, VerticalRay};
use crate::path::{PLCircuit, PLPath, PathLocation};
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

/// Which side of the vertical line through the query point.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "L",
            Side::R => "R",
        })
    }
}

/// Component classification: do the sides before and after differ?
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    Simple,
    Double,
}

/// The parameter extent of one component of the ray preimage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComponentSpan {
    /// An isolated parameter (transversal crossing or a touched corner).
    SinglePoint(PathLocation),
    /// A nondegenerate parameter interval (run of carrier on the ray). For
    /// closed paths `wraps` marks the component containing the shared
    /// first/last corner; then `start` is late in the domain and `end`
    /// early.
    Interval {
        start: PathLocation,
        end: PathLocation,
        wraps: bool,
    },
}

impl ComponentSpan {
    /// A representative carrier point of the component (its first point).
    pub fn first_point(&self) -> &Point {
        match self {
            ComponentSpan::SinglePoint(loc) => &loc.point,
            ComponentSpan::Interval { start, .. } => &start.point,
        }
    }
}

/// One maximal component of the ray preimage, classified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RayComponent {
    pub span: ComponentSpan,
    pub side_before: Side,
    pub side_after: Side,
    pub classification: Classification,
}

/// Complete decomposition of a ray preimage, with the derived parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RayDecomposition {
    pub query: Point,
    pub path: PLPath,
    pub components: Vec<RayComponent>,
    pub simple_count: usize,
    pub parity: u8,
    /// Side letters of the gaps between components. For an open path this
    /// is the word `w_0..w_l` (length components+1): `w_0` is the side
    /// before the first component and each Simple component flips the
    /// letter. For a closed path it is the cyclic sequence of sides read
    /// after each component.
    pub gap_word: Vec<Side>,
}

/// The open vertical strip strictly between the endpoint verticals of an
/// open path — the x-range on which its parity map is defined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripDomain {
    pub x_min: Rational,
    pub x_max: Rational,
}

impl StripDomain {
    pub fn contains_x(&self, x: &Rational) -> bool {
        self.x_min < *x && *x < self.x_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("query point lies on the carrier")]
    PointOnCurve,
    #[error("query point is outside the open strip between the path's endpoint verticals")]
    OutsideStrip,
    #[error("open path's endpoints lie on one vertical line: the strip is empty")]
    EmptyStrip,
}

/// The strip domain of an open path.
pub fn strip_domain(f: &PLPath) -> Result<StripDomain, ParityError> {
    assert!(!f.is_closed(), "strip_domain applies to open paths");
    let a = &f.first().x;
    let b = &f.last().x;
    if a == b {
        return Err(ParityError::EmptyStrip);
    }
    let (x_min, x_max) = if a < b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    Ok(StripDomain { x_min, x_max })
}

/// How one piece meets the upward ray (given the query off the carrier):
/// not at all, at a single local parameter, or with its whole extent.
enum PieceHit {
    Miss,
    At(Rational),
    Full,
}

fn piece_hit(a: &Point, b: &Point, c: &Point) -> PieceHit {
    if a.x == c.x && b.x == c.x {
        // Piece lies on the ray's line; since the query is off the
        // carrier, it is entirely above or entirely below the query.
        let above = a.y.clone().min(b.y.clone()) > c.y;
        debug_assert!(above || a.y.clone().max(b.y.clone()) < c.y);
        if above {
            PieceHit::Full
        } else {
            PieceHit::Miss
        }
    } else {
        let (xlo, xhi) = if a.x <= b.x {
            (&a.x, &b.x)
        } else {
            (&b.x, &a.x)
        };
        if !(*xlo <= c.x && c.x <= *xhi) {
            return PieceHit::Miss;
        }
        let t = (&c.x - &a.x) / (&b.x - &a.x);
        let y = &a.y + &t * (&b.y - &a.y);
        debug_assert!(y != c.y, "query on carrier must be rejected earlier");
        if y > c.y {
            PieceHit::At(t)
        } else {
            PieceHit::Miss
        }
    }
}

fn side_of(x: &Rational, cx: &Rational) -> Side {
    debug_assert!(x != cx, "side reference corner on the ray's line");
    if x < cx {
        Side::L
    } else {
        Side::R
    }
}

/// Side occupied by the path immediately before global parameter `lo`
/// (which must be > 0): the start corner of the piece reaching `lo`.
fn side_before(f: &PLPath, c: &Point, lo: &Rational) -> Side {
    debug_assert!(lo.is_positive());
    let j = lo.ceil().to_integer().to_usize().expect("piece index fits");
    side_of(&f.corners()[j - 1].x, &c.x)
}

/// Side occupied immediately after global parameter `hi` (which must be
/// < k): the end corner of the piece leaving `hi`.
fn side_after(f: &PLPath, c: &Point, hi: &Rational) -> Side {
    let j = hi
        .floor()
        .to_integer()
        .to_usize()
        .expect("piece index fits")
        + 1;
    side_of(&f.corners()[j].x, &c.x)
}

/// Decomposes the preimage of the upward ray from `c` under `f` into
/// classified components and computes the parity.
///
/// `c` must be off the carrier; for an open `f` it must additionally lie
/// strictly inside the strip between the endpoint verticals (the parity
/// map's domain). Handles transversal crossings, corners on the ray, runs
/// of vertical pieces on the ray, and (for closed paths) the component
/// through the shared first/last corner, which is merged cyclically.
pub fn ray_decomposition(c: &Point, f: &PLPath) -> Result<RayDecomposition, ParityError> {
    if f.on_carrier(c) {
        return Err(ParityError::PointOnCurve);
    }
    if !f.is_closed() && !strip_domain(f)?.contains_x(&c.x) {
        return Err(ParityError::OutsideStrip);
    }

    let k = f.piece_count();
    let k_rat = rat_int(k as i64);

    // Collect per-piece hits as global parameter intervals and merge the
    // ones that touch (they always touch at piece junctions).
    let mut raw: Vec<(Rational, Rational)> = Vec::new();
    let push_merge = |lo: Rational, hi: Rational, raw: &mut Vec<(Rational, Rational)>| {
        if let Some(last) = raw.last_mut() {
            if last.1 == lo {
                last.1 = hi;
                return;
            }
        }
        raw.push((lo, hi));
    };
    for i in 1..=k {
        let a = &f.corners()[i - 1];
        let b = &f.corners()[i];
        match piece_hit(a, b, c) {
            PieceHit::Miss => {}
            PieceHit::At(t) => {
                let g = rat_int((i - 1) as i64) + t;
                push_merge(g.clone(), g, &mut raw);
            }
            PieceHit::Full => {
                push_merge(rat_int((i - 1) as i64), rat_int(i as i64), &mut raw);
            }
        }
    }

    let mut components: Vec<RayComponent> = Vec::new();
    let plain = |lo: &Rational, hi: &Rational| -> RayComponent {
        let before = side_before(f, c, lo);
        let after = side_after(f, c, hi);
        let span = if lo == hi {
            ComponentSpan::SinglePoint(f.location_at(lo))
        } else {
            ComponentSpan::Interval {
                start: f.location_at(lo),
                end: f.location_at(hi),
                wraps: false,
            }
        };
        RayComponent {
            span,
            side_before: before,
            side_after: after,
            classification: classify(before, after),
        }
    };

    let full_domain = raw.len() == 1 && raw[0].0.is_zero() && raw[0].1 == k_rat;
    if full_domain {
        // The whole carrier lies on the ray (a degenerate closed path on
        // one vertical line). There is no off-ray neighborhood to take
        // sides from; by convention the component is Double with sides L.
        debug_assert!(f.is_closed());
        components.push(RayComponent {
            span: ComponentSpan::Interval {
                start: f.location_at(&Rational::zero()),
                end: f.location_at(&k_rat),
                wraps: true,
            },
            side_before: Side::L,
            side_after: Side::L,
            classification: Classification::Double,
        });
    } else if f.is_closed()
        && raw.len() >= 2
        && raw.first().map(|r| r.0.is_zero()) == Some(true)
        && raw.last().map(|r| r.1 == k_rat) == Some(true)
    {
        // The shared first/last corner is on the ray: the first and last
        // raw intervals are one component of the cyclic parameter. Sides
        // come from the genuinely preceding piece (before the last raw
        // interval) and following piece (after the first raw interval).
        let first = raw.remove(0);
        let last = raw.pop().expect("len >= 2");
        let before = side_before(f, c, &last.0);
        let after = side_after(f, c, &first.1);
        let span = if last.0 == k_rat && first.1.is_zero() {
            // Only the shared corner itself lies on the ray.
            ComponentSpan::SinglePoint(f.location_at(&Rational::zero()))
        } else {
            ComponentSpan::Interval {
                start: f.location_at(&last.0),
                end: f.location_at(&first.1),
                wraps: true,
            }
        };
        components.push(RayComponent {
            span,
            side_before: before,
            side_after: after,
            classification: classify(before, after),
        });
        for (lo, hi) in &raw {
            components.push(plain(lo, hi));
        }
    } else {
        for (lo, hi) in &raw {
            components.push(plain(lo, hi));
        }
    }

    let simple_count = components
        .iter()
        .filter(|comp| comp.classification == Classification::Simple)
        .count();
    let parity = (simple_count % 2) as u8;

    let gap_word = if f.is_closed() {
        components.iter().map(|comp| comp.side_after).collect()
    } else {
        let mut w = Vec::with_capacity(components.len() + 1);
        let mut cur = components
            .first()
            .map(|comp| comp.side_before)
            .unwrap_or_else(|| side_of(&f.first().x, &c.x));
        w.push(cur);
        for comp in &components {
            if comp.classification == Classification::Simple {
                cur = cur.flipped();
            }
            w.push(cur);
        }
        w
    };

    let dec = RayDecomposition {
        query: c.clone(),
        path: f.clone(),
        components,
        simple_count,
        parity,
        gap_word,
    };
    debug_assert!(decomposition_on_ray(&dec));
    Ok(dec)
}

fn classify(before: Side, after: Side) -> Classification {
    if before == after {
        Classification::Double
    } else {
        Classification::Simple
    }
}

/// Debug check: every reported span endpoint really lies on the query ray.
fn decomposition_on_ray(dec: &RayDecomposition) -> bool {
    let ray = VerticalRay::up(dec.query.clone());
    dec.components.iter().all(|comp| match &comp.span {
        ComponentSpan::SinglePoint(loc) => d2_point_ray(&loc.point, &ray).is_zero(),
        ComponentSpan::Interval { start, end, .. } => {
            d2_point_ray(&start.point, &ray).is_zero() && d2_point_ray(&end.point, &ray).is_zero()
        }
    })
}

/// The parity map: parity of the number of Simple components of the ray
/// preimage. Same preconditions as [`ray_decomposition`].
pub fn parity(c: &Point, f: &PLPath) -> Result<u8, ParityError> {
    ray_decomposition(c, f).map(|d| d.parity)
}

/// Where a point sits relative to a circuit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointPosition {
    Inside,
    Outside,
    OnCurve,
}

impl fmt::Display for PointPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointPosition::Inside => "inside",
            PointPosition::Outside => "outside",
            PointPosition::OnCurve => "on-curve",
        })
    }
}

/// Classifies a point against a circuit: on the carrier, or by parity
/// (1 = the bounded side, 0 = the unbounded side).
pub fn point_in_circuit(c: &Point, f: &PLCircuit) -> PointPosition {
    if f.path().on_carrier(c) {
        return PointPosition::OnCurve;
    }
    match parity(c, f.path()).expect("closed path, point off carrier") {
        1 => PointPosition::Inside,
        _ => PointPosition::Outside,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pt, rat};
    use crate::path::PLPath;

    fn path(corners: &[(i64, i64)], closed: bool) -> PLPath {
        PLPath::new(corners.iter().map(|&(x, y)| pt(x, y)).collect(), closed).unwrap()
    }

    fn rect() -> PLPath {
        path(&[(0, 0), (4, 0), (4, 2), (0, 2), (0, 0)], true)
    }

    fn circuit(corners: &[(i64, i64)]) -> PLCircuit {
        let mut v: Vec<(i64, i64)> = corners.to_vec();
        v.push(corners[0]);
        PLCircuit::new(path(&v, true)).unwrap()
    }

    #[test]
    fn transversal_double_crossing_below_rectangle() {
        let d = ray_decomposition(&pt(2, -1), &rect()).unwrap();
        assert_eq!(d.components.len(), 2);
        for comp in &d.components {
            assert_eq!(comp.classification, Classification::Simple);
            assert!(matches!(comp.span, ComponentSpan::SinglePoint(_)));
        }
        assert_eq!(d.components[0].span.first_point(), &pt(2, 0));
        assert_eq!(d.components[1].span.first_point(), &pt(2, 2));
        assert_eq!(d.simple_count, 2);
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn vertical_edge_is_one_double_interval() {
        let d = ray_decomposition(&pt(4, -1), &rect()).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert_eq!(comp.side_before, Side::L);
        assert_eq!(comp.side_after, Side::L);
        assert_eq!(comp.classification, Classification::Double);
        match &comp.span {
            ComponentSpan::Interval { start, end, wraps } => {
                assert_eq!(start.point, pt(4, 0));
                assert_eq!(end.point, pt(4, 2));
                assert!(!wraps);
            }
            other => panic!("expected interval, got {other:?}"),
        }
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn wrapping_left_edge_is_double() {
        let d = ray_decomposition(&pt(0, -1), &rect()).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert_eq!(comp.classification, Classification::Double);
        assert_eq!(comp.side_before, Side::R);
        assert_eq!(comp.side_after, Side::R);
        match &comp.span {
            ComponentSpan::Interval { start, end, wraps } => {
                assert!(wraps);
                assert_eq!(start.point, pt(0, 2));
                assert_eq!(end.point, pt(0, 0));
            }
            other => panic!("expected wrapping interval, got {other:?}"),
        }
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn interior_point_sees_one_simple_crossing() {
        let d = ray_decomposition(&pt(2, 1), &rect()).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].classification, Classification::Simple);
        assert_eq!(d.components[0].span.first_point(), &pt(2, 2));
        assert_eq!(d.parity, 1);
    }

    #[test]
    fn parity_of_miss_is_zero() {
        assert_eq!(parity(&pt(5, 1), &rect()).unwrap(), 0);
        let d = ray_decomposition(&pt(5, 1), &rect()).unwrap();
        assert!(d.components.is_empty());
        assert!(d.gap_word.is_empty());
    }

    #[test]
    fn open_segment_below_all() {
        let f = path(&[(0, 0), (4, 0)], false);
        let d = ray_decomposition(&pt(2, -1), &f).unwrap();
        assert_eq!(d.parity, 1);
        assert_eq!(d.gap_word, vec![Side::L, Side::R]);
        assert_ne!(d.gap_word.first(), d.gap_word.last());
    }

    #[test]
    fn preconditions_are_rejected() {
        assert_eq!(parity(&pt(4, 1), &rect()), Err(ParityError::PointOnCurve));
        let f = path(&[(0, 0), (4, 0)], false);
        assert_eq!(parity(&pt(5, -1), &f), Err(ParityError::OutsideStrip));
        assert_eq!(parity(&pt(0, -1), &f), Err(ParityError::OutsideStrip));
        assert_eq!(parity(&pt(4, -1), &f), Err(ParityError::OutsideStrip));
        let v = path(&[(0, 0), (0, 2)], false);
        assert_eq!(parity(&pt(0, -1), &v), Err(ParityError::EmptyStrip));
    }

    #[test]
    fn corner_on_ray_transversal() {
        // Tent: the ray passes through the apex; sides differ.
        let f = path(&[(0, 0), (2, 1), (4, 0)], false);
        let d = ray_decomposition(&pt(2, 0), &f).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert!(matches!(comp.span, ComponentSpan::SinglePoint(_)));
        assert_eq!(comp.span.first_point(), &pt(2, 1));
        assert_eq!(comp.classification, Classification::Simple);
        assert_eq!(d.parity, 1);
    }

    #[test]
    fn corner_on_ray_grazing() {
        // Triangle whose rightmost corner grazes the ray from the left.
        let f = path(&[(0, 0), (2, 1), (0, 2), (0, 0)], true);
        let d = ray_decomposition(&pt(2, 0), &f).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert_eq!(comp.side_before, Side::L);
        assert_eq!(comp.side_after, Side::L);
        assert_eq!(comp.classification, Classification::Double);
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn vertical_run_merges_into_one_simple_component() {
        let f = path(&[(0, 0), (1, 0), (1, 2), (1, 5), (2, 5)], false);
        let d = ray_decomposition(&pt(1, -1), &f).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert_eq!(comp.side_before, Side::L);
        assert_eq!(comp.side_after, Side::R);
        assert_eq!(comp.classification, Classification::Simple);
        match &comp.span {
            ComponentSpan::Interval { start, end, wraps } => {
                assert_eq!(start.point, pt(1, 0));
                assert_eq!(end.point, pt(1, 5));
                assert!(!wraps);
            }
            other => panic!("expected interval, got {other:?}"),
        }
        assert_eq!(d.parity, 1);
        assert_eq!(d.gap_word, vec![Side::L, Side::R]);
    }

    #[test]
    fn shared_corner_alone_on_ray() {
        // Diamond based at the origin; ray up from below the base corner.
        let f = path(&[(0, 0), (2, 2), (4, 0), (2, -2), (0, 0)], true);
        let d = ray_decomposition(&pt(0, -3), &f).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert!(matches!(comp.span, ComponentSpan::SinglePoint(_)));
        assert_eq!(comp.span.first_point(), &pt(0, 0));
        assert_eq!(comp.side_before, Side::R);
        assert_eq!(comp.side_after, Side::R);
        assert_eq!(comp.classification, Classification::Double);
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn full_domain_on_ray_is_double_by_convention() {
        let f = path(&[(0, 1), (0, 3), (0, 1)], true);
        let d = ray_decomposition(&pt(0, 0), &f).unwrap();
        assert_eq!(d.components.len(), 1);
        let comp = &d.components[0];
        assert_eq!(comp.classification, Classification::Double);
        assert_eq!((comp.side_before, comp.side_after), (Side::L, Side::L));
        assert!(matches!(
            comp.span,
            ComponentSpan::Interval { wraps: true, .. }
        ));
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn doubled_open_segment_counts_twice() {
        // Out-and-back horizontal pass above the query: two transversal
        // preimage components, one per traversal direction.
        let f = path(&[(1, 1), (3, 1), (1, 1)], true);
        let d = ray_decomposition(&pt(2, 0), &f).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.simple_count, 2);
        assert_eq!(d.parity, 0);
    }

    #[test]
    fn point_in_circuit_examples() {
        let f = circuit(&[(0, 0), (4, 0), (4, 2), (0, 2)]);
        assert_eq!(point_in_circuit(&pt(2, 1), &f), PointPosition::Inside);
        assert_eq!(point_in_circuit(&pt(-1, 1), &f), PointPosition::Outside);
        assert_eq!(point_in_circuit(&pt(4, 1), &f), PointPosition::OnCurve);
    }

    #[test]
    fn additivity_on_a_split_closed_map() {
        // Split the rectangle at two corners into two open halves; the
        // closed concatenation has the parity sum of the halves at every
        // common-strip query point.
        let f1 = path(&[(0, 0), (4, 0), (4, 2)], false);
        let f2 = path(&[(4, 2), (0, 2), (0, 0)], false);
        let f3 = f1.concat(&f2).unwrap().into_closed().unwrap();
        for q in [pt(2, 1), pt(2, -1), pt(2, 5), pt(1, 1), pt(3, -2)] {
            let p3 = parity(&q, &f3).unwrap();
            let p1 = parity(&q, &f1).unwrap();
            let p2 = parity(&q, &f2).unwrap();
            assert_eq!(p3, p1 ^ p2, "at {q}");
        }
    }

    #[test]
    fn gap_word_letter_changes_match_simple_count() {
        let f = path(&[(0, 0), (1, 3), (2, -1), (3, 4), (4, 0)], false);
        let q = Point::new(rat(3, 2), rat(-5, 1));
        let d = ray_decomposition(&q, &f).unwrap();
        let changes = d.gap_word.windows(2).filter(|w| w[0] != w[1]).count();
        assert_eq!(changes, d.simple_count);
        assert_eq!(d.gap_word.len(), d.components.len() + 1);
    }
}
