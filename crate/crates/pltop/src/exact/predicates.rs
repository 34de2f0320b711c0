//! Sign-exact incidence predicates: point-on-segment, segment-segment
//! intersection with full degenerate-case classification, and segment
//! against vertical ray.

use super::{orient, Point, Rational, RayDir, Segment, VerticalRay};
use num_traits::Zero;

/// Classification of the intersection of two closed segments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SegIntersection {
    /// Disjoint.
    Empty,
    /// Exactly one common point (crossing or touching).
    Point(Point),
    /// A common sub-segment of positive length (collinear overlap), oriented
    /// along the first argument.
    Overlap(Segment),
}

/// Does the closed segment contain the point? Exact.
pub fn contains_point(s: &Segment, p: &Point) -> bool {
    if orient(&s.a, &s.b, p) != 0 {
        return false;
    }
    in_box(s, p)
}

fn in_box(s: &Segment, p: &Point) -> bool {
    let (xlo, xhi) = minmax(&s.a.x, &s.b.x);
    let (ylo, yhi) = minmax(&s.a.y, &s.b.y);
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

fn minmax<'a>(a: &'a Rational, b: &'a Rational) -> (&'a Rational, &'a Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Does the closed vertical ray contain the point? Exact.
pub fn ray_contains_point(r: &VerticalRay, p: &Point) -> bool {
    p.x == r.origin.x
        && match r.dir {
            RayDir::Up => p.y >= r.origin.y,
            RayDir::Down => p.y <= r.origin.y,
        }
}

/// Exact intersection of two closed segments, classifying every degenerate
/// configuration: endpoint touching yields `Point`, collinear overlap of
/// positive length yields `Overlap`, collinear-but-disjoint yields `Empty`.
pub fn seg_intersection(s: &Segment, t: &Segment) -> SegIntersection {
    let d1 = orient(&t.a, &t.b, &s.a);
    let d2 = orient(&t.a, &t.b, &s.b);
    let d3 = orient(&s.a, &s.b, &t.a);
    let d4 = orient(&s.a, &s.b, &t.b);

    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        return collinear_intersection(s, t);
    }
    // Strictly one side of the other's supporting line: disjoint.
    if (d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0) || (d3 > 0 && d4 > 0) || (d4 < 0 && d3 < 0) {
        return SegIntersection::Empty;
    }
    // The segments straddle (possibly touching at an endpoint); the
    // supporting lines are not parallel, so a unique point exists.
    let rx = &s.b.x - &s.a.x;
    let ry = &s.b.y - &s.a.y;
    let wx = &t.b.x - &t.a.x;
    let wy = &t.b.y - &t.a.y;
    let denom = &rx * &wy - &ry * &wx;
    debug_assert!(
        !denom.is_zero(),
        "parallel segments slipped past sign tests"
    );
    let qpx = &t.a.x - &s.a.x;
    let qpy = &t.a.y - &s.a.y;
    let u = (&qpx * &wy - &qpy * &wx) / &denom;
    let p = s.point_at(&u);
    debug_assert!(contains_point(t, &p) && contains_point(s, &p));
    SegIntersection::Point(p)
}

/// Both segments on one line: order along the line and compare shadows.
fn collinear_intersection(s: &Segment, t: &Segment) -> SegIntersection {
    // Parametrise t's endpoints along s and clamp the overlap to [0,1].
    let pa = param_on_line(s, &t.a);
    let pb = param_on_line(s, &t.b);
    let (lo, hi) = if pa <= pb { (pa, pb) } else { (pb, pa) };
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    let lo = if lo < zero { zero } else { lo };
    let hi = if hi > one { one } else { hi };
    if lo > hi {
        SegIntersection::Empty
    } else if lo == hi {
        SegIntersection::Point(s.point_at(&lo))
    } else {
        SegIntersection::Overlap(Segment::new(s.point_at(&lo), s.point_at(&hi)))
    }
}

/// Parameter of `p` along `s`'s supporting line (not clamped); `p` must be
/// on the line.
fn param_on_line(s: &Segment, p: &Point) -> Rational {
    let dx = &s.b.x - &s.a.x;
    if !dx.is_zero() {
        (&p.x - &s.a.x) / dx
    } else {
        (&p.y - &s.a.y) / (&s.b.y - &s.a.y)
    }
}

/// A common point of a closed segment and a closed vertical ray, when the
/// two intersect; `None` otherwise. For overlaps (vertical segment on the
/// ray's line) the returned point is the end of the overlap nearest the ray
/// origin.
pub fn segment_ray_intersection(s: &Segment, r: &VerticalRay) -> Option<Point> {
    let ox = &r.origin.x;
    let oy = &r.origin.y;
    if s.a.x == *ox && s.b.x == *ox {
        // Vertical segment on the ray's line: compare y-shadows.
        let (ylo, yhi) = minmax(&s.a.y, &s.b.y);
        return match r.dir {
            RayDir::Up => (yhi >= oy).then(|| Point::new(ox.clone(), ylo.max(oy).clone())),
            RayDir::Down => (ylo <= oy).then(|| Point::new(ox.clone(), yhi.min(oy).clone())),
        };
    }
    let (xlo, xhi) = minmax(&s.a.x, &s.b.x);
    if !(xlo <= ox && ox <= xhi) {
        return None;
    }
    // Non-vertical relative to the line: a single crossing of x = ox.
    let t = (ox - &s.a.x) / (&s.b.x - &s.a.x);
    let y = &s.a.y + &t * (&s.b.y - &s.a.y);
    let on_ray = match r.dir {
        RayDir::Up => &y >= oy,
        RayDir::Down => &y <= oy,
    };
    on_ray.then(|| Point::new(ox.clone(), y))
}
