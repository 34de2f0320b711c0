//! Exact plane primitives: points, segments, vertical rays, and finite
//! unions of them, with sign-exact predicates and squared distances.
//!
//! Everything here is decided in rational arithmetic — there is no epsilon
//! anywhere in the crate. Distances are always *squared* distances so they
//! stay rational; callers that need a length use
//! [`sqrt_under`](crate::exact::sqrt_under) to get a conservative rational
//! approximation.

mod distance;
mod predicates;
mod rational;

pub use distance::{
    d2_point_point, d2_point_ray, d2_point_segment, d2_ray_ray, d2_segment_ray, d2_segment_segment,
};
pub use predicates::{
    contains_point, ray_contains_point, seg_intersection, segment_ray_intersection, SegIntersection,
};
pub use rational::{
    exact_sqrt, format_rational, parse_rational, rat, rat_int, sqrt_under, Rational,
    RationalParseError,
};

use num_traits::Signed;
use std::fmt;
use thiserror::Error;

/// A point of the rational plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

/// Convenience constructor for integer points, used heavily in tests.
pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat_int(x), rat_int(y))
}

/// A closed, non-degenerate straight segment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    /// Panics when the endpoints coincide; every predicate below relies on
    /// segments having positive length.
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a != b, "degenerate segment at {a}");
        Segment { a, b }
    }

    /// Exact midpoint.
    pub fn midpoint(&self) -> Point {
        let two = rat_int(2);
        Point::new(
            (&self.a.x + &self.b.x) / &two,
            (&self.a.y + &self.b.y) / &two,
        )
    }

    /// The point at parameter `t` in `[0,1]` along `a -> b`.
    pub fn point_at(&self, t: &Rational) -> Point {
        Point::new(
            &self.a.x + t * (&self.b.x - &self.a.x),
            &self.a.y + t * (&self.b.y - &self.a.y),
        )
    }

    /// Parameter of a point known to lie on the segment.
    pub fn param_of(&self, p: &Point) -> Rational {
        debug_assert!(contains_point(self, p));
        let dx = &self.b.x - &self.a.x;
        if !dx.is_zero() {
            (&p.x - &self.a.x) / dx
        } else {
            (&p.y - &self.a.y) / (&self.b.y - &self.a.y)
        }
    }
}

use num_traits::Zero;

/// Direction of a vertical ray.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RayDir {
    Up,
    Down,
}

/// A closed vertical ray: origin plus everything strictly above (`Up`) or
/// below (`Down`) it on the same vertical line, origin included.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerticalRay {
    pub origin: Point,
    pub dir: RayDir,
}

impl VerticalRay {
    pub fn up(origin: Point) -> Self {
        VerticalRay {
            origin,
            dir: RayDir::Up,
        }
    }

    pub fn down(origin: Point) -> Self {
        VerticalRay {
            origin,
            dir: RayDir::Down,
        }
    }
}

/// One primitive of a [`GeomSet`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeomItem {
    Point(Point),
    Segment(Segment),
    Ray(VerticalRay),
}

/// A finite union of points, segments, and vertical rays. Used wherever an
/// operation consumes "a compact or ray-closed subset of the plane": hit
/// queries, clearance budgets, carrier unions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeomSet {
    items: Vec<GeomItem>,
}

/// Error for distance queries against an empty union.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("squared distance against an empty set")]
pub struct EmptyInput;

impl GeomSet {
    pub fn new(items: Vec<GeomItem>) -> Self {
        GeomSet { items }
    }

    pub fn empty() -> Self {
        GeomSet { items: Vec::new() }
    }

    pub fn items(&self) -> &[GeomItem] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn push(&mut self, item: GeomItem) {
        self.items.push(item);
    }

    pub fn of_point(p: Point) -> Self {
        GeomSet {
            items: vec![GeomItem::Point(p)],
        }
    }

    pub fn of_segment(s: Segment) -> Self {
        GeomSet {
            items: vec![GeomItem::Segment(s)],
        }
    }

    pub fn of_ray(r: VerticalRay) -> Self {
        GeomSet {
            items: vec![GeomItem::Ray(r)],
        }
    }

    /// Union of two sets (concatenation of items).
    pub fn union(mut self, other: GeomSet) -> Self {
        self.items.extend(other.items);
        self
    }

    /// Exact squared distance between two unions: the minimum over all item
    /// pairs. Zero if and only if the sets intersect.
    pub fn dist2(&self, other: &GeomSet) -> Result<Rational, EmptyInput> {
        if self.is_empty() || other.is_empty() {
            return Err(EmptyInput);
        }
        let mut best: Option<Rational> = None;
        for a in &self.items {
            for b in &other.items {
                let d = item_dist2(a, b);
                if best.as_ref().map_or(true, |cur| &d < cur) {
                    best = Some(d.clone());
                }
                if d.is_zero() {
                    return Ok(d);
                }
            }
        }
        Ok(best.expect("both sets nonempty"))
    }

    /// A point common to both sets, when one exists.
    pub fn intersection_witness(&self, other: &GeomSet) -> Option<Point> {
        for a in &self.items {
            for b in &other.items {
                if let Some(p) = item_witness(a, b) {
                    return Some(p);
                }
            }
        }
        None
    }
}

fn item_dist2(a: &GeomItem, b: &GeomItem) -> Rational {
    use GeomItem::*;
    match (a, b) {
        (Point(p), Point(q)) => d2_point_point(p, q),
        (Point(p), Segment(s)) | (Segment(s), Point(p)) => d2_point_segment(p, s),
        (Point(p), Ray(r)) | (Ray(r), Point(p)) => d2_point_ray(p, r),
        (Segment(s), Segment(t)) => d2_segment_segment(s, t),
        (Segment(s), Ray(r)) | (Ray(r), Segment(s)) => d2_segment_ray(s, r),
        (Ray(r), Ray(q)) => d2_ray_ray(r, q),
    }
}

fn item_witness(a: &GeomItem, b: &GeomItem) -> Option<Point> {
    use GeomItem::*;
    match (a, b) {
        (Point(p), Point(q)) => (p == q).then(|| p.clone()),
        (Point(p), Segment(s)) | (Segment(s), Point(p)) => contains_point(s, p).then(|| p.clone()),
        (Point(p), Ray(r)) | (Ray(r), Point(p)) => ray_contains_point(r, p).then(|| p.clone()),
        (Segment(s), Segment(t)) => match seg_intersection(s, t) {
            SegIntersection::Empty => None,
            SegIntersection::Point(p) => Some(p),
            SegIntersection::Overlap(o) => Some(o.a),
        },
        (Segment(s), Ray(r)) | (Ray(r), Segment(s)) => segment_ray_intersection(s, r),
        (Ray(r), Ray(q)) => ray_ray_witness(r, q),
    }
}

fn ray_ray_witness(r: &VerticalRay, q: &VerticalRay) -> Option<Point> {
    if r.origin.x != q.origin.x {
        return None;
    }
    use RayDir::*;
    let (ry, qy) = (&r.origin.y, &q.origin.y);
    match (r.dir, q.dir) {
        (Up, Up) => Some(Point::new(r.origin.x.clone(), ry.max(qy).clone())),
        (Down, Down) => Some(Point::new(r.origin.x.clone(), ry.min(qy).clone())),
        (Up, Down) => (ry <= qy).then(|| Point::new(r.origin.x.clone(), ry.clone())),
        (Down, Up) => (qy <= ry).then(|| Point::new(r.origin.x.clone(), qy.clone())),
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` when `p,q,r` turn
/// counter-clockwise, `-1` clockwise, `0` collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i8 {
    let v = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact squared Euclidean distance between two points.
pub fn dist2_points(p: &Point, q: &Point) -> Rational {
    d2_point_point(p, q)
}
