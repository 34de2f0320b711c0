//! Exact squared distances between plane primitives.
//!
//! For disjoint convex pieces the minimum distance is attained with at least
//! one end at a vertex (segment endpoint or ray origin), so every pair
//! reduces to point-against-piece cases guarded by an exact intersection
//! test.

use super::{
    seg_intersection, segment_ray_intersection, Point, Rational, RayDir, SegIntersection, Segment,
    VerticalRay,
};
use num_traits::Zero;

/// Squared distance between two points.
pub fn d2_point_point(p: &Point, q: &Point) -> Rational {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Squared distance from a point to a closed segment.
pub fn d2_point_segment(p: &Point, s: &Segment) -> Rational {
    let vx = &s.b.x - &s.a.x;
    let vy = &s.b.y - &s.a.y;
    let wx = &p.x - &s.a.x;
    let wy = &p.y - &s.a.y;
    let len2 = &vx * &vx + &vy * &vy;
    let t = (&wx * &vx + &wy * &vy) / &len2;
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    let t = if t < zero {
        zero
    } else if t > one {
        one
    } else {
        t
    };
    d2_point_point(p, &s.point_at(&t))
}

/// Squared distance from a point to a closed vertical ray.
pub fn d2_point_ray(p: &Point, r: &VerticalRay) -> Rational {
    let dx = &p.x - &r.origin.x;
    let clamped_y = match r.dir {
        RayDir::Up => p.y.clone().max(r.origin.y.clone()),
        RayDir::Down => p.y.clone().min(r.origin.y.clone()),
    };
    let dy = &p.y - &clamped_y;
    &dx * &dx + &dy * &dy
}

/// Squared distance between two closed segments; zero exactly when they meet.
pub fn d2_segment_segment(s: &Segment, t: &Segment) -> Rational {
    if seg_intersection(s, t) != SegIntersection::Empty {
        return Rational::zero();
    }
    let candidates = [
        d2_point_segment(&s.a, t),
        d2_point_segment(&s.b, t),
        d2_point_segment(&t.a, s),
        d2_point_segment(&t.b, s),
    ];
    candidates.into_iter().min().expect("four candidates")
}

/// Squared distance between a closed segment and a closed vertical ray.
pub fn d2_segment_ray(s: &Segment, r: &VerticalRay) -> Rational {
    if segment_ray_intersection(s, r).is_some() {
        return Rational::zero();
    }
    let candidates = [
        d2_point_ray(&s.a, r),
        d2_point_ray(&s.b, r),
        d2_point_segment(&r.origin, s),
    ];
    candidates.into_iter().min().expect("three candidates")
}

/// Squared distance between two closed vertical rays.
pub fn d2_ray_ray(r: &VerticalRay, q: &VerticalRay) -> Rational {
    let dx = &r.origin.x - &q.origin.x;
    let dx2 = &dx * &dx;
    use RayDir::*;
    match (r.dir, q.dir) {
        // Same direction: the y-shadows always overlap.
        (Up, Up) | (Down, Down) => dx2,
        (Up, Down) | (Down, Up) => {
            let (up, down) = if r.dir == Up { (r, q) } else { (q, r) };
            if up.origin.y <= down.origin.y {
                dx2
            } else {
                let gap = &up.origin.y - &down.origin.y;
                dx2 + &gap * &gap
            }
        }
    }
}
