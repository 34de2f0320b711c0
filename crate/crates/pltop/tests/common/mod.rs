//! Shared fixtures for the integration suites: seeded random circuit
//! generators (rectilinear skylines and general-position star polygons)
//! and small rational helpers. Everything is deterministic — one fixed
//! seed per call site — so failures replay exactly.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use pltop::exact::{rat, rat_int, Point, Rational};
use pltop::path::{PLCircuit, PLPath};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat_int(x), rat_int(y))
}

/// A random rational in `[lo, hi]` whose denominator is a power of two
/// at most 16.
pub fn random_coord(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let d = [1i64, 2, 4, 8, 16][rng.gen_range(0..5)];
    rat(rng.gen_range(lo * d..=hi * d), d)
}

/// A random point in the integer box enclosing `f`'s bounding box
/// inflated by `margin` units.
pub fn random_point_near(rng: &mut ChaCha8Rng, f: &PLPath, margin: i64) -> Point {
    let (lo, hi) = f.bounding_box();
    let x_lo = lo.x.floor().to_integer().to_i64().unwrap() - margin;
    let x_hi = hi.x.ceil().to_integer().to_i64().unwrap() + margin;
    let y_lo = lo.y.floor().to_integer().to_i64().unwrap() - margin;
    let y_hi = hi.y.ceil().to_integer().to_i64().unwrap() + margin;
    Point::new(random_coord(rng, x_lo, x_hi), random_coord(rng, y_lo, y_hi))
}

fn shoelace_doubled(ring: &[(i64, i64)]) -> i64 {
    let n = ring.len();
    let mut sum = 0i64;
    for i in 0..n {
        let (x0, y0) = ring[i];
        let (x1, y1) = ring[(i + 1) % n];
        sum += x0 * y1 - x1 * y0;
    }
    sum
}

/// Ensures counterclockwise orientation of a closed integer corner list
/// (first corner repeated at the end).
fn orient_ccw(corners: &mut Vec<(i64, i64)>) {
    let ring = &corners[..corners.len() - 1];
    if shoelace_doubled(ring) < 0 {
        corners.reverse();
    }
}

/// Scales by a random dyadic factor and translates by random dyadic
/// offsets, then builds the circuit. All coordinates keep power-of-two
/// denominators at most 16.
fn build_scaled(rng: &mut ChaCha8Rng, corners: &[(i64, i64)]) -> PLCircuit {
    let denoms = [1i64, 2, 4, 8, 16];
    let s = rat(rng.gen_range(1..=3), denoms[rng.gen_range(0..denoms.len())]);
    let tx = random_coord(rng, -24, 24);
    let ty = random_coord(rng, -24, 24);
    let pts: Vec<Point> = corners
        .iter()
        .map(|&(x, y)| Point::new(&s * rat_int(x) + &tx, &s * rat_int(y) + &ty))
        .collect();
    PLCircuit::new(PLPath::new(pts, true).expect("generated ring is a closed path"))
        .expect("generated ring is injective")
}

/// A rectilinear skyline circuit: random column heights over a unit
/// grid, traced counterclockwise, then scaled and translated. At most
/// 2·8 + 3 corners; the minimum feature is one scaled unit.
pub fn histogram_circuit(rng: &mut ChaCha8Rng) -> PLCircuit {
    let cols = rng.gen_range(3..=8usize);
    let heights: Vec<i64> = (0..cols).map(|_| rng.gen_range(1..=6i64)).collect();
    let last = cols as i64;
    let mut pts: Vec<(i64, i64)> = vec![(0, 0), (last, 0), (last, heights[cols - 1])];
    for i in (1..cols).rev() {
        if heights[i] != heights[i - 1] {
            pts.push((i as i64, heights[i]));
            pts.push((i as i64, heights[i - 1]));
        }
    }
    pts.push((0, heights[0]));
    pts.push((0, 0));
    orient_ccw(&mut pts);
    build_scaled(rng, &pts)
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

/// Strict angular order around the origin starting at the positive
/// x-axis. Callers guarantee no two inputs share a ray from the origin.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| u8::from(!(p.1 > 0 || (p.1 == 0 && p.0 > 0)));
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// A general-position circuit: random integer points at pairwise
/// distinct directions from the origin, joined in angular order (a
/// star-shaped polygon when the origin is interior; always retried
/// through the validator otherwise). Rejected when any two features come
/// closer than 3/4 before scaling, to keep grid sizes bounded.
pub fn star_circuit(rng: &mut ChaCha8Rng) -> Option<PLCircuit> {
    let n = rng.gen_range(5..=10usize);
    let mut dirs: Vec<(i64, i64)> = Vec::new();
    let mut attempts = 0;
    while dirs.len() < n {
        attempts += 1;
        if attempts > 200 {
            return None;
        }
        let p = (rng.gen_range(-6..=6i64), rng.gen_range(-6..=6i64));
        if p == (0, 0) || dirs.iter().any(|&q| cross(q, p) == 0 && dot(q, p) > 0) {
            continue;
        }
        dirs.push(p);
    }
    dirs.sort_by(|a, b| angle_cmp(*a, *b));
    let mut corners = dirs;
    corners.push(corners[0]);
    orient_ccw(&mut corners);
    let pts: Vec<Point> = corners.iter().map(|&(x, y)| pt(x, y)).collect();
    let circuit = PLCircuit::new(PLPath::new(pts, true).ok()?).ok()?;
    if circuit.min_feature2() < rat(9, 16) {
        return None;
    }
    // Rebuild through the scaler so the final coordinates are dyadic.
    Some(build_scaled(rng, &corners))
}

/// The shared circuit corpus: 60 rectilinear and 60 general-position
/// circuits from one fixed seed. Criteria that speak of "every corpus
/// circuit" run over exactly this set.
pub fn corpus() -> &'static [PLCircuit] {
    static CORPUS: OnceLock<Vec<PLCircuit>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x706c_746f_70);
        let mut out = Vec::with_capacity(120);
        for _ in 0..60 {
            out.push(histogram_circuit(&mut rng));
        }
        while out.len() < 120 {
            if let Some(c) = star_circuit(&mut rng) {
                out.push(c);
            }
        }
        out
    })
}
