//! Constructive topology of a circuit's complement.
//!
//! Everything here witnesses facts about `R² \ carrier(f)` with exact
//! arithmetic: which side of the curve a probe sees, certified offset
//! cycles that stay in one component, a grid flood-fill oracle for the
//! component structure, breadth-first routing of PL arcs through the
//! complement, horizontal chords between the two halves of a split
//! circuit, and the rectilinear outer detour around the bounding box.
//!
//! Approximate constructions (the bisector offsets, the grid pitch) are
//! always followed by exact certification; no result depends on the
//! quality of an approximation.

use crate::exact::{
    orient, rat_int, seg_intersection, sqrt_under, GeomSet, Point, Rational, SegIntersection,
    Segment,
};
use crate::parity;
use crate::path::{extreme_points, PLArc, PLCircuit, PLPath, PathLocation};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::VecDeque;
use thiserror::Error;

/// Which side of an oriented curve a probe point lies on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SideLabel {
    Left,
    Right,
}

impl SideLabel {
    pub fn flipped(self) -> SideLabel {
        match self {
            SideLabel::Left => SideLabel::Right,
            SideLabel::Right => SideLabel::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("probe location is a corner of the circuit")]
    CornerProbe,
    #[error("probe segment meets the carrier away from its anchor")]
    ProbeCrossesCurve,
    #[error("no certified offset cycle within the retry budget")]
    DeltaExhausted,
    #[error("the horizontal line yields no chord between the two arcs")]
    NoChord,
    #[error("detour endpoints are not the top/bottom extreme points")]
    NotExtreme,
    #[error("query point lies on the carrier")]
    QueryOnCurve,
    #[error("query points coincide")]
    CoincidentQueryPoints,
    #[error("grid search found no route although parities agree")]
    RouteNotFound,
}

/// Classifies a probe point against the oriented segment a path location
/// sits on: `Left` iff the corner order of the circuit turns the segment's
/// direction toward the probe.
///
/// The location must be interior to its piece (a corner has no single
/// direction), and the straight probe segment from the location to `c`
/// must meet the carrier only at the location itself — otherwise the
/// answer would describe some other part of the curve.
pub fn side_probe(
    f: &PLCircuit,
    loc: &PathLocation,
    c: &Point,
) -> Result<SideLabel, ComplementError> {
    if loc.parameter.is_zero() || loc.parameter == rat_int(1) {
        return Err(ComplementError::CornerProbe);
    }
    let piece = f.path().piece(loc.segment_index);
    debug_assert_eq!(
        piece.point_at(&loc.parameter),
        loc.point,
        "location not on its piece"
    );
    if *c == loc.point {
        return Err(ComplementError::ProbeCrossesCurve);
    }
    let probe = Segment::new(loc.point.clone(), c.clone());
    for i in 1..=f.path().piece_count() {
        match seg_intersection(&probe, &f.path().piece(i)) {
            SegIntersection::Empty => {}
            SegIntersection::Point(p) if p == loc.point => {}
            _ => return Err(ComplementError::ProbeCrossesCurve),
        }
    }
    match orient(&piece.a, &piece.b, c) {
        1 => Ok(SideLabel::Left),
        -1 => Ok(SideLabel::Right),
        _ => unreachable!("probe passed the carrier-disjointness check but is collinear"),
    }
}

/// The exactly-verified certificate attached to an offset cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OffsetCertificate {
    /// Every cycle piece has empty intersection with every circuit piece.
    pub disjoint_from_circuit: bool,
    /// The common parity of all cycle corners and piece midpoints.
    pub uniform_parity: u8,
}

/// A closed cycle offset from a circuit along its corner bisectors, with
/// the delta that was requested and the (possibly halved) delta actually
/// certified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OffsetCycle {
    pub requested_delta: Rational,
    pub achieved_delta: Rational,
    pub cycle: PLPath,
    pub certificate: OffsetCertificate,
}

/// Precision (in bits) of the rational square-root under-approximations
/// used for unit directions. High enough that even very thin corner
/// sectors offset to the intended side; correctness never depends on it.
const DIRECTION_BITS: u32 = 48;

/// Retry budget for [`bisector_offset`]: the requested delta is halved at
/// most this many times.
const OFFSET_ROUNDS: u32 = 32;

fn rot90_left(x: &Rational, y: &Rational) -> (Rational, Rational) {
    (-y.clone(), x.clone())
}

/// Approximately-unit direction of `from -> to` (exact direction, length
/// within 2^-DIRECTION_BITS of 1).
fn approx_unit(from: &Point, to: &Point) -> (Rational, Rational) {
    let dx = &to.x - &from.x;
    let dy = &to.y - &from.y;
    let len = sqrt_under(&(&dx * &dx + &dy * &dy), DIRECTION_BITS);
    (dx / &len, dy / &len)
}

/// Offsets every corner of the circuit by `delta` along the corner's
/// angle bisector, to the requested side of the traversal, then certifies
/// the resulting closed cycle exactly: all pieces disjoint from the
/// circuit, and all corners and piece midpoints with one common parity.
/// On certification failure the delta is halved and the construction
/// retried, up to [`OFFSET_ROUNDS`] times.
pub fn bisector_offset(
    f: &PLCircuit,
    delta: &Rational,
    side: SideLabel,
) -> Result<OffsetCycle, ComplementError> {
    assert!(delta.is_positive(), "offset delta must be positive");
    let ring = f.path().ring();
    let n = ring.len();
    let mut d = delta.clone();
    for _ in 0..=OFFSET_ROUNDS {
        let mut corners: Vec<Point> = Vec::with_capacity(n + 1);
        for i in 0..n {
            let prev = &ring[(i + n - 1) % n];
            let cur = &ring[i];
            let next = &ring[(i + 1) % n];
            let (ux, uy) = approx_unit(prev, cur);
            let (vx, vy) = approx_unit(cur, next);
            let wx = &ux + &vx;
            let wy = &uy + &vy;
            // Exactly antiparallel neighbors would fold the circuit onto
            // itself, which validate_circuit rules out.
            debug_assert!(!(wx.is_zero() && wy.is_zero()));
            let (nx, ny) = rot90_left(&wx, &wy);
            let len = sqrt_under(&(&nx * &nx + &ny * &ny), DIRECTION_BITS);
            let scale = match side {
                SideLabel::Left => &d / &len,
                SideLabel::Right => -(&d / &len),
            };
            corners.push(Point::new(&cur.x + &scale * &nx, &cur.y + &scale * &ny));
        }
        if let Some(first) = corners.first().cloned() {
            corners.push(first);
        }
        if let Some((cycle, certificate)) = certify_cycle(corners, f) {
            return Ok(OffsetCycle {
                requested_delta: delta.clone(),
                achieved_delta: d,
                cycle,
                certificate,
            });
        }
        d /= rat_int(2);
    }
    Err(ComplementError::DeltaExhausted)
}

/// Exact certification for one offset attempt; `None` means "halve and
/// retry".
fn certify_cycle(corners: Vec<Point>, f: &PLCircuit) -> Option<(PLPath, OffsetCertificate)> {
    let cycle = PLPath::new(corners, true).ok()?;
    for i in 1..=cycle.piece_count() {
        let s = cycle.piece(i);
        for j in 1..=f.path().piece_count() {
            if seg_intersection(&s, &f.path().piece(j)) != SegIntersection::Empty {
                return None;
            }
        }
    }
    let mut samples = Vec::with_capacity(2 * cycle.piece_count());
    for i in 1..=cycle.piece_count() {
        let s = cycle.piece(i);
        samples.push(s.a.clone());
        samples.push(s.midpoint());
    }
    let mut common: Option<u8> = None;
    for p in &samples {
        let par = parity::parity(p, f.path()).expect("sample is off the carrier");
        match common {
            None => common = Some(par),
            Some(c) if c == par => {}
            Some(_) => return None,
        }
    }
    let uniform_parity = common.expect("cycle has corners");
    Some((
        cycle,
        OffsetCertificate {
            disjoint_from_circuit: true,
            uniform_parity,
        },
    ))
}

/// Flood-fill labeling of the complement at a fixed grid pitch.
///
/// The grid covers the circuit's bounding box inflated by two cells. A
/// cell is a *carrier cell* if its closed square meets the carrier
/// (decided exactly); the remaining cells are labeled by 8-neighbor
/// connectivity, deterministically in row-major discovery order. The
/// border cells of the inflated box always belong to one component, the
/// outside.
///
/// Diagonal steps are sound: the segment joining the centers of two
/// diagonally adjacent open cells passes through their shared corner
/// and never leaves the union of the two closed squares, so when both
/// squares miss the carrier the segment does too — the cells really
/// are in one complement component. Without diagonal steps, a thin
/// wedge of the complement can fragment into spurious single-cell
/// components where its open cells meet only corner-to-corner.
#[derive(Clone, Debug)]
pub struct GridLabeling {
    pitch: Rational,
    origin: Point,
    cols: usize,
    rows: usize,
    /// Row-major; `None` marks a carrier cell.
    labels: Vec<Option<u32>>,
    component_count: usize,
    outside_label: u32,
}

impl GridLabeling {
    pub fn pitch(&self) -> &Rational {
        &self.pitch
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Grid extent as (min corner, max corner).
    pub fn bounds(&self) -> (Point, Point) {
        (
            self.origin.clone(),
            Point::new(
                &self.origin.x + rat_int(self.cols as i64) * &self.pitch,
                &self.origin.y + rat_int(self.rows as i64) * &self.pitch,
            ),
        )
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// The label of the unbounded component (taken from the border ring).
    pub fn outside_label(&self) -> u32 {
        self.outside_label
    }

    pub fn label_of_cell(&self, col: usize, row: usize) -> Option<u32> {
        self.labels[row * self.cols + col]
    }

    /// Grid cell containing a point, if the point is inside the grid.
    /// Points on cell boundaries resolve to the cell they open (floor).
    pub fn cell_of(&self, p: &Point) -> Option<(usize, usize)> {
        let col = ((&p.x - &self.origin.x) / &self.pitch).floor().to_integer();
        let row = ((&p.y - &self.origin.y) / &self.pitch).floor().to_integer();
        let col = col.to_i64()?;
        let row = row.to_i64()?;
        if col < 0 || row < 0 || col as usize >= self.cols || row as usize >= self.rows {
            return None;
        }
        Some((col as usize, row as usize))
    }

    /// Component label at a point: `None` when the point is outside the
    /// grid or in a carrier cell.
    pub fn label_at(&self, p: &Point) -> Option<u32> {
        let (col, row) = self.cell_of(p)?;
        self.label_of_cell(col, row)
    }

    pub fn cell_center(&self, col: usize, row: usize) -> Point {
        let half = &self.pitch / rat_int(2);
        Point::new(
            &self.origin.x + rat_int(col as i64) * &self.pitch + &half,
            &self.origin.y + rat_int(row as i64) * &self.pitch + &half,
        )
    }
}

/// Carrier-cell bitmap shared by the labeling and the router.
struct GridFrame {
    pitch: Rational,
    origin: Point,
    cols: usize,
    rows: usize,
    blocked: Vec<bool>,
}

impl GridFrame {
    fn index(&self, col: usize, row: usize) -> usize {
        row * self.cols + col
    }

    fn cell_of(&self, p: &Point) -> Option<(usize, usize)> {
        let col = ((&p.x - &self.origin.x) / &self.pitch)
            .floor()
            .to_integer()
            .to_i64()?;
        let row = ((&p.y - &self.origin.y) / &self.pitch)
            .floor()
            .to_integer()
            .to_i64()?;
        if col < 0 || row < 0 || col as usize >= self.cols || row as usize >= self.rows {
            return None;
        }
        Some((col as usize, row as usize))
    }

    fn cell_center(&self, col: usize, row: usize) -> Point {
        let half = &self.pitch / rat_int(2);
        Point::new(
            &self.origin.x + rat_int(col as i64) * &self.pitch + &half,
            &self.origin.y + rat_int(row as i64) * &self.pitch + &half,
        )
    }
}

/// Index of the first grid line at or below `x` relative to `origin`,
/// together with whether `x` lies exactly on that line.
fn grid_floor(x: &Rational, origin: &Rational, pitch: &Rational) -> (i64, bool) {
    let q = (x - origin) / pitch;
    let f = q.floor();
    let exact = f == q;
    (
        f.to_integer().to_i64().expect("grid index fits in i64"),
        exact,
    )
}

/// Builds the carrier-cell bitmap for a circuit on a grid covering the
/// bounding box of the carrier and `extra` points, inflated by two cells.
/// A cell is blocked iff its closed square meets the carrier; the test is
/// exact (per-piece column walk, no sampling).
fn build_frame(f: &PLCircuit, pitch: &Rational, extra: &[&Point]) -> GridFrame {
    assert!(pitch.is_positive(), "grid pitch must be positive");
    let (mut lo, mut hi) = f.path().bounding_box();
    for p in extra {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    let two = rat_int(2);
    let origin = Point::new(&lo.x - &two * pitch, &lo.y - &two * pitch);
    let span_cols = ((&hi.x - &lo.x) / pitch)
        .ceil()
        .to_integer()
        .to_i64()
        .unwrap()
        + 4;
    let span_rows = ((&hi.y - &lo.y) / pitch)
        .ceil()
        .to_integer()
        .to_i64()
        .unwrap()
        + 4;
    let cols = span_cols.max(1) as usize;
    let rows = span_rows.max(1) as usize;
    let mut frame = GridFrame {
        pitch: pitch.clone(),
        origin,
        cols,
        rows,
        blocked: vec![false; cols * rows],
    };

    for i in 1..=f.path().piece_count() {
        let s = f.path().piece(i);
        mark_segment(&mut frame, &s);
    }
    frame
}

/// Marks every cell whose closed square meets the segment. Walks the
/// columns the segment's x-range touches; within a column the segment
/// occupies an exact y-range, which selects the rows.
fn mark_segment(frame: &mut GridFrame, s: &Segment) {
    let pitch = frame.pitch.clone();
    let ox = frame.origin.x.clone();
    let oy = frame.origin.y.clone();
    let (pxlo, pxhi) = if s.a.x <= s.b.x {
        (s.a.x.clone(), s.b.x.clone())
    } else {
        (s.b.x.clone(), s.a.x.clone())
    };
    let (jlo_raw, on_line) = grid_floor(&pxlo, &ox, &pitch);
    let jlo = if on_line { jlo_raw - 1 } else { jlo_raw };
    let (jhi, _) = grid_floor(&pxhi, &ox, &pitch);
    let vertical = s.a.x == s.b.x;
    let dx = &s.b.x - &s.a.x;
    let dy = &s.b.y - &s.a.y;
    for j in jlo.max(0)..=jhi.min(frame.cols as i64 - 1) {
        let slab_left = &ox + rat_int(j) * &pitch;
        let slab_right = &slab_left + &pitch;
        let xlo = pxlo.clone().max(slab_left);
        let xhi = pxhi.clone().min(slab_right);
        if xlo > xhi {
            continue;
        }
        let (ylo, yhi) = if vertical {
            if s.a.y <= s.b.y {
                (s.a.y.clone(), s.b.y.clone())
            } else {
                (s.b.y.clone(), s.a.y.clone())
            }
        } else {
            let y1 = &s.a.y + (&xlo - &s.a.x) / &dx * &dy;
            let y2 = &s.a.y + (&xhi - &s.a.x) / &dx * &dy;
            if y1 <= y2 {
                (y1, y2)
            } else {
                (y2, y1)
            }
        };
        let (ilo_raw, on_row) = grid_floor(&ylo, &oy, &pitch);
        let ilo = if on_row { ilo_raw - 1 } else { ilo_raw };
        let (ihi, _) = grid_floor(&yhi, &oy, &pitch);
        for i in ilo.max(0)..=ihi.min(frame.rows as i64 - 1) {
            let idx = frame.index(j as usize, i as usize);
            frame.blocked[idx] = true;
        }
    }
}

/// Labels the complement of a circuit on a uniform grid. Deterministic:
/// labels are assigned in row-major discovery order, so identical inputs
/// produce identical labelings.
pub fn grid_components(f: &PLCircuit, pitch: &Rational) -> GridLabeling {
    let frame = build_frame(f, pitch, &[]);
    let cols = frame.cols;
    let rows = frame.rows;
    let mut labels: Vec<Option<u32>> = vec![None; cols * rows];
    let mut next = 0u32;
    let mut queue = VecDeque::new();
    for row in 0..rows {
        for col in 0..cols {
            let idx = row * cols + col;
            if frame.blocked[idx] || labels[idx].is_some() {
                continue;
            }
            let label = next;
            next += 1;
            labels[idx] = Some(label);
            queue.push_back((col, row));
            while let Some((c0, r0)) = queue.pop_front() {
                for dr in -1i64..=1 {
                    for dc in -1i64..=1 {
                        if dc == 0 && dr == 0 {
                            continue;
                        }
                        let c1 = c0 as i64 + dc;
                        let r1 = r0 as i64 + dr;
                        if c1 < 0 || r1 < 0 || c1 >= cols as i64 || r1 >= rows as i64 {
                            continue;
                        }
                        let i1 = r1 as usize * cols + c1 as usize;
                        if !frame.blocked[i1] && labels[i1].is_none() {
                            labels[i1] = Some(label);
                            queue.push_back((c1 as usize, r1 as usize));
                        }
                    }
                }
            }
        }
    }
    // Cell (0,0) is two cells clear of the carrier by construction, so it
    // is free and carries the unbounded component's label (which is 0, as
    // it is the first cell scanned).
    let outside_label = labels[0].expect("border cell is always free");
    debug_assert!(border_uniform(&labels, cols, rows, outside_label));
    GridLabeling {
        pitch: frame.pitch,
        origin: frame.origin,
        cols,
        rows,
        labels,
        component_count: next as usize,
        outside_label,
    }
}

fn border_uniform(labels: &[Option<u32>], cols: usize, rows: usize, outside: u32) -> bool {
    let get = |c: usize, r: usize| labels[r * cols + c];
    (0..cols).all(|c| get(c, 0) == Some(outside) && get(c, rows - 1) == Some(outside))
        && (0..rows).all(|r| get(0, r) == Some(outside) && get(cols - 1, r) == Some(outside))
}

/// A grid pitch guaranteed to resolve the circuit: strictly below
/// one-eighth of the smallest feature (shortest piece or closest approach
/// of nonadjacent pieces).
pub fn resolving_pitch(f: &PLCircuit) -> Rational {
    sqrt_under(&f.min_feature2(), 16) / rat_int(9)
}

/// Result of routing between two complement points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RouteOutcome {
    /// An arc from `u` to `v` with exact positive clearance.
    Arc(PLArc),
    /// No arc exists: the points lie in different components (their
    /// parities differ).
    Separated,
}

/// Routes a PL arc from `u` to `v` through the complement of the circuit,
/// or reports that the two points are separated by it.
///
/// The router works on a grid fine enough both to resolve the circuit
/// (pitch below one-eighth of the smallest feature) and to keep the
/// endpoint cells clear (pitch at most a quarter of either endpoint's
/// distance to the carrier), covering the bounding box of carrier and
/// endpoints plus a two-cell margin. Cell-center paths found by
/// breadth-first search are straightened by dropping collinear corners.
pub fn route_in_complement(
    f: &PLCircuit,
    u: &Point,
    v: &Point,
) -> Result<RouteOutcome, ComplementError> {
    if u == v {
        return Err(ComplementError::CoincidentQueryPoints);
    }
    if f.path().on_carrier(u) || f.path().on_carrier(v) {
        return Err(ComplementError::QueryOnCurve);
    }
    let pu = parity::parity(u, f.path()).expect("u off carrier");
    let pv = parity::parity(v, f.path()).expect("v off carrier");
    if pu != pv {
        return Ok(RouteOutcome::Separated);
    }

    let carrier = f.path().carrier();
    let du = GeomSet::of_point(u.clone())
        .dist2(&carrier)
        .expect("nonempty");
    let dv = GeomSet::of_point(v.clone())
        .dist2(&carrier)
        .expect("nonempty");
    let clearance = sqrt_under(&du.min(dv), 16) / rat_int(4);
    let pitch = clearance.min(resolving_pitch(f));
    let frame = build_frame(f, &pitch, &[u, v]);

    let (sc, sr) = frame.cell_of(u).expect("grid covers u");
    let (tc, tr) = frame.cell_of(v).expect("grid covers v");
    debug_assert!(
        !frame.blocked[frame.index(sc, sr)] && !frame.blocked[frame.index(tc, tr)],
        "endpoint cells are clear by the pitch choice"
    );

    // Breadth-first search with parent links, 4-neighbor, deterministic
    // expansion order.
    let cols = frame.cols;
    let rows = frame.rows;
    let mut parent: Vec<u32> = vec![u32::MAX; cols * rows];
    let start = sr * cols + sc;
    let goal = tr * cols + tc;
    parent[start] = start as u32;
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        let c0 = cur % cols;
        let r0 = cur / cols;
        let neighbors = [
            (c0 > 0, cur.wrapping_sub(1)),
            (c0 + 1 < cols, cur + 1),
            (r0 > 0, cur.wrapping_sub(cols)),
            (r0 + 1 < rows, cur + cols),
        ];
        for (ok, nxt) in neighbors {
            if ok && !frame.blocked[nxt] && parent[nxt] == u32::MAX {
                parent[nxt] = cur as u32;
                queue.push_back(nxt);
            }
        }
    }
    if parent[goal] == u32::MAX {
        // Same parity means same component; with the clearance-derived
        // pitch the grid cannot wall it off. Reported rather than assumed.
        return Err(ComplementError::RouteNotFound);
    }

    let mut cells = vec![goal];
    let mut cur = goal;
    while cur != start {
        cur = parent[cur] as usize;
        cells.push(cur);
    }
    cells.reverse();

    let mut corners: Vec<Point> = Vec::with_capacity(cells.len() + 2);
    corners.push(u.clone());
    for idx in cells {
        let center = frame.cell_center(idx % cols, idx / cols);
        if corners.last() != Some(&center) {
            corners.push(center);
        }
    }
    if corners.last() != Some(v) {
        corners.push(v.clone());
    }
    let corners = drop_collinear(corners);
    let path = PLPath::new(corners, false).expect("route has distinct corners");
    let arc = PLArc::new(path).expect("grid route does not self-intersect");
    Ok(RouteOutcome::Arc(arc))
}

/// Removes interior corners that lie on the straight line through their
/// neighbors (BFS routes are full of axis-aligned runs).
fn drop_collinear(corners: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(corners.len());
    for p in corners {
        out.push(p);
        while out.len() >= 3 {
            let n = out.len();
            if orient(&out[n - 3], &out[n - 1], &out[n - 2]) == 0 {
                out.remove(n - 2);
            } else {
                break;
            }
        }
    }
    out
}

/// One maximal connected piece of the line-carrier intersection at a
/// fixed height: an x-interval (possibly a point) with the set of arcs
/// that touch it.
struct LineFeature {
    xlo: Rational,
    xhi: Rational,
    /// Bit 1 = first arc, bit 2 = second arc.
    labels: u8,
}

fn line_hits(arc: &PLArc, y: &Rational, label: u8, out: &mut Vec<LineFeature>) {
    let path = arc.path();
    for i in 1..=path.piece_count() {
        let s = path.piece(i);
        let (alo, ahi) = (&s.a.y, &s.b.y);
        if alo == y && ahi == y {
            let (xlo, xhi) = if s.a.x <= s.b.x {
                (s.a.x.clone(), s.b.x.clone())
            } else {
                (s.b.x.clone(), s.a.x.clone())
            };
            out.push(LineFeature {
                xlo,
                xhi,
                labels: label,
            });
        } else if (alo <= y && y <= ahi) || (ahi <= y && y <= alo) {
            let t = (y - alo) / (ahi - alo);
            let x = &s.a.x + &t * (&s.b.x - &s.a.x);
            out.push(LineFeature {
                xlo: x.clone(),
                xhi: x,
                labels: label,
            });
        }
    }
}

/// All chords of the split circuit at height `y`, left to right: segments
/// on that line whose endpoints sit on different arcs (one on each) with
/// nothing of the carrier between them.
///
/// All line-carrier intersections are computed exactly and merged into
/// maximal features tagged with the arcs that touch them; a chord spans
/// each gap between two adjacent single-arc features with different tags.
/// Features containing the split points touch both arcs and never bound a
/// chord, which keeps chord endpoints in the open arcs.
pub(crate) fn chord_candidates(f0: &PLArc, f1: &PLArc, y: &Rational) -> Vec<Segment> {
    let mut features: Vec<LineFeature> = Vec::new();
    line_hits(f0, y, 1, &mut features);
    line_hits(f1, y, 2, &mut features);
    features.sort_by(|p, q| p.xlo.cmp(&q.xlo).then_with(|| p.xhi.cmp(&q.xhi)));
    let mut merged: Vec<LineFeature> = Vec::new();
    for feat in features {
        match merged.last_mut() {
            Some(last) if feat.xlo <= last.xhi => {
                if feat.xhi > last.xhi {
                    last.xhi = feat.xhi;
                }
                last.labels |= feat.labels;
            }
            _ => merged.push(feat),
        }
    }
    let mut out = Vec::new();
    for pair in merged.windows(2) {
        let (left, right) = (&pair[0], &pair[1]);
        if (left.labels == 1 && right.labels == 2) || (left.labels == 2 && right.labels == 1) {
            debug_assert!(left.xhi < right.xlo, "merged features are separated");
            out.push(Segment::new(
                Point::new(left.xhi.clone(), y.clone()),
                Point::new(right.xlo.clone(), y.clone()),
            ));
        }
    }
    out
}

/// Finds a horizontal chord of the split circuit at height `y`: a segment
/// on that line with one endpoint in the first arc's interior, the other
/// in the second arc's interior, and nothing of the carrier between them.
/// Of all such gaps the leftmost is returned.
pub fn horizontal_chord(
    f: &PLCircuit,
    f0: &PLArc,
    f1: &PLArc,
    y: &Rational,
) -> Result<Segment, ComplementError> {
    debug_assert!(
        split_covers_circuit(f, f0, f1),
        "arcs must partition the circuit"
    );
    chord_candidates(f0, f1, y)
        .into_iter()
        .next()
        .ok_or(ComplementError::NoChord)
}

/// Debug check that two arcs really are the two halves of the circuit.
fn split_covers_circuit(f: &PLCircuit, f0: &PLArc, f1: &PLArc) -> bool {
    f0.path().last() == f1.path().first()
        && f1.path().last() == f0.path().first()
        && f0
            .path()
            .corners()
            .iter()
            .chain(f1.path().corners())
            .all(|p| f.path().on_carrier(p))
}

/// Builds the rectilinear detour from the top extreme point around the
/// bounding box (right side, one unit of margin) to the bottom extreme
/// point. Only the first and last pieces approach the carrier, and they
/// meet it exactly at the endpoints, which is verified.
pub fn outer_detour(f: &PLCircuit, a: &Point, b: &Point) -> Result<PLArc, ComplementError> {
    let ext = extreme_points(f.path());
    if *a != ext.top || *b != ext.bottom {
        return Err(ComplementError::NotExtreme);
    }
    let (lo, hi) = f.path().bounding_box();
    let one = rat_int(1);
    let top_y = &hi.y + &one;
    let right_x = &hi.x + &one;
    let bottom_y = &lo.y - &one;
    let corners = vec![
        a.clone(),
        Point::new(a.x.clone(), top_y.clone()),
        Point::new(right_x.clone(), top_y),
        Point::new(right_x, bottom_y.clone()),
        Point::new(b.x.clone(), bottom_y),
        b.clone(),
    ];
    let path = PLPath::new(corners, false).expect("margins keep detour corners distinct");
    // The three middle pieces run a full unit outside the bounding box;
    // the first and last may only touch the carrier at a and b. Verify.
    for i in 1..=path.piece_count() {
        let s = path.piece(i);
        for j in 1..=f.path().piece_count() {
            match seg_intersection(&s, &f.path().piece(j)) {
                SegIntersection::Empty => {}
                SegIntersection::Point(p) if (i == 1 && p == *a) || (i == 5 && p == *b) => {}
                _ => return Err(ComplementError::NotExtreme),
            }
        }
    }
    Ok(PLArc::new(path).expect("detour is rectilinear and injective"))
}
