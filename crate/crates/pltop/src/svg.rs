//! Deterministic SVG rendering of geometry documents and ray
//! decompositions.
//!
//! The output is byte-stable: the same value always renders to the same
//! text. The view box is the geometry's bounding box inflated by 5% per
//! side; curves become `<polyline>` elements; witness points, rays, and
//! chords each carry their own class so styling stays in one `<style>`
//! block.
//!
//! Coordinates are written as decimals for display only — exact when the
//! reduced denominator is of the form 2^a·5^b, and rounded to 12
//! significant digits otherwise. Nothing rendered here is ever read back
//! into a computation; persisted artifacts keep exact rationals.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::doc::GeometryDocument;
use crate::exact::{Point, Rational};
use crate::parity::{Classification, ComponentSpan, RayDecomposition};

/// Renders a rational as a display decimal: exact when the denominator
/// divides a power of ten, otherwise rounded to 12 significant digits.
pub(crate) fn decimal(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let n = r.numer().abs();
    let d = r.denom().clone();
    let (rest, two) = strip_factor(d.clone(), 2);
    let (rest, five) = strip_factor(rest, 5);
    let body = if rest.is_one() {
        exact_decimal(&n, two, five)
    } else {
        rounded_decimal(&n, &d)
    };
    format!("{sign}{body}")
}

/// Divides out every factor `p` from `d`, returning the rest and the count.
fn strip_factor(mut d: BigInt, p: u32) -> (BigInt, u32) {
    let p = BigInt::from(p);
    let mut count = 0;
    loop {
        let (q, r) = d.div_rem(&p);
        if !r.is_zero() {
            return (d, count);
        }
        d = q;
        count += 1;
    }
}

fn pow10(t: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), t as usize)
}

/// `n / (2^two · 5^five)` as an exact decimal.
fn exact_decimal(n: &BigInt, two: u32, five: u32) -> String {
    let t = two.max(five);
    let scale = num_traits::pow(BigInt::from(2), (t - two) as usize)
        * num_traits::pow(BigInt::from(5), (t - five) as usize);
    let (int, frac) = (n * scale).div_rem(&pow10(t));
    join_parts(&int.to_string(), &zero_padded(&frac, t as usize))
}

/// `n / d` rounded to 12 significant digits, in plain decimal notation.
fn rounded_decimal(n: &BigInt, d: &BigInt) -> String {
    const SIG: i64 = 12;
    // e = floor(log10(n/d)): the first significant digit sits at 10^e.
    let e: i64 = if n >= d {
        (n / d).to_string().len() as i64 - 1
    } else {
        let mut scaled = n.clone();
        let mut k = 0;
        while scaled < *d {
            scaled *= 10;
            k += 1;
        }
        -k
    };
    // Round n/d · 10^(SIG-1-e) to an integer: the 12 significant digits.
    let shift = SIG - 1 - e;
    let (num, den) = if shift >= 0 {
        (n * pow10(shift as u32), d.clone())
    } else {
        (n.clone(), d * pow10((-shift) as u32))
    };
    let rounded = (BigInt::from(2) * num + &den) / (BigInt::from(2) * den);
    let mut digits = rounded.to_string();
    let mut point_after = e + 1;
    if digits.len() as i64 > SIG {
        // Rounding carried into a 13th digit (…999.5 → 1000…); the extra
        // digit is a trailing zero of 10^12.
        digits.truncate(SIG as usize);
        point_after += 1;
    }
    if point_after >= digits.len() as i64 {
        let zeros = point_after as usize - digits.len();
        format!("{digits}{}", "0".repeat(zeros))
    } else if point_after >= 1 {
        let (int, frac) = digits.split_at(point_after as usize);
        join_parts(int, frac)
    } else {
        let zeros = (-point_after) as usize;
        join_parts("0", &format!("{}{digits}", "0".repeat(zeros)))
    }
}

fn zero_padded(frac: &BigInt, width: usize) -> String {
    format!("{:0>width$}", frac.to_string())
}

/// Joins integer and fraction digits, trimming trailing zeros (and the
/// point itself when the fraction vanishes).
fn join_parts(int: &str, frac: &str) -> String {
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

// ---------------------------------------------------------------------
// Scene model
// ---------------------------------------------------------------------

/// Everything a figure can hold, in drawing order. All geometry is in
/// mathematical coordinates (y up); the writer negates y.
#[derive(Default)]
struct Scene {
    /// Corner chains rendered as `.curve` polylines.
    curves: Vec<Vec<Point>>,
    /// Straight `.chord` segments.
    chords: Vec<(Point, Point)>,
    /// Dashed `.ray` verticals spanning the full figure height.
    vlines: Vec<Rational>,
    /// Dashed `.ray` verticals from a base point upward out of the figure.
    rays: Vec<Point>,
    /// Marked points with their circle class.
    marks: Vec<(Point, &'static str)>,
    /// Text labels anchored near a point.
    labels: Vec<(Point, String)>,
}

struct Frame {
    min_x: Rational,
    min_y: Rational,
    max_x: Rational,
    max_y: Rational,
}

impl Scene {
    fn frame(&self) -> Frame {
        let mut all_x: Vec<Rational> = Vec::new();
        let mut all_y: Vec<Rational> = Vec::new();
        {
            let mut push = |p: &Point| {
                all_x.push(p.x.clone());
                all_y.push(p.y.clone());
            };
            for chain in &self.curves {
                for p in chain {
                    push(p);
                }
            }
            for (a, b) in &self.chords {
                push(a);
                push(b);
            }
            for p in &self.rays {
                push(p);
            }
            for (p, _) in &self.marks {
                push(p);
            }
            for (p, _) in &self.labels {
                push(p);
            }
        }
        for x in &self.vlines {
            all_x.push(x.clone());
        }
        assert!(
            !all_x.is_empty() && !all_y.is_empty(),
            "scene holds some geometry"
        );
        let min_x = all_x.iter().min().unwrap().clone();
        let max_x = all_x.iter().max().unwrap().clone();
        let min_y = all_y.iter().min().unwrap().clone();
        let max_y = all_y.iter().max().unwrap().clone();
        Frame {
            min_x,
            min_y,
            max_x,
            max_y,
        }
    }
}

fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Writes a scene as a complete SVG element.
fn render(scene: &Scene) -> String {
    let frame = scene.frame();
    let width = &frame.max_x - &frame.min_x;
    let height = &frame.max_y - &frame.min_y;
    let five_percent = rat_frac(1, 20);
    let one = Rational::one();
    let pad_x = if width.is_zero() {
        one.clone()
    } else {
        &width * &five_percent
    };
    let pad_y = if height.is_zero() {
        one.clone()
    } else {
        &height * &five_percent
    };
    let left = &frame.min_x - &pad_x;
    let top_y = &frame.max_y + &pad_y; // mathematical top edge
    let bottom_y = &frame.min_y - &pad_y;
    let view_w = &width + &pad_x + &pad_x;
    let view_h = &height + &pad_y + &pad_y;
    let max_dim = if view_w >= view_h {
        view_w.clone()
    } else {
        view_h.clone()
    };
    let sw = &max_dim * &rat_frac(1, 100); // stroke width
    let dash = decimal(&(&sw * &rat_frac(3, 1)));
    let radius = decimal(&(&sw * &rat_frac(2, 1)));
    let font = decimal(&(&sw * &rat_frac(5, 1)));
    let swd = decimal(&sw);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        decimal(&left),
        decimal(&-&top_y),
        decimal(&view_w),
        decimal(&view_h),
    );
    let _ = writeln!(
        out,
        "<style>\n\
         .curve{{fill:none;stroke:#1b2631;stroke-width:{swd};stroke-linejoin:round;stroke-linecap:round}}\n\
         .chord{{fill:none;stroke:#c0392b;stroke-width:{swd};stroke-linecap:round}}\n\
         .ray{{fill:none;stroke:#7f8c8d;stroke-width:{swd};stroke-dasharray:{dash} {dash}}}\n\
         .point{{fill:#1b2631;stroke:none}}\n\
         .witness-inside{{fill:#c0392b;stroke:none}}\n\
         .witness-outside{{fill:#2980b9;stroke:none}}\n\
         .hit-simple{{fill:#27ae60;stroke:none}}\n\
         .hit-double{{fill:#e67e22;stroke:none}}\n\
         .label{{font-family:monospace;font-size:{font}px;fill:#1b2631}}\n\
         </style>"
    );
    for chain in &scene.curves {
        let mut pts = String::new();
        for (i, p) in chain.iter().enumerate() {
            if i > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{},{}", decimal(&p.x), decimal(&-&p.y));
        }
        let _ = writeln!(out, "<polyline class=\"curve\" points=\"{pts}\"/>");
    }
    for (a, b) in &scene.chords {
        let _ = writeln!(
            out,
            "<line class=\"chord\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            decimal(&a.x),
            decimal(&-&a.y),
            decimal(&b.x),
            decimal(&-&b.y),
        );
    }
    for x in &scene.vlines {
        let _ = writeln!(
            out,
            "<line class=\"ray\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            decimal(x),
            decimal(&-&top_y),
            decimal(x),
            decimal(&-&bottom_y),
        );
    }
    for p in &scene.rays {
        let _ = writeln!(
            out,
            "<line class=\"ray\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            decimal(&p.x),
            decimal(&-&p.y),
            decimal(&p.x),
            decimal(&-&top_y),
        );
    }
    for (p, class) in &scene.marks {
        let _ = writeln!(
            out,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{radius}\"/>",
            decimal(&p.x),
            decimal(&-&p.y),
        );
    }
    let label_off = &sw * &rat_frac(3, 1);
    for (p, text) in &scene.labels {
        let _ = writeln!(
            out,
            "<text class=\"label\" x=\"{}\" y=\"{}\">{}</text>",
            decimal(&(&p.x + &label_off)),
            decimal(&-&(&p.y + &label_off)),
            escape_text(text),
        );
    }
    out.push_str("</svg>\n");
    out
}

// ---------------------------------------------------------------------
// Scenes for the public inputs
// ---------------------------------------------------------------------

/// Renders a geometry document as a standalone SVG figure.
pub fn emit_svg(doc: &GeometryDocument) -> String {
    let mut scene = Scene::default();
    match doc {
        GeometryDocument::Point { name, point } => {
            scene.marks.push((point.clone(), "point"));
            if let Some(n) = name {
                scene.labels.push((point.clone(), n.clone()));
            }
        }
        GeometryDocument::Path { path, .. } => {
            scene.curves.push(path.corners().to_vec());
        }
        GeometryDocument::Arc { arc, .. } => {
            scene.curves.push(arc.path().corners().to_vec());
        }
        GeometryDocument::Circuit { circuit, .. } => {
            scene.curves.push(circuit.path().corners().to_vec());
        }
        GeometryDocument::Drawing { drawing, .. } => {
            for e in drawing.edges() {
                scene.curves.push(e.arc.path().corners().to_vec());
            }
            for (name, p) in drawing.terminals() {
                scene.marks.push((p.clone(), "point"));
                scene.labels.push((p.clone(), name.clone()));
            }
        }
        GeometryDocument::Witness { witness, .. } => {
            scene.curves.push(witness.circuit.path().corners().to_vec());
            scene.vlines.push(witness.line_x.clone());
            scene.marks.push((witness.c.clone(), "witness-inside"));
            scene.marks.push((witness.d.clone(), "witness-outside"));
            scene.labels.push((witness.c.clone(), "c".to_string()));
            scene.labels.push((witness.d.clone(), "d".to_string()));
        }
    }
    render(&scene)
}

/// Renders a ray decomposition: the path, the dashed upward ray from the
/// query point, and every preimage component marked by classification —
/// interval components additionally carry a chord along their run.
pub fn emit_decomposition_svg(d: &RayDecomposition) -> String {
    let mut scene = Scene::default();
    scene.curves.push(d.path.corners().to_vec());
    scene.rays.push(d.query.clone());
    scene.marks.push((d.query.clone(), "witness-inside"));
    for comp in &d.components {
        let class = match comp.classification {
            Classification::Simple => "hit-simple",
            Classification::Double => "hit-double",
        };
        match &comp.span {
            ComponentSpan::SinglePoint(loc) => {
                scene.marks.push((loc.point.clone(), class));
            }
            ComponentSpan::Interval { start, end, .. } => {
                scene.chords.push((start.point.clone(), end.point.clone()));
                scene.marks.push((start.point.clone(), class));
                scene.marks.push((end.point.clone(), class));
            }
        }
    }
    render(&scene)
}
