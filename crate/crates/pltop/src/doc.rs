//! JSON documents for geometry values.
//!
//! One document per UTF-8 file: a JSON object whose `"kind"` field names
//! the payload shape — `point`, `path`, `arc`, `circuit`, `drawing`, or
//! `witness` — plus an optional `"name"`. Coordinates are two-element
//! arrays whose entries are strings holding an integer or a fraction
//! `"p/q"` (bare JSON integers are also accepted on input; output always
//! uses strings, in lowest terms).
//!
//! Parsing is strict on two levels. Malformed JSON, unknown fields, and
//! malformed numbers are *parse* errors carrying the line and column of
//! the offending token. A well-formed document whose payload breaks the
//! rules of its type — a self-crossing circuit, a drawing edge naming an
//! unknown terminal, a witness whose parities do not recompute — is a
//! *validation* error carrying the underlying type's diagnostic, witness
//! point included.
//!
//! [`parse_document`] and [`emit_document`] round-trip exactly: emission
//! is deterministic and every coordinate survives byte-for-byte.

use std::fmt;

use serde::de::{self, DeserializeOwned};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{format_rational, parse_rational, Point, Rational};
use crate::parity::{parity, ParityError};
use crate::path::{PLArc, PLCircuit, PLPath};
use crate::planarity::{Drawing, DrawnEdge};
use crate::witness::SeparationWitness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {kind} document: {message}")]
    Validation { kind: &'static str, message: String },
}

/// A named geometry value as stored in a document file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeometryDocument {
    Point {
        name: Option<String>,
        point: Point,
    },
    Path {
        name: Option<String>,
        path: PLPath,
    },
    Arc {
        name: Option<String>,
        arc: PLArc,
    },
    Circuit {
        name: Option<String>,
        circuit: PLCircuit,
    },
    Drawing {
        name: Option<String>,
        drawing: Drawing,
    },
    Witness {
        name: Option<String>,
        witness: SeparationWitness,
    },
}

impl GeometryDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            GeometryDocument::Point { .. } => "point",
            GeometryDocument::Path { .. } => "path",
            GeometryDocument::Arc { .. } => "arc",
            GeometryDocument::Circuit { .. } => "circuit",
            GeometryDocument::Drawing { .. } => "drawing",
            GeometryDocument::Witness { .. } => "witness",
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            GeometryDocument::Point { name, .. }
            | GeometryDocument::Path { name, .. }
            | GeometryDocument::Arc { name, .. }
            | GeometryDocument::Circuit { name, .. }
            | GeometryDocument::Drawing { name, .. }
            | GeometryDocument::Witness { name, .. } => name.as_deref(),
        }
    }
}

// ---------------------------------------------------------------------
// Wire representation
// ---------------------------------------------------------------------

/// A coordinate on the wire: serialized as a string in lowest terms,
/// accepted as a string (`"3"`, `"-1/2"`) or a bare integer.
#[derive(Clone)]
struct Rat(Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string holding an integer or a fraction \"p/q\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Rat, E> {
                parse_rational(s).map(Rat).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(n.into())))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(n.into())))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct RawPt(Rat, Rat);

impl RawPt {
    fn of(p: &Point) -> RawPt {
        RawPt(Rat(p.x.clone()), Rat(p.y.clone()))
    }

    fn point(&self) -> Point {
        Point::new(self.0 .0.clone(), self.1 .0.clone())
    }
}

fn points(raw: &[RawPt]) -> Vec<Point> {
    raw.iter().map(RawPt::point).collect()
}

fn raw_points(ps: &[Point]) -> Vec<RawPt> {
    ps.iter().map(RawPt::of).collect()
}

/// One single-valued unit enum per document kind: deserializing enforces
/// the tag, serializing writes it, and the per-kind structs stay plain
/// enough for `deny_unknown_fields` to work.
macro_rules! kind_tag {
    ($name:ident, $text:literal) => {
        #[derive(Serialize, Deserialize, Clone, Copy)]
        enum $name {
            #[serde(rename = $text)]
            Tag,
        }
    };
}

kind_tag!(PointTag, "point");
kind_tag!(PathTag, "path");
kind_tag!(ArcTag, "arc");
kind_tag!(CircuitTag, "circuit");
kind_tag!(DrawingTag, "drawing");
kind_tag!(WitnessTag, "witness");

#[derive(Serialize, Deserialize)]
struct KindProbe {
    kind: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    kind: PointTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    point: RawPt,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    kind: PathTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    corners: Vec<RawPt>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    closed: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    kind: ArcTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    corners: Vec<RawPt>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircuit {
    kind: CircuitTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    corners: Vec<RawPt>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerminal {
    name: String,
    point: RawPt,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    u: String,
    v: String,
    corners: Vec<RawPt>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDrawing {
    kind: DrawingTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    terminals: Vec<RawTerminal>,
    edges: Vec<RawEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWitness {
    kind: WitnessTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    circuit: Vec<RawPt>,
    c: RawPt,
    d: RawPt,
    l: RawPt,
    p: RawPt,
    a: RawPt,
    b: RawPt,
    line_x: Rat,
    parity_c: u8,
    parity_d: u8,
}

// ---------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------

fn positioned<T: DeserializeOwned>(text: &str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(|e| {
        // serde_json's Display repeats the position as a suffix; the
        // structured fields carry it, so drop the duplicate.
        let s = e.to_string();
        let message = match s.rfind(" at line ") {
            Some(i) => s[..i].to_string(),
            None => s,
        };
        DocError::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    })
}

fn invalid(kind: &'static str, err: impl fmt::Display) -> DocError {
    DocError::Validation {
        kind,
        message: err.to_string(),
    }
}

fn build_path(kind: &'static str, corners: &[RawPt], closed: bool) -> Result<PLPath, DocError> {
    PLPath::new(points(corners), closed).map_err(|e| invalid(kind, e))
}

fn build_arc(kind: &'static str, corners: &[RawPt]) -> Result<PLArc, DocError> {
    PLArc::new(build_path(kind, corners, false)?).map_err(|e| invalid(kind, e))
}

fn build_circuit(kind: &'static str, corners: &[RawPt]) -> Result<PLCircuit, DocError> {
    PLCircuit::new(build_path(kind, corners, true)?).map_err(|e| invalid(kind, e))
}

/// Recomputes the parity of a stored witness point and checks it against
/// both the stored value and the value the witness promises.
fn check_witness_parity(
    label: &str,
    point: &Point,
    stored: u8,
    promised: u8,
    circuit: &PLCircuit,
) -> Result<(), DocError> {
    let got = match parity(point, circuit.path()) {
        Ok(g) => g,
        Err(ParityError::PointOnCurve) => {
            return Err(invalid(
                "witness",
                format!("witness point {label} = {point} lies on the circuit"),
            ))
        }
        Err(e) => return Err(invalid("witness", e)),
    };
    if got != stored {
        return Err(invalid(
            "witness",
            format!("stored parity_{label} = {stored}, but the circuit gives {got}"),
        ));
    }
    if got != promised {
        return Err(invalid(
            "witness",
            format!("witness point {label} = {point} has parity {got}, expected {promised}"),
        ));
    }
    Ok(())
}

fn build_witness(raw: RawWitness) -> Result<SeparationWitness, DocError> {
    let circuit = build_circuit("witness", &raw.circuit)?;
    let (c, d) = (raw.c.point(), raw.d.point());
    let (l, p, a, b) = (raw.l.point(), raw.p.point(), raw.a.point(), raw.b.point());
    for (label, q) in [("l", &l), ("p", &p), ("a", &a), ("b", &b)] {
        if !circuit.path().on_carrier(q) {
            return Err(invalid(
                "witness",
                format!("supporting point {label} = {q} is not on the circuit"),
            ));
        }
    }
    let line_x = raw.line_x.0;
    for (label, q) in [("c", &c), ("a", &a), ("b", &b)] {
        if q.x != line_x {
            return Err(invalid(
                "witness",
                format!(
                    "point {label} = {q} is off the separating line x = {}",
                    format_rational(&line_x)
                ),
            ));
        }
    }
    check_witness_parity("c", &c, raw.parity_c, 1, &circuit)?;
    check_witness_parity("d", &d, raw.parity_d, 0, &circuit)?;
    Ok(SeparationWitness {
        circuit,
        c,
        d,
        l,
        p,
        a,
        b,
        line_x,
        parity_c: raw.parity_c,
        parity_d: raw.parity_d,
    })
}

fn build_drawing(raw: RawDrawing) -> Result<Drawing, DocError> {
    let terminals = raw
        .terminals
        .iter()
        .map(|t| (t.name.clone(), t.point.point()))
        .collect();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        let arc = build_arc("drawing", &e.corners)?;
        edges.push(DrawnEdge {
            u: e.u.clone(),
            v: e.v.clone(),
            arc,
        });
    }
    Drawing::new(terminals, edges).map_err(|e| invalid("drawing", e))
}

/// Parses the single document held by `text`.
pub fn parse_document(text: &str) -> Result<GeometryDocument, DocError> {
    let probe: KindProbe = positioned(text)?;
    match probe.kind.as_str() {
        "point" => {
            let raw: RawPoint = positioned(text)?;
            Ok(GeometryDocument::Point { name: raw.name, point: raw.point.point() })
        }
        "path" => {
            let raw: RawPath = positioned(text)?;
            let path = build_path("path", &raw.corners, raw.closed)?;
            Ok(GeometryDocument::Path { name: raw.name, path })
        }
        "arc" => {
            let raw: RawArc = positioned(text)?;
            let arc = build_arc("arc", &raw.corners)?;
            Ok(GeometryDocument::Arc { name: raw.name, arc })
        }
        "circuit" => {
            let raw: RawCircuit = positioned(text)?;
            let circuit = build_circuit("circuit", &raw.corners)?;
            Ok(GeometryDocument::Circuit { name: raw.name, circuit })
        }
        "drawing" => {
            let raw: RawDrawing = positioned(text)?;
            let name = raw.name.clone();
            Ok(GeometryDocument::Drawing { name, drawing: build_drawing(raw)? })
        }
        "witness" => {
            let raw: RawWitness = positioned(text)?;
            let name = raw.name.clone();
            Ok(GeometryDocument::Witness { name, witness: build_witness(raw)? })
        }
        other => Err(DocError::Parse {
            line: 1,
            column: 1,
            message: format!(
                "unknown document kind {other:?}; expected point, path, arc, circuit, drawing, or witness"
            ),
        }),
    }
}

// ---------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------

fn pretty<T: Serialize>(raw: &T) -> String {
    let mut s = serde_json::to_string_pretty(raw).expect("documents serialize infallibly");
    s.push('\n');
    s
}

/// Serializes a document deterministically. `parse_document` recovers the
/// value exactly: coordinates are written in lowest terms, which both
/// parse back to the same rational and survive a further round trip
/// byte-for-byte.
pub fn emit_document(doc: &GeometryDocument) -> String {
    match doc {
        GeometryDocument::Point { name, point } => pretty(&RawPoint {
            kind: PointTag::Tag,
            name: name.clone(),
            point: RawPt::of(point),
        }),
        GeometryDocument::Path { name, path } => pretty(&RawPath {
            kind: PathTag::Tag,
            name: name.clone(),
            corners: raw_points(path.corners()),
            closed: path.is_closed(),
        }),
        GeometryDocument::Arc { name, arc } => pretty(&RawArc {
            kind: ArcTag::Tag,
            name: name.clone(),
            corners: raw_points(arc.path().corners()),
        }),
        GeometryDocument::Circuit { name, circuit } => pretty(&RawCircuit {
            kind: CircuitTag::Tag,
            name: name.clone(),
            corners: raw_points(circuit.path().corners()),
        }),
        GeometryDocument::Drawing { name, drawing } => pretty(&RawDrawing {
            kind: DrawingTag::Tag,
            name: name.clone(),
            terminals: drawing
                .terminals()
                .iter()
                .map(|(n, p)| RawTerminal {
                    name: n.clone(),
                    point: RawPt::of(p),
                })
                .collect(),
            edges: drawing
                .edges()
                .iter()
                .map(|e| RawEdge {
                    u: e.u.clone(),
                    v: e.v.clone(),
                    corners: raw_points(e.arc.path().corners()),
                })
                .collect(),
        }),
        GeometryDocument::Witness { name, witness } => pretty(&RawWitness {
            kind: WitnessTag::Tag,
            name: name.clone(),
            circuit: raw_points(witness.circuit.path().corners()),
            c: RawPt::of(&witness.c),
            d: RawPt::of(&witness.d),
            l: RawPt::of(&witness.l),
            p: RawPt::of(&witness.p),
            a: RawPt::of(&witness.a),
            b: RawPt::of(&witness.b),
            line_x: Rat(witness.line_x.clone()),
            parity_c: witness.parity_c,
            parity_d: witness.parity_d,
        }),
    }
}
