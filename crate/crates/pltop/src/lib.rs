//! Exact-arithmetic topology of piecewise-linear curves in the plane.
//!
//! The crate decides plane-topological questions about piecewise-linear (PL)
//! paths and circuits with no floating point anywhere: coordinates are
//! arbitrary-precision rationals and every predicate is sign-exact.
//!
//! The layers, bottom to top:
//!
//! * [`exact`] — points, segments, vertical rays, orientation and
//!   intersection predicates, squared distances.
//! * [`path`] — PL paths, arcs (injective), and circuits (injective closed),
//!   with concatenation, splitting, hit queries, and extremes.
//! * [`parity`] — the ray decomposition: the preimage of an upward vertical
//!   ray on a path, its components classified Simple/Double by the side the
//!   path approaches and leaves on, and the resulting crossing parity. This
//!   is the crate's point-in-circuit test, degeneracies included.
//! * [`complement`] — working in the complement of a circuit: side probes,
//!   certified bisector offset cycles, grid routing, flood-fill component
//!   counts, horizontal chords, and outer detours.
//! * [`witness`] — separation witnesses (a concrete pair of points every
//!   path between which must cross the circuit) and the three-arc probe
//!   whose eight-arc drawing pins the separation via a parity mismatch.
//! * [`planarity`] — straight-from-the-definition drawing validation and
//!   refutation certificates for drawings of K3,3 minus an edge.
//! * [`doc`] / [`svg`] — the JSON document format and the deterministic
//!   SVG renderer behind the `pltop` command-line tool.

pub mod complement;
pub mod doc;
pub mod exact;
pub mod parity;
pub mod path;
pub mod planarity;
pub mod svg;
pub mod witness;

pub use exact::{Point, Rational};
