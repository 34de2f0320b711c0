//! End-to-end tests of the `pltop` binary: exit-code classes, exact
//! output, and agreement between the CLI and direct library calls.

use std::path::Path;
use std::process::Command;

use pltop::complement::{horizontal_chord, route_in_complement, RouteOutcome};
use pltop::doc::{emit_document, parse_document, GeometryDocument};
use pltop::exact::{rat_int, Point};
use pltop::path::{extreme_points, split_circuit, PLCircuit, PLPath};
use pltop::planarity::{Drawing, DrawnEdge};
use pltop::witness::{claim4_probe, separation_witness};

fn pltop(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pltop"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

fn pt(x: i64, y: i64) -> Point {
    Point::new(rat_int(x), rat_int(y))
}

fn rectangle() -> PLCircuit {
    let ring = vec![pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2), pt(0, 0)];
    PLCircuit::new(PLPath::new(ring, true).unwrap()).unwrap()
}

fn write_doc(dir: &Path, name: &str, doc: &GeometryDocument) -> String {
    let path = dir.join(name);
    std::fs::write(&path, emit_document(doc)).unwrap();
    path.to_str().unwrap().to_string()
}

fn rect_file(dir: &Path) -> String {
    let doc = GeometryDocument::Circuit {
        name: Some("rect".into()),
        circuit: rectangle(),
    };
    write_doc(dir, "rect.json", &doc)
}

fn crossing_drawing() -> Drawing {
    let terminals = vec![
        ("a".to_string(), pt(0, 0)),
        ("b".to_string(), pt(2, 2)),
        ("c".to_string(), pt(0, 2)),
        ("d".to_string(), pt(2, 0)),
    ];
    let seg = |a: &Point, b: &Point| {
        pltop::path::PLArc::new(PLPath::new(vec![a.clone(), b.clone()], false).unwrap()).unwrap()
    };
    let edges = vec![
        DrawnEdge {
            u: "a".into(),
            v: "b".into(),
            arc: seg(&pt(0, 0), &pt(2, 2)),
        },
        DrawnEdge {
            u: "c".into(),
            v: "d".into(),
            arc: seg(&pt(0, 2), &pt(2, 0)),
        },
    ];
    Drawing::new(terminals, edges).unwrap()
}

#[test]
fn inside_answers_all_three_ways() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["inside", &rect, "--point", "2", "1"]);
    assert_eq!((code, out.as_str()), (0, "inside\n"));
    let (code, out, _) = pltop(&["inside", &rect, "--point", "5", "1"]);
    assert_eq!((code, out.as_str()), (0, "outside\n"));
    // A carrier point is a computed answer, not an error.
    let (code, out, _) = pltop(&["inside", &rect, "--point", "0", "1"]);
    assert_eq!((code, out.as_str()), (0, "on-curve\n"));
}

#[test]
fn parity_reports_and_rejects_on_curve() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["parity", &rect, "--point", "2", "1"]);
    assert_eq!((code, out.as_str()), (0, "parity 1\n"));
    let (code, out, _) = pltop(&["parity", &rect, "--point", "-1/2", "1"]);
    assert_eq!((code, out.as_str()), (0, "parity 0\n"));
    let (code, _, err) = pltop(&["parity", &rect, "--point", "0", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");
}

#[test]
fn parity_decomposition_lines() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["parity", &rect, "--point", "2", "1", "--decomposition"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "parity 1");
    assert_eq!(lines[1], "simple components 1");
    assert!(
        lines[2].starts_with("component 1: simple"),
        "got: {}",
        lines[2]
    );
    assert!(lines[3].starts_with("gap word "), "got: {}", lines[3]);
}

#[test]
fn validate_names_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["validate", &rect]);
    assert_eq!((code, out.as_str()), (0, "valid circuit \"rect\"\n"));
}

#[test]
fn parse_and_validation_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\n  \"kind\": \"point\",\n  \"point\": [\"1/0\", \"2\"]\n}\n",
    )
    .unwrap();
    let (code, out, err) = pltop(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(
        err.starts_with("error: parse error at line"),
        "stderr was: {err}"
    );

    let unk = dir.path().join("unk.json");
    std::fs::write(&unk, "{\"kind\": \"polygon\"}").unwrap();
    let (code, _, err) = pltop(&["validate", unk.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown document kind"), "stderr was: {err}");

    let (code, _, err) = pltop(&[
        "validate",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");

    // Wrong document kind for the subcommand.
    let point_doc = GeometryDocument::Point {
        name: None,
        point: pt(1, 1),
    };
    let point_file = write_doc(dir.path(), "pt.json", &point_doc);
    let (code, _, err) = pltop(&["parity", &point_file, "--point", "2", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");
}

#[test]
fn components_respect_pitch() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["components", &rect, "--pitch", "1/4"]);
    assert_eq!((code, out.as_str()), (0, "components 2\n"));
    // Documented pitch dependence: the interior is invisible at a pitch
    // coarser than the figure.
    let (code, out, _) = pltop(&["components", &rect, "--pitch", "8"]);
    assert_eq!((code, out.as_str()), (0, "components 1\n"));
    let (code, _, err) = pltop(&["components", &rect, "--pitch", "0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");
}

#[test]
fn offset_prints_certificate_summary() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["offset", &rect, "--delta", "1/4", "--side", "left"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "certified delta 1/4");
    assert_eq!(lines[1], "requested delta 1/4");
    assert_eq!(lines[2], "parity 1");
    assert!(lines[3].starts_with("corners "), "got: {}", lines[3]);
    let (code, out, _) = pltop(&["offset", &rect, "--delta", "1/4", "--side", "right"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(2), Some("parity 0"));
}

#[test]
fn route_output_equals_library_route() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["route", &rect, "--from", "1", "1", "--to", "3", "1"]);
    assert_eq!(code, 0);
    let doc = parse_document(&out).expect("route emits a valid document");
    let GeometryDocument::Arc { arc, .. } = doc else {
        panic!("expected an arc document")
    };
    match route_in_complement(&rectangle(), &pt(1, 1), &pt(3, 1)).unwrap() {
        RouteOutcome::Arc(expected) => assert_eq!(arc, expected),
        RouteOutcome::Separated => panic!("library disagrees with CLI"),
    }
    // Unequal parities: a negative mathematical answer on stdout, exit 1.
    let (code, out, _) = pltop(&["route", &rect, "--from", "1", "1", "--to", "5", "1"]);
    assert_eq!((code, out.as_str()), (1, "separated\n"));
}

#[test]
fn chord_matches_library_and_misses_politely() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let f = rectangle();
    let ext = extreme_points(f.path());
    let (f0, f1) = split_circuit(&f, &ext.top, &ext.bottom).unwrap();
    let seg = horizontal_chord(&f, &f0, &f1, &rat_int(1)).unwrap();
    let (code, out, _) = pltop(&["chord", &rect, "--y", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, format!("chord {} {}\n", seg.a, seg.b));
    let (code, out, _) = pltop(&["chord", &rect, "--y", "5"]);
    assert_eq!((code, out.as_str()), (1, "no-chord\n"));
}

#[test]
fn witness_files_match_library_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let out_json = dir.path().join("w.json");
    let out_svg = dir.path().join("w.svg");
    let (code, out, _) = pltop(&[
        "witness",
        &rect,
        "--out",
        out_json.to_str().unwrap(),
        "--svg",
        out_svg.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let w = separation_witness(&rectangle());
    assert_eq!(
        out,
        format!(
            "c = {} parity {}\nd = {} parity {}\nline x = {}\n",
            w.c,
            w.parity_c,
            w.d,
            w.parity_d,
            pltop::exact::format_rational(&w.line_x)
        )
    );
    let written = std::fs::read_to_string(&out_json).unwrap();
    let doc = parse_document(&written).expect("witness file is a valid document");
    let GeometryDocument::Witness { witness, .. } = doc else {
        panic!("expected witness doc")
    };
    assert_eq!(witness, w);
    // The figure equals a fresh `svg` render of the same document.
    let svg_bytes = std::fs::read(&out_svg).unwrap();
    let out_svg2 = dir.path().join("w2.svg");
    let (code, _, _) = pltop(&[
        "svg",
        out_json.to_str().unwrap(),
        "--out",
        out_svg2.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(svg_bytes, std::fs::read(&out_svg2).unwrap());
    assert!(String::from_utf8(svg_bytes).unwrap().starts_with("<svg"));
}

#[test]
fn claim4_prints_probe_parities() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let gadget = claim4_probe(&rectangle()).unwrap();
    let (code, out, _) = pltop(&["claim4", &rect]);
    assert_eq!(code, 0);
    let expected = format!(
        "chord {} {}\ne = {} parity 1\ng = {} parity 0\n",
        gadget.t.a, gadget.t.b, gadget.e, gadget.g
    );
    assert_eq!(out, expected);
}

#[test]
fn refine_emits_a_path_document() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, out, _) = pltop(&["refine", &rect, "--h2", "1/4", "--mandatory", "2", "0"]);
    assert_eq!(code, 0);
    let doc = parse_document(&out).expect("refine emits a valid document");
    let GeometryDocument::Path { path, .. } = doc else {
        panic!("expected path doc")
    };
    assert!(path.is_closed());
    let f = rectangle();
    for w in path.corners().windows(2) {
        assert!(pltop::exact::d2_point_point(&w[0], &w[1]) < pltop::exact::rat(1, 4));
    }
    assert!(path.corners().contains(&pt(2, 0)), "mandatory corner kept");
    assert!(path.corners().iter().all(|c| f.path().on_carrier(c)));
    // Mandatory point off the carrier: a precondition failure.
    let (code, _, err) = pltop(&["refine", &rect, "--h2", "1/4", "--mandatory", "5", "5"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");
}

#[test]
fn drawing_check_reports_crossing_point() {
    let dir = tempfile::tempdir().unwrap();
    let doc = GeometryDocument::Drawing {
        name: None,
        drawing: crossing_drawing(),
    };
    let file = write_doc(dir.path(), "cross.json", &doc);
    let (code, out, _) = pltop(&["drawing-check", &file]);
    assert_eq!(code, 1);
    assert_eq!(out, "violation at (1, 1) between edge 0 and edge 1\n");

    // A clean two-edge path drawing passes.
    let seg = |a: &Point, b: &Point| {
        pltop::path::PLArc::new(PLPath::new(vec![a.clone(), b.clone()], false).unwrap()).unwrap()
    };
    let clean = Drawing::new(
        vec![
            ("a".to_string(), pt(0, 0)),
            ("b".to_string(), pt(2, 0)),
            ("c".to_string(), pt(2, 2)),
        ],
        vec![
            DrawnEdge {
                u: "a".into(),
                v: "b".into(),
                arc: seg(&pt(0, 0), &pt(2, 0)),
            },
            DrawnEdge {
                u: "b".into(),
                v: "c".into(),
                arc: seg(&pt(2, 0), &pt(2, 2)),
            },
        ],
    )
    .unwrap();
    let file = write_doc(
        dir.path(),
        "clean.json",
        &GeometryDocument::Drawing {
            name: None,
            drawing: clean,
        },
    );
    let (code, out, _) = pltop(&["drawing-check", &file]);
    assert_eq!((code, out.as_str()), (0, "ok\n"));
}

#[test]
fn k33_cert_on_probe_drawing() {
    let dir = tempfile::tempdir().unwrap();
    let gadget = claim4_probe(&rectangle()).unwrap();
    let doc = GeometryDocument::Drawing {
        name: None,
        drawing: gadget.to_drawing(),
    };
    let file = write_doc(dir.path(), "gadget.json", &doc);
    let (code, out, _) = pltop(&["k33-cert", &file]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "missing edge e g");
    assert!(
        lines[1].starts_with("separating cycle "),
        "got: {}",
        lines[1]
    );
    assert_eq!(lines[2], "parity e = 1");
    assert_eq!(lines[3], "parity g = 0");

    // Not a K3,3-minus-one-edge drawing: an input error, not a verdict.
    let two = GeometryDocument::Drawing {
        name: None,
        drawing: crossing_drawing(),
    };
    let file = write_doc(dir.path(), "two.json", &two);
    let (code, _, err) = pltop(&["k33-cert", &file]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "), "stderr was: {err}");
}

#[test]
fn svg_render_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let (code, _, _) = pltop(&["svg", &rect, "--out", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, _) = pltop(&["svg", &rect, "--out", b.to_str().unwrap()]);
    assert_eq!(code, 0);
    let a = std::fs::read(&a).unwrap();
    assert_eq!(a, std::fs::read(&b).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("<polyline"), "curve missing from render");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = pltop(&["parity"]);
    assert_eq!(code, 2);
    let (code, _, _) = pltop(&["no-such-subcommand"]);
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let rect = rect_file(dir.path());
    let (code, _, _) = pltop(&["inside", &rect, "--point", "2"]);
    assert_eq!(code, 2, "a point needs two coordinates");
}
