//! `pltop` — exact plane topology of piecewise-linear curves from the
//! command line.
//!
//! Every subcommand parses one geometry document (see [`pltop::doc`]),
//! hands it to the corresponding library call, and reports the result
//! verbatim. Exit codes: 0 for a positive result, 1 for a correctly
//! computed negative verdict (a crossing found, points separated, no
//! chord, certification exhausted or refuted), 2 for usage, parse, or
//! validation errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pltop::complement::{
    bisector_offset, grid_components, horizontal_chord, route_in_complement, ComplementError,
    RouteOutcome, SideLabel,
};
use pltop::doc::{emit_document, parse_document, GeometryDocument};
use pltop::exact::{parse_rational, Point, Rational};
use pltop::parity::{parity, point_in_circuit, ray_decomposition, Classification, ComponentSpan};
use pltop::path::{extreme_points, split_circuit, PLCircuit, PLPath};
use pltop::planarity::{
    k33_certificate, validate_drawing, CertificateError, Drawing, DrawingVerdict,
};
use pltop::svg::emit_svg;
use pltop::witness::{claim4_probe, refine_closed, separation_witness, WitnessError};

#[derive(Parser)]
#[command(
    name = "pltop",
    version,
    about = "Exact-arithmetic topology of piecewise-linear curves in the plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a geometry document.
    Validate { file: PathBuf },
    /// Crossing parity of the upward vertical ray from a point.
    Parity {
        file: PathBuf,
        /// Query point, two rationals.
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        point: Vec<String>,
        /// Also list the classified components of the ray preimage.
        #[arg(long)]
        decomposition: bool,
    },
    /// Decide inside/outside/on-curve for a point against a circuit.
    Inside {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Count grid components of a circuit's complement at a given pitch.
    Components {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        pitch: String,
    },
    /// Certified offset cycle on one side of a circuit.
    Offset {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Route an arc between two complement points, or report separation.
    Route {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        from: Vec<String>,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        to: Vec<String>,
    },
    /// Inside chord of a circuit on a horizontal line.
    Chord {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Separation witness pair for a circuit.
    Witness {
        file: PathBuf,
        /// Write the witness as a document to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write an SVG figure of the witness to this file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Three-arc probe: chord and detour points with differing parities.
    Claim4 { file: PathBuf },
    /// Subdivide a closed curve below a squared spacing bound.
    Refine {
        file: PathBuf,
        /// Squared spacing bound, a positive rational.
        #[arg(long, allow_hyphen_values = true)]
        h2: String,
        /// Point to force as a corner; repeat the flag for more.
        #[arg(long, num_args = 2, value_names = ["X", "Y"], action = clap::ArgAction::Append, allow_hyphen_values = true)]
        mandatory: Vec<String>,
    },
    /// Check that a drawing's arcs are interior-disjoint.
    #[command(name = "drawing-check")]
    DrawingCheck { file: PathBuf },
    /// Refutation certificate for a drawing of K3,3 minus one edge.
    #[command(name = "k33-cert")]
    K33Cert { file: PathBuf },
    /// Render a document as a deterministic SVG figure.
    Svg {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Exit code for a correctly computed negative verdict.
fn negative() -> ExitCode {
    ExitCode::from(1)
}

/// `Err` is a usage/parse/validation problem (exit 2); `Ok` carries the
/// exit code of a completed computation.
fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Validate { file } => {
            let doc = load(&file)?;
            match doc.name() {
                Some(name) => println!("valid {} \"{}\"", doc.kind(), name),
                None => println!("valid {}", doc.kind()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Parity {
            file,
            point,
            decomposition,
        } => {
            let f = curve_of(load(&file)?)?;
            let c = point_arg(&point)?;
            if decomposition {
                let d = ray_decomposition(&c, &f).map_err(|e| e.to_string())?;
                println!("parity {}", d.parity);
                println!("simple components {}", d.simple_count);
                for (i, comp) in d.components.iter().enumerate() {
                    let class = match comp.classification {
                        Classification::Simple => "simple",
                        Classification::Double => "double",
                    };
                    let span = match &comp.span {
                        ComponentSpan::SinglePoint(loc) => format!("{loc}"),
                        ComponentSpan::Interval { start, end, wraps } => {
                            let tail = if *wraps { ", wraps" } else { "" };
                            format!("{start} .. {end}{tail}")
                        }
                    };
                    println!(
                        "component {}: {class}, {span}, sides {}/{}",
                        i + 1,
                        comp.side_before,
                        comp.side_after
                    );
                }
                let word: Vec<String> = d.gap_word.iter().map(|s| s.to_string()).collect();
                println!("gap word {}", word.join(" "));
            } else {
                let p = parity(&c, &f).map_err(|e| e.to_string())?;
                println!("parity {p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inside { file, point } => {
            let f = circuit_of(load(&file)?)?;
            let c = point_arg(&point)?;
            println!("{}", point_in_circuit(&c, &f));
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { file, pitch } => {
            let f = circuit_of(load(&file)?)?;
            let pitch = positive_rational(&pitch, "--pitch")?;
            let grid = grid_components(&f, &pitch);
            println!("components {}", grid.component_count());
            Ok(ExitCode::SUCCESS)
        }
        Command::Offset { file, delta, side } => {
            let f = circuit_of(load(&file)?)?;
            let delta = positive_rational(&delta, "--delta")?;
            let side = match side {
                SideArg::Left => SideLabel::Left,
                SideArg::Right => SideLabel::Right,
            };
            match bisector_offset(&f, &delta, side) {
                Ok(cycle) => {
                    println!("certified delta {}", fmt_rat(&cycle.achieved_delta));
                    println!("requested delta {}", fmt_rat(&cycle.requested_delta));
                    println!("parity {}", cycle.certificate.uniform_parity);
                    println!("corners {}", cycle.cycle.ring().len());
                    Ok(ExitCode::SUCCESS)
                }
                Err(ComplementError::DeltaExhausted) => {
                    println!("delta-exhausted");
                    Ok(negative())
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Route { file, from, to } => {
            let f = circuit_of(load(&file)?)?;
            let u = point_arg(&from)?;
            let v = point_arg(&to)?;
            match route_in_complement(&f, &u, &v) {
                Ok(RouteOutcome::Arc(arc)) => {
                    print!(
                        "{}",
                        emit_document(&GeometryDocument::Arc { name: None, arc })
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Ok(RouteOutcome::Separated) => {
                    println!("separated");
                    Ok(negative())
                }
                Err(ComplementError::RouteNotFound) => {
                    println!("route-not-found");
                    Ok(negative())
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Chord { file, y } => {
            let f = circuit_of(load(&file)?)?;
            let y = rational_arg(&y, "--y")?;
            let ext = extreme_points(f.path());
            let (f0, f1) = split_circuit(&f, &ext.top, &ext.bottom).map_err(|e| e.to_string())?;
            match horizontal_chord(&f, &f0, &f1, &y) {
                Ok(seg) => {
                    println!("chord {} {}", seg.a, seg.b);
                    Ok(ExitCode::SUCCESS)
                }
                Err(ComplementError::NoChord) => {
                    println!("no-chord");
                    Ok(negative())
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Witness { file, out, svg } => {
            let f = circuit_of(load(&file)?)?;
            let w = separation_witness(&f);
            println!("c = {} parity {}", w.c, w.parity_c);
            println!("d = {} parity {}", w.d, w.parity_d);
            println!("line x = {}", fmt_rat(&w.line_x));
            let doc = GeometryDocument::Witness {
                name: None,
                witness: w,
            };
            if let Some(path) = out {
                write_file(&path, &emit_document(&doc))?;
            }
            if let Some(path) = svg {
                write_file(&path, &emit_svg(&doc))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Claim4 { file } => {
            let f = circuit_of(load(&file)?)?;
            match claim4_probe(&f) {
                Ok(gadget) => {
                    println!("chord {} {}", gadget.t.a, gadget.t.b);
                    println!("e = {} parity {}", gadget.e, gadget.parity_e);
                    println!("g = {} parity {}", gadget.g, gadget.parity_g);
                    Ok(ExitCode::SUCCESS)
                }
                Err(WitnessError::NoSeparatingChord) => {
                    println!("no-separating-chord");
                    Ok(negative())
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Refine {
            file,
            h2,
            mandatory,
        } => {
            let f = closed_path_of(load(&file)?)?;
            let h2 = positive_rational(&h2, "--h2")?;
            let mut points = Vec::new();
            for pair in mandatory.chunks(2) {
                points.push(point_arg(pair)?);
            }
            let refined = refine_closed(&f, &h2, &points).map_err(|e| e.to_string())?;
            print!(
                "{}",
                emit_document(&GeometryDocument::Path {
                    name: None,
                    path: refined
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::DrawingCheck { file } => {
            let d = drawing_of(load(&file)?)?;
            match validate_drawing(&d) {
                DrawingVerdict::Ok => {
                    println!("ok");
                    Ok(ExitCode::SUCCESS)
                }
                DrawingVerdict::Violation {
                    edge1,
                    edge2,
                    point,
                } => {
                    println!("violation at {point} between edge {edge1} and edge {edge2}");
                    Ok(negative())
                }
                DrawingVerdict::TerminalHit {
                    edge,
                    terminal,
                    point,
                } => {
                    println!(
                        "violation at {point}: edge {edge} passes through terminal \"{terminal}\""
                    );
                    Ok(negative())
                }
            }
        }
        Command::K33Cert { file } => {
            let d = drawing_of(load(&file)?)?;
            match k33_certificate(&d) {
                Ok(cert) => {
                    println!(
                        "missing edge {} {}",
                        cert.missing_edge.0, cert.missing_edge.1
                    );
                    let order: Vec<&str> = cert
                        .separating_cycle
                        .iter()
                        .map(|(from, _)| from.as_str())
                        .collect();
                    println!("separating cycle {}", order.join(" "));
                    println!("parity {} = {}", cert.missing_edge.0, cert.parity_u);
                    println!("parity {} = {}", cert.missing_edge.1, cert.parity_v);
                    Ok(ExitCode::SUCCESS)
                }
                Err(CertificateError::CertificateFailure) => {
                    println!("certificate-failure");
                    Ok(negative())
                }
                Err(CertificateError::InvalidDrawing) => {
                    println!("invalid-drawing");
                    Ok(negative())
                }
                Err(e @ CertificateError::WrongGraph) => Err(e.to_string()),
            }
        }
        Command::Svg { file, out } => {
            let doc = load(&file)?;
            write_file(&out, &emit_svg(&doc))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(file: &Path) -> Result<GeometryDocument, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_document(&text).map_err(|e| e.to_string())
}

fn write_file(file: &Path, text: &str) -> Result<(), String> {
    std::fs::write(file, text).map_err(|e| format!("cannot write {}: {e}", file.display()))
}

fn circuit_of(doc: GeometryDocument) -> Result<PLCircuit, String> {
    match doc {
        GeometryDocument::Circuit { circuit, .. } => Ok(circuit),
        other => Err(format!(
            "expected a circuit document, found kind \"{}\"",
            other.kind()
        )),
    }
}

fn curve_of(doc: GeometryDocument) -> Result<PLPath, String> {
    match doc {
        GeometryDocument::Path { path, .. } => Ok(path),
        GeometryDocument::Arc { arc, .. } => Ok(arc.into_path()),
        GeometryDocument::Circuit { circuit, .. } => Ok(circuit.into_path()),
        other => Err(format!(
            "expected a path, arc, or circuit document, found kind \"{}\"",
            other.kind()
        )),
    }
}

fn closed_path_of(doc: GeometryDocument) -> Result<PLPath, String> {
    match doc {
        GeometryDocument::Circuit { circuit, .. } => Ok(circuit.into_path()),
        GeometryDocument::Path { path, .. } if path.is_closed() => Ok(path),
        GeometryDocument::Path { .. } => {
            Err("expected a closed path; this path document is open".to_string())
        }
        other => Err(format!(
            "expected a closed path or circuit document, found kind \"{}\"",
            other.kind()
        )),
    }
}

fn drawing_of(doc: GeometryDocument) -> Result<Drawing, String> {
    match doc {
        GeometryDocument::Drawing { drawing, .. } => Ok(drawing),
        other => Err(format!(
            "expected a drawing document, found kind \"{}\"",
            other.kind()
        )),
    }
}

fn rational_arg(text: &str, flag: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| format!("{flag}: {e}"))
}

fn positive_rational(text: &str, flag: &str) -> Result<Rational, String> {
    let r = rational_arg(text, flag)?;
    if num_traits::Signed::is_positive(&r) {
        Ok(r)
    } else {
        Err(format!("{flag} must be positive"))
    }
}

fn point_arg(pair: &[String]) -> Result<Point, String> {
    assert_eq!(pair.len(), 2, "clap enforces two values per point");
    Ok(Point::new(
        rational_arg(&pair[0], "x")?,
        rational_arg(&pair[1], "y")?,
    ))
}

fn fmt_rat(r: &Rational) -> String {
    pltop::exact::format_rational(r)
}
