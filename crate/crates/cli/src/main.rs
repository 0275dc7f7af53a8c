//! `gcut`: batch front end for the polytope library.
//!
//! Every subcommand writes JSON (CSV for `vertices`) to stdout or `--out`.
//! Exit codes: 0 success, 2 invalid input, 3 oracle caps exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gcut::complex::{Face, SimplicialComplex};
use gcut::degree::{degree_of, gcut_volume};
use gcut::hrep::{closed_form, hrep_with, oracle_hrep, Method};
use gcut::hull::{facets_equal, hull_with, HullConfig};
use gcut::io;
use gcut::polytope::{
    canonical_set, cut_vertices, membership, vertices, Coord, LinearInequality, MembershipMode, Space, VertexMatrix,
};
use gcut::rational::{self, Rational};
use gcut::switching::{switch_corr, switch_gcut, switch_marg};
use gcut::transform::between;

#[derive(Parser)]
#[command(name = "gcut", version, about = "Generalized cut, correlation and marginal polytopes")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex matrix as CSV, one row per subset.
    Vertices {
        #[arg(long)]
        complex: String,
        #[arg(long, value_enum)]
        polytope: Polytope,
    },
    /// H-representation of GCut, from a closed form when one applies.
    Hrep {
        #[arg(long)]
        complex: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Switch an inequality by a set of labels.
    Switch {
        #[arg(long)]
        ineq: String,
        /// Labels as "1,3"; defaults to the file's "switch_set".
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        complex: String,
        #[arg(long, value_enum, default_value = "gcut")]
        space: SpaceArg,
    },
    /// The affine map taking vertices of one polytope to another.
    Transform {
        #[arg(long, value_enum)]
        from: SpaceArg,
        #[arg(long, value_enum)]
        to: SpaceArg,
        #[arg(long)]
        complex: String,
    },
    /// Gale transform of the GCut vertices.
    Gale {
        #[arg(long)]
        complex: String,
    },
    /// Co-facets of GCut, found in the Gale dual.
    Cofacets {
        #[arg(long)]
        complex: String,
    },
    /// Facets, affine hull and normalized volume of a CSV point set.
    Hull {
        #[arg(long)]
        points: PathBuf,
    },
    /// Normalized volume of GCut.
    Volume {
        #[arg(long)]
        complex: String,
    },
    /// Degree of the toric ideal.
    Degree {
        #[arg(long)]
        complex: String,
        /// Expected formula tag; a mismatch is an error.
        #[arg(long)]
        family: Option<String>,
    },
    /// Test a point against an H-representation document.
    Member {
        #[arg(long)]
        point: String,
        #[arg(long)]
        hrep: String,
        #[arg(long, value_enum, default_value = "closure")]
        mode: ModeArg,
    },
    /// Compare the closed form with the hull oracle.
    Verify {
        #[arg(long)]
        complex: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Polytope {
    Marg,
    Corr,
    Gcut,
    Cut,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Marg,
    Corr,
    Gcut,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Marg => Space::Marg,
            SpaceArg::Corr => Space::Corr,
            SpaceArg::Gcut => Space::Gcut,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closure,
    Relint,
}

enum Failure {
    Invalid(String),
    TooLarge(String),
}

impl From<gcut::Error> for Failure {
    fn from(e: gcut::Error) -> Self {
        match e {
            gcut::Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

/// Inline JSON if the argument starts with `{` or `[`, otherwise a file path.
fn read_arg(arg: &str) -> Outcome<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    read_file(Path::new(arg))
}

fn read_file(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_json(arg: &str) -> Outcome<Value> {
    serde_json::from_str(&read_arg(arg)?).map_err(|e| invalid(format!("{arg}: {e}")))
}

fn load_complex(arg: &str) -> Outcome<SimplicialComplex> {
    Ok(io::parse_complex(&read_arg(arg)?)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn vertex_csv(v: &VertexMatrix) -> Outcome<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| invalid(e.to_string());
    let mut header = vec!["subset".to_string()];
    header.extend(v.row_keys());
    w.write_record(&header).map_err(csv_err)?;
    for (s, col) in v.subsets.iter().zip(&v.columns) {
        let mut rec = vec![s.key()];
        rec.extend(col.iter().map(rational::format));
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| invalid(e.to_string()))
}

/// Reads a vertex CSV; a leading `subset` column is skipped.
fn read_points(path: &Path) -> Outcome<(Vec<Coord>, Vec<Vec<Rational>>)> {
    let text = read_file(path)?;
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(|e| invalid(e.to_string()))?.clone();
    let skip = usize::from(headers.get(0) == Some("subset"));
    let coords = headers
        .iter()
        .skip(skip)
        .map(io::coord_from_key)
        .collect::<gcut::Result<Vec<_>>>()?;
    let mut points = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| invalid(e.to_string()))?;
        let p = rec
            .iter()
            .skip(skip)
            .map(rational::parse)
            .collect::<gcut::Result<Vec<_>>>()?;
        points.push(p);
    }
    if points.is_empty() {
        return Err(invalid("no points"));
    }
    Ok((coords, points))
}

fn parse_set(s: &str) -> Outcome<Face> {
    Ok(Face::parse_key(s.trim_matches(|c| c == '[' || c == ']'))?)
}

fn run(cli: Cli) -> Outcome<String> {
    let config = HullConfig::from_env();
    match cli.command {
        Command::Vertices { complex, polytope } => {
            let d = load_complex(&complex)?;
            let v = match polytope {
                Polytope::Cut => cut_vertices(&d)?,
                Polytope::Marg => vertices(&d, Space::Marg)?,
                Polytope::Corr => vertices(&d, Space::Corr)?,
                Polytope::Gcut => vertices(&d, Space::Gcut)?,
            };
            vertex_csv(&v)
        }
        Command::Hrep { complex, method } => {
            let d = load_complex(&complex)?;
            let method = match method {
                MethodArg::Auto => Method::Auto,
                MethodArg::Oracle => Method::Oracle,
            };
            Ok(pretty(&io::hrep_to_json(&hrep_with(&d, method, &config)?)))
        }
        Command::Switch {
            ineq,
            set,
            complex,
            space,
        } => {
            let d = load_complex(&complex)?;
            let space = Space::from(space);
            let coords = space.coords(&d);
            let doc = read_json(&ineq)?;
            let q = io::inequality_from_json(&doc, &coords)?;
            let i = match (set, doc.get("switch_set")) {
                (Some(s), _) => parse_set(&s)?,
                (None, Some(v)) => io::face_from_json(v)?,
                (None, None) => return Err(invalid("no switch set given")),
            };
            let s = match space {
                Space::Gcut => switch_gcut(&q, &i, &d)?,
                Space::Corr => switch_corr(&q, &i, &d)?,
                Space::Marg => switch_marg(&q, &i, &d)?,
            };
            let mut out = io::inequality_to_json(&s, &coords);
            out["switch_set"] = io::face_to_json(&i);
            Ok(pretty(&out))
        }
        Command::Transform { from, to, complex } => {
            let d = load_complex(&complex)?;
            let m = between(&d, from.into(), to.into());
            let mut out = io::map_to_json(&m.linear);
            out["translation"] = json!(m.translation.iter().map(rational::format).collect::<Vec<_>>());
            Ok(pretty(&out))
        }
        Command::Gale { complex } => {
            let d = load_complex(&complex)?;
            let g = gcut::gale::gale(&vertices(&d, Space::Gcut)?)?;
            Ok(pretty(&io::gale_to_json(&g)))
        }
        Command::Cofacets { complex } => {
            let d = load_complex(&complex)?;
            let g = gcut::gale::gale(&vertices(&d, Space::Gcut)?)?;
            Ok(pretty(&io::cofaces_to_json(&gcut::gale::cofacets(&g)?)))
        }
        Command::Hull { points } => {
            let (coords, points) = read_points(&points)?;
            if let Some(p) = points.iter().find(|p| p.len() != coords.len()) {
                return Err(gcut::Error::AmbientMismatch {
                    expected: coords.len(),
                    found: p.len(),
                }
                .into());
            }
            let mut h = hull_with(&points, &config)?;
            h.facets = canonical_set(&h.facets);
            Ok(pretty(&io::hull_to_json(&h, &coords)))
        }
        Command::Volume { complex } => {
            let d = load_complex(&complex)?;
            let v = gcut_volume(&d, &config)?;
            Ok(pretty(&json!({ "normalized_volume": v.to_string() })))
        }
        Command::Degree { complex, family } => {
            let d = load_complex(&complex)?;
            let r = degree_of(&d, true, &config).map_err(|e| match e {
                gcut::Error::TooLarge { .. } => {
                    invalid(format!("no degree formula for this complex and the volume oracle is out of range ({e})"))
                }
                e => e.into(),
            })?;
            if let Some(tag) = family {
                if tag != r.formula {
                    return Err(invalid(format!("complex is recognized as {:?}, not {tag:?}", r.formula)));
                }
            }
            Ok(pretty(&io::degree_to_json(&r)))
        }
        Command::Member { point, hrep, mode } => {
            let doc = read_json(&hrep)?;
            let coords = io::coords_from_json(&doc)?;
            let (eqs, ineqs) = io::hrep_from_json(&doc, &coords)?;
            let p = io::point_from_json(&read_json(&point)?, &coords)?;
            let mode = match mode {
                ModeArg::Closure => MembershipMode::Closure,
                ModeArg::Relint => MembershipMode::Relint,
            };
            let inside = membership(&p, &eqs, &ineqs, mode)?;
            Ok(pretty(&json!({ "member": inside })))
        }
        Command::Verify { complex } => {
            let d = load_complex(&complex)?;
            let Some((family, _)) = closed_form(&d)? else {
                return Err(invalid("no closed form applies to this complex"));
            };
            let closed = hrep_with(&d, Method::Auto, &config)?;
            let oracle = oracle_hrep(&d, &config)?;
            let diff = facets_equal(&oracle.inequalities, &closed.inequalities)?;
            let coords = Space::Gcut.coords(&d);
            let list = |v: &[LinearInequality]| -> Vec<Value> {
                v.iter().map(|q| io::inequality_to_json(q, &coords)).collect()
            };
            Ok(pretty(&json!({
                "equal": diff.is_equal(),
                "family": family.as_str(),
                "missing": list(&diff.missing),
                "extra": list(&diff.extra),
            })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(text) => {
            let written = match &out {
                Some(path) => fs::write(path, &text),
                None => std::io::stdout().lock().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("gcut: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("gcut: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::TooLarge(msg)) => {
            eprintln!("gcut: {msg}");
            ExitCode::from(3)
        }
    }
}
