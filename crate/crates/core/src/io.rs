//! JSON encodings shared by the command-line tool and tests.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`) so that values survive
//! round trips exactly.

use serde_json::{json, Map, Value};

use crate::complex::{Face, SimplicialComplex};
use crate::degree::DegreeResult;
use crate::error::{Error, Result};
use crate::gale::{CoFace, GaleTransform};
use crate::hrep::HRepresentation;
use crate::hull::HullResult;
use crate::polytope::{Coord, LinearInequality, MarginRow};
use crate::rational::{self, Rational};
use crate::transform::LinearMap;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("complex: {e}")))
}

pub fn complex_to_json(d: &SimplicialComplex) -> Value {
    serde_json::to_value(d).expect("complex serializes")
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) => rational::parse(&n.to_string()),
        _ => Err(parse_err(format!("expected a rational, found {v}"))),
    }
}

/// Sparse encoding keyed by coordinate; zero coefficients are omitted.
pub fn inequality_to_json(q: &LinearInequality, coords: &[Coord]) -> Value {
    let coeffs: Map<String, Value> = coords
        .iter()
        .zip(&q.coeffs)
        .filter(|(_, a)| !num_traits::Zero::is_zero(*a))
        .map(|(c, a)| (c.key(), Value::String(rational::format(a))))
        .collect();
    json!({ "coeffs": coeffs, "rhs": rational::format(&q.rhs) })
}

/// Inverse of [`inequality_to_json`]; unknown keys are rejected.
pub fn inequality_from_json(v: &Value, coords: &[Coord]) -> Result<LinearInequality> {
    let obj = v.as_object().ok_or_else(|| parse_err("inequality must be an object"))?;
    let rhs = rational_value(obj.get("rhs").ok_or_else(|| parse_err("missing rhs"))?)?;
    let mut coeffs = vec![Rational::from_integer(0.into()); coords.len()];
    if let Some(c) = obj.get("coeffs") {
        let c = c.as_object().ok_or_else(|| parse_err("coeffs must be an object"))?;
        for (key, val) in c {
            let canon = canonical_key(key);
            let i = coords
                .iter()
                .position(|x| x.key() == canon)
                .ok_or_else(|| parse_err(format!("unknown coordinate {key:?}")))?;
            coeffs[i] = rational_value(val)?;
        }
    }
    Ok(LinearInequality::new(coeffs, rhs))
}

/// Face keys may be written unsorted or with spaces.
fn canonical_key(key: &str) -> String {
    match key.split_once('|') {
        Some((h, f)) => match (Face::parse_key(h), Face::parse_key(f)) {
            (Ok(h), Ok(f)) => format!("{}|{}", h.key(), f.key()),
            _ => key.to_string(),
        },
        None => Face::parse_key(key).map_or_else(|_| key.to_string(), |f| f.key()),
    }
}

/// Coordinate from its key: `"H|F"` is marginal, anything else a face.
pub fn coord_from_key(key: &str) -> Result<Coord> {
    if key.contains('|') {
        MarginRow::parse_key(key).map(Coord::Margin)
    } else {
        Face::parse_key(key).map(Coord::Face)
    }
}

/// The `"coords"` list of an H-representation document.
pub fn coords_from_json(v: &Value) -> Result<Vec<Coord>> {
    let list = v
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("document has no coords list"))?;
    list.iter()
        .map(|k| {
            k.as_str()
                .ok_or_else(|| parse_err(format!("bad coordinate {k}")))
                .and_then(coord_from_key)
        })
        .collect()
}

/// Switch set given as a label array or a face key.
pub fn face_from_json(v: &Value) -> Result<Face> {
    match v {
        Value::String(s) => Face::parse_key(s),
        Value::Array(a) => a
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| parse_err(format!("bad label {x}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Face::new),
        _ => Err(parse_err("switch set must be a string or an array")),
    }
}

pub fn face_to_json(f: &Face) -> Value {
    json!(f.elements())
}

pub fn map_to_json(m: &LinearMap) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .into_iter()
        .map(|(i, j, x)| json!([i, j, rational::format(&x)]))
        .collect();
    json!({
        "rows": m.rows.iter().map(Coord::key).collect::<Vec<_>>(),
        "cols": m.cols.iter().map(Coord::key).collect::<Vec<_>>(),
        "entries": entries,
    })
}

pub fn hrep_to_json(h: &HRepresentation) -> Value {
    let coords: Vec<Coord> = h.complex.faces().into_iter().map(Coord::Face).collect();
    json!({
        "complex": complex_to_json(&h.complex),
        "family": h.family.as_str(),
        "complete": h.complete,
        "coords": coords.iter().map(Coord::key).collect::<Vec<_>>(),
        "equalities": h.equalities.iter().map(|q| inequality_to_json(q, &coords)).collect::<Vec<_>>(),
        "inequalities": h.inequalities.iter().map(|q| inequality_to_json(q, &coords)).collect::<Vec<_>>(),
    })
}

/// Equalities and inequalities of an H-representation document, over `coords`.
pub fn hrep_from_json(
    v: &Value,
    coords: &[Coord],
) -> Result<(Vec<LinearInequality>, Vec<LinearInequality>)> {
    let list = |key: &str| -> Result<Vec<LinearInequality>> {
        match v.get(key) {
            None => Ok(Vec::new()),
            Some(Value::Array(a)) => a.iter().map(|q| inequality_from_json(q, coords)).collect(),
            Some(_) => Err(parse_err(format!("{key} must be an array"))),
        }
    };
    Ok((list("equalities")?, list("inequalities")?))
}

pub fn hull_to_json(h: &HullResult, coords: &[Coord]) -> Value {
    json!({
        "family": "oracle",
        "complete": true,
        "coords": coords.iter().map(Coord::key).collect::<Vec<_>>(),
        "dim": h.dim,
        "equalities": h.affine_hull.iter().map(|q| inequality_to_json(q, coords)).collect::<Vec<_>>(),
        "inequalities": h.facets.iter().map(|q| inequality_to_json(q, coords)).collect::<Vec<_>>(),
        "triangulation": h.triangulation,
        "normalized_volume": h.normalized_volume.as_ref().map(|v| v.to_string()),
        "lattice_index": h.lattice_index.as_ref().map(|v| v.to_string()),
    })
}

pub fn degree_to_json(r: &DegreeResult) -> Value {
    json!({
        "value": r.value.to_string(),
        "formula": r.formula,
        "conjectural": r.conjectural,
        "volume_checked": r.volume_checked,
    })
}

pub fn gale_to_json(g: &GaleTransform) -> Value {
    let rows: Map<String, Value> = g
        .subsets
        .iter()
        .zip(&g.rows)
        .map(|(s, b)| (s.key(), json!(b.iter().map(rational::format).collect::<Vec<_>>())))
        .collect();
    json!({
        "vertices": g.subsets.iter().map(Face::key).collect::<Vec<_>>(),
        "kernel_dim": g.kernel_dim(),
        "pivots": g.pivots,
        "free_columns": g.free_columns,
        "rows": rows,
    })
}

pub fn cofaces_to_json(c: &[CoFace]) -> Value {
    Value::Array(
        c.iter()
            .map(|x| json!(x.subsets.iter().map(Face::key).collect::<Vec<_>>()))
            .collect(),
    )
}

/// A point given as a JSON array, or as an object keyed by coordinate.
pub fn point_from_json(v: &Value, coords: &[Coord]) -> Result<Vec<Rational>> {
    match v {
        Value::Array(a) => {
            if a.len() != coords.len() {
                return Err(Error::AmbientMismatch {
                    expected: coords.len(),
                    found: a.len(),
                });
            }
            a.iter().map(rational_value).collect()
        }
        Value::Object(_) => {
            let wrapped = json!({ "coeffs": v, "rhs": "0" });
            Ok(inequality_from_json(&wrapped, coords)?.coeffs)
        }
        _ => Err(parse_err("point must be an array or an object")),
    }
}
