//! Exact JSON encodings of points, lines and quadric constraints.
//!
//! Scalars are strings such as `"3/7"` or `"-2"`; plain JSON integers are
//! accepted on input. Floats are rejected.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::projective::{PLine, PPoint};
use crate::quadric3::QuadricConstraint;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string()),
        other => Err(Error::Parse(format!("expected an exact scalar, got {other}"))),
    }
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

pub fn vector_from_json(v: &Value) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coordinate array, got {v}")))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

pub fn vector_to_json<P: AsRef<[Scalar]>>(p: &P) -> Value {
    Value::Array(p.as_ref().iter().map(scalar_to_json).collect())
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    let inner = match v {
        Value::Object(m) => m.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))?,
        other => other,
    };
    inner.as_array().ok_or_else(|| Error::Parse(format!("expected an array of {key}")))
}

/// Raw coordinate vectors from a bare array or `{"points": [...]}`.
pub fn raw_points_from_json(v: &Value) -> Result<Vec<Vec<Scalar>>> {
    let pts: Vec<Vec<Scalar>> = array(v, "points")?.iter().map(vector_from_json).collect::<Result<_>>()?;
    if let Some(first) = pts.first() {
        if pts.iter().any(|p| p.len() != first.len()) {
            return Err(Error::Dimension("points have different lengths".into()));
        }
    }
    Ok(pts)
}

pub fn points_from_json(v: &Value) -> Result<Vec<PPoint>> {
    raw_points_from_json(v)?.into_iter().map(PPoint::new).collect()
}

pub fn points_to_json<P: AsRef<[Scalar]>>(points: &[P]) -> Value {
    json!({ "points": points.iter().map(vector_to_json).collect::<Vec<_>>() })
}

/// A line is a pair of coordinate arrays.
pub fn line_from_json(v: &Value) -> Result<PLine> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => {
            let (a, b) = (vector_from_json(a)?, vector_from_json(b)?);
            if a.len() != b.len() {
                return Err(Error::Dimension("line endpoints have different lengths".into()));
            }
            PLine::new(PPoint::new(a)?, PPoint::new(b)?)
        }
        _ => Err(Error::Parse(format!("a line is a pair of points, got {v}"))),
    }
}

pub fn line_to_json(l: &PLine) -> Value {
    json!([vector_to_json(l.a()), vector_to_json(l.b())])
}

/// Lines from a bare array or `{"lines": [...]}`.
pub fn lines_from_json(v: &Value) -> Result<Vec<PLine>> {
    array(v, "lines")?.iter().map(line_from_json).collect()
}

pub fn lines_to_json(lines: &[PLine]) -> Value {
    json!({ "lines": lines.iter().map(line_to_json).collect::<Vec<_>>() })
}

/// `{"point": p}`, `{"line": [a, b]}` or `{"curve_points": [p, ...]}`.
pub fn constraint_from_json(v: &Value) -> Result<QuadricConstraint> {
    let obj = v.as_object().filter(|m| m.len() == 1).ok_or_else(|| {
        Error::Parse(format!("a constraint is an object with one of point, line, curve_points; got {v}"))
    })?;
    let (key, body) = obj.iter().next().expect("one entry");
    match key.as_str() {
        "point" => Ok(QuadricConstraint::Point(PPoint::new(vector_from_json(body)?)?)),
        "line" => Ok(QuadricConstraint::Line(line_from_json(body)?)),
        "curve_points" => Ok(QuadricConstraint::CurvePoints(points_from_json(body)?)),
        other => Err(Error::Parse(format!("unknown constraint kind {other:?}"))),
    }
}

pub fn constraint_to_json(c: &QuadricConstraint) -> Value {
    match c {
        QuadricConstraint::Point(p) => json!({ "point": vector_to_json(p) }),
        QuadricConstraint::Line(l) => json!({ "line": line_to_json(l) }),
        QuadricConstraint::CurvePoints(ps) => json!({ "curve_points": ps.iter().map(vector_to_json).collect::<Vec<_>>() }),
    }
}

/// Constraints from a bare array or `{"constraints": [...]}`.
pub fn constraints_from_json(v: &Value) -> Result<Vec<QuadricConstraint>> {
    array(v, "constraints")?.iter().map(constraint_from_json).collect()
}

pub fn constraints_to_json(cs: &[QuadricConstraint]) -> Value {
    json!({ "constraints": cs.iter().map(constraint_to_json).collect::<Vec<_>>() })
}
