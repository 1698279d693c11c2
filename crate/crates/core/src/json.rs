//! JSON encodings. Every rational is written as a decimal string `"p"` or `"p/q"`;
//! on input, JSON integers are accepted as well.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::chow::{wedge_indices, LinFormMatrix, PlueckerLinearMatrix};
use crate::error::{Error, Result};
use crate::field::arith::{format_rational, parse_rational};
use crate::field::parse::parse_binary_form;
use crate::field::{BinaryForm, Matrix, Rational};
use crate::gw::{GWClass, GWInvariants};
use crate::writhe::{LocalWrithe, RationalCurve, WritheResult};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) if n.is_u64() => Ok(Rational::from_integer(n.as_u64().unwrap().into())),
        _ => Err(perr(format!("expected a rational, got {v}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{what} must be an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| perr(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|n| n as usize).ok_or_else(|| perr(format!("{key:?} must be a nonnegative integer")))
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vector_from_json(v: &Value) -> Result<Vec<Rational>> {
    array(v, "vector")?.iter().map(rational_from_json).collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

/// A matrix is an array of rows, or an object with a `"matrix"` field.
pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let v = v.get("matrix").unwrap_or(v);
    let rows: Vec<Vec<Rational>> = array(v, "matrix")?.iter().map(vector_from_json).collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::ShapeMismatch("matrix rows must be nonempty and of equal length".into()));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn invariants_to_json(inv: &GWInvariants) -> Value {
    let hasse: Map<String, Value> = inv.hasse.iter().map(|(p, s)| (p.to_string(), json!(s))).collect();
    json!({
        "rank": inv.rank,
        "signature": inv.signature,
        "disc": inv.disc.to_string(),
        "hasse": hasse,
    })
}

pub fn gw_to_json(g: &GWClass) -> Value {
    let mut out = invariants_to_json(&g.invariants());
    out["diag"] = vector_to_json(g.diag());
    out["display"] = Value::String(g.to_string());
    out
}

/// Reads the `"diag"` field; the derived invariants are recomputed, not trusted.
pub fn gw_from_json(v: &Value) -> Result<GWClass> {
    GWClass::new(vector_from_json(field(v, "diag")?)?)
}

/// Forms are strings in `r, s` (e.g. `"r^3*s - 2*s^4"`) or coefficient arrays on `rⁿ, rⁿ⁻¹s, …, sⁿ`.
pub fn curve_from_json(v: &Value) -> Result<RationalCurve> {
    let forms = array(field(v, "forms")?, "forms")?;
    if forms.len() != 4 {
        return Err(perr("a curve needs exactly four forms"));
    }
    let degree = match v.get("degree") {
        Some(d) => d.as_u64().ok_or_else(|| perr("\"degree\" must be a positive integer"))? as usize,
        None => match &forms[0] {
            Value::Array(a) if !a.is_empty() => a.len() - 1,
            _ => return Err(perr("\"degree\" is required when forms are strings")),
        },
    };
    let parsed: Vec<BinaryForm> = forms
        .iter()
        .map(|f| match f {
            Value::String(s) => parse_binary_form(s, degree),
            Value::Array(_) => BinaryForm::new(degree, vector_from_json(f)?),
            _ => Err(perr("a form is a string or a coefficient array")),
        })
        .collect::<Result<_>>()?;
    RationalCurve::new(parsed.try_into().expect("four forms"))
}

pub fn curve_to_json(c: &RationalCurve) -> Value {
    json!({
        "degree": c.degree(),
        "forms": c.forms().iter().map(|f| Value::String(f.to_string())).collect::<Vec<_>>(),
    })
}

pub fn local_to_json(l: &LocalWrithe) -> Value {
    let s = &l.secant;
    json!({
        "field": s.field.to_string(),
        "min_poly": s.field.min_poly().fmt_in("z"),
        "field_degree": s.field.degree(),
        "at_infinity": s.at_infinity,
        "e1": s.e1.to_string(),
        "e2": s.e2.to_string(),
        "frame_det": l.frame_det.to_string(),
        "det": l.det.to_string(),
        "class": gw_to_json(&l.class),
    })
}

pub fn writhe_to_json(w: &WritheResult) -> Value {
    let mut out = gw_to_json(&w.gw);
    out["det"] = rational_to_json(&w.det);
    out["locals"] = Value::Array(w.locals.iter().map(local_to_json).collect());
    out
}

/// `{"rows", "cols", "nvars", "coeff"}` with `coeff[l]` the matrix multiplying `x_l`.
pub fn linform_to_json(m: &LinFormMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "nvars": m.nvars(),
        "coeff": (0..m.nvars()).map(|l| matrix_to_json(m.coeff(l))).collect::<Vec<_>>(),
    })
}

pub fn linform_from_json(v: &Value) -> Result<LinFormMatrix> {
    let rows = usize_field(v, "rows")?;
    let cols = usize_field(v, "cols")?;
    let coeff: Vec<Matrix> = array(field(v, "coeff")?, "coeff")?.iter().map(matrix_from_json).collect::<Result<_>>()?;
    if let Some(n) = v.get("nvars") {
        if n.as_u64() != Some(coeff.len() as u64) {
            return Err(Error::ShapeMismatch("\"nvars\" disagrees with the number of coefficient matrices".into()));
        }
    }
    LinFormMatrix::new(rows, cols, coeff)
}

/// A resolution file: `{"matrices": [LinFormMatrix, …]}` or a bare array.
pub fn resolution_from_json(v: &Value) -> Result<Vec<LinFormMatrix>> {
    let v = v.get("matrices").unwrap_or(v);
    array(v, "matrices")?.iter().map(linform_from_json).collect()
}

fn wedge_key(k: &[usize]) -> String {
    k.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Entries are written as linear forms in `x_J` (e.g. `"x01 - x12"`) and
/// the full coefficient table is keyed by `"j1,j2,…"`.
pub fn pluecker_to_json(l: &PlueckerLinearMatrix) -> Value {
    let d = l.dim();
    let entries: Vec<Vec<String>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let terms = l.entry(i, j);
                    if terms.is_empty() {
                        return "0".to_string();
                    }
                    let mut s = String::new();
                    for (k, c) in terms {
                        let name: String = format!("x{}", k.iter().map(usize::to_string).collect::<String>());
                        let neg = c < Rational::default();
                        let a = if neg { -c } else { c };
                        if s.is_empty() {
                            if neg {
                                s.push('-');
                            }
                        } else {
                            s.push_str(if neg { " - " } else { " + " });
                        }
                        if a == Rational::from_integer(1.into()) {
                            s.push_str(&name);
                        } else {
                            s.push_str(&format!("{a}*{name}"));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let coeff: Map<String, Value> = wedge_indices(l.nvars(), l.codim())
        .iter()
        .map(|k| (wedge_key(k), matrix_to_json(l.coeff(k).expect("full table"))))
        .collect();
    json!({
        "dim": d,
        "codim": l.codim(),
        "nvars": l.nvars(),
        "entries": entries,
        "coeff": coeff,
    })
}

pub fn pluecker_from_json(v: &Value) -> Result<PlueckerLinearMatrix> {
    let dim = usize_field(v, "dim")?;
    let c = usize_field(v, "codim")?;
    let nvars = usize_field(v, "nvars")?;
    let obj = field(v, "coeff")?.as_object().ok_or_else(|| perr("\"coeff\" must be an object"))?;
    let mut coeff = BTreeMap::new();
    for (k, m) in obj {
        let key: Vec<usize> = k
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| perr(format!("bad wedge index {k:?}"))))
            .collect::<Result<_>>()?;
        coeff.insert(key, matrix_from_json(m)?);
    }
    PlueckerLinearMatrix::new(dim, c, nvars, coeff)
}

/// `{"error": kind, "message": text}`.
pub fn error_to_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string() })
}
