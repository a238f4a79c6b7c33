//! Canonical JSON forms. Entries are strings so that exact values survive.

use serde_json::{json, Map, Value};

use crate::error::{AlgebraError, Result};
use crate::matpoly::MatPoly;
use crate::matrix::{Matrix, Shape};
use crate::scalar::{render_rational, Domain};
use crate::supermatrix::{PartitionType, SuperMatrix};

fn bad(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line: 1, col: 1, msg: msg.into() }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row_values(i).iter().map(|v| Value::String(render_rational(v))).collect()))
        .collect();
    json!({
        "domain": m.domain().to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn super_to_json(s: &SuperMatrix) -> Value {
    let mut v = matrix_to_json(s.base());
    add_cuts(&mut v, s.ptype());
    v
}

fn add_cuts(v: &mut Value, p: &PartitionType) {
    let obj = v.as_object_mut().expect("object");
    obj.insert("row_cuts".into(), json!(p.row_cuts().iter().collect::<Vec<_>>()));
    obj.insert("col_cuts".into(), json!(p.col_cuts().iter().collect::<Vec<_>>()));
}

pub fn poly_to_json(p: &MatPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(&k, m)| {
            let mut coeff = matrix_to_json(m);
            if let Some(pt) = p.ptype() {
                add_cuts(&mut coeff, pt);
            }
            json!({ "deg": k, "coeff": coeff })
        })
        .collect();
    let mut v = json!({
        "shape": { "rows": p.shape().rows, "cols": p.shape().cols },
        "domain": p.domain().to_string(),
        "terms": terms,
    });
    if let Some(pt) = p.ptype() {
        add_cuts(&mut v, pt);
    }
    v
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(format!("field `{key}` must be a nonnegative integer")))
}

fn domain_field(obj: &Map<String, Value>) -> Result<Domain> {
    field(obj, "domain")?.as_str().ok_or_else(|| bad("field `domain` must be a string"))?.parse()
}

fn cuts(obj: &Map<String, Value>, key: &str) -> Result<Vec<usize>> {
    match obj.get(key) {
        None => Ok(vec![]),
        Some(Value::Array(a)) => a
            .iter()
            .map(|c| c.as_u64().map(|n| n as usize).ok_or_else(|| bad(format!("`{key}` must hold integers"))))
            .collect(),
        Some(_) => Err(bad(format!("`{key}` must be an array"))),
    }
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let obj = v.as_object().ok_or_else(|| bad("matrix must be a JSON object"))?;
    let domain = domain_field(obj)?;
    let shape = Shape::new(usize_field(obj, "rows")?, usize_field(obj, "cols")?)?;
    let rows = field(obj, "entries")?.as_array().ok_or_else(|| bad("`entries` must be an array of rows"))?;
    if rows.len() != shape.rows {
        return Err(bad(format!("expected {} rows, found {}", shape.rows, rows.len())));
    }
    let mut values = Vec::with_capacity(shape.size());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad(format!("row {} must be an array", i + 1)))?;
        if row.len() != shape.cols {
            return Err(bad(format!("row {} has {} entries, expected {}", i + 1, row.len(), shape.cols)));
        }
        for cell in row {
            let text = match cell {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(bad("entries must be strings or integers")),
            };
            values.push(domain.parse_value(&text)?);
        }
    }
    Matrix::new(shape, domain, values)
}

pub fn super_from_json(v: &Value) -> Result<SuperMatrix> {
    let base = matrix_from_json(v)?;
    let obj = v.as_object().expect("checked above");
    SuperMatrix::with_cuts(base, cuts(obj, "row_cuts")?, cuts(obj, "col_cuts")?)
}

pub fn poly_from_json(v: &Value) -> Result<MatPoly> {
    let obj = v.as_object().ok_or_else(|| bad("polynomial must be a JSON object"))?;
    let domain = domain_field(obj)?;
    let sh = field(obj, "shape")?.as_object().ok_or_else(|| bad("`shape` must be an object"))?;
    let shape = Shape::new(usize_field(sh, "rows")?, usize_field(sh, "cols")?)?;
    let ptype = PartitionType::new(shape, cuts(obj, "row_cuts")?, cuts(obj, "col_cuts")?)?;
    let terms = field(obj, "terms")?.as_array().ok_or_else(|| bad("`terms` must be an array"))?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        let t = t.as_object().ok_or_else(|| bad("each term must be an object"))?;
        let deg = usize_field(t, "deg")?;
        let coeff = super_from_json(field(t, "coeff")?)?;
        if coeff.ptype().is_trivial() || coeff.ptype() == &ptype {
            pairs.push((deg, coeff.into_base()));
        } else {
            return Err(AlgebraError::TypeMismatch(format!("{} vs {}", ptype, coeff.ptype())));
        }
    }
    MatPoly::from_terms(shape, domain, Some(ptype), pairs)
}

/// Compact serialization with sorted keys.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_poly, parse_super};

    #[test]
    fn matrix_shape_of_json() {
        let m = Matrix::from_ints(Domain::Rat, &[&[3, 0], &[1, 2]]).unwrap();
        let s = to_canonical_string(&matrix_to_json(&m));
        assert_eq!(s, r#"{"cols":2,"domain":"Q","entries":[["3","0"],["1","2"]],"rows":2}"#);
        assert_eq!(matrix_from_json(&serde_json::from_str(&s).unwrap()).unwrap(), m);
    }

    #[test]
    fn super_round_trip() {
        let s = parse_super("[1 2 | 3;--;4 5 | 6]", Domain::Mod(7)).unwrap();
        let v = super_to_json(&s);
        assert_eq!(v["row_cuts"], json!([1]));
        assert_eq!(v["col_cuts"], json!([2]));
        assert_eq!(super_from_json(&v).unwrap(), s);
    }

    #[test]
    fn poly_round_trip() {
        let p = parse_poly("[1/2 | 2] + [3 | -4] * x^5", Domain::Rat).unwrap();
        let v = poly_to_json(&p);
        assert_eq!(v["terms"][1]["deg"], json!(5));
        assert_eq!(poly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn rejects_bad_objects() {
        assert!(matrix_from_json(&json!({"domain":"Q","rows":1,"cols":2,"entries":[["1"]]})).is_err());
        assert!(matrix_from_json(&json!({"domain":"W","rows":1,"cols":1,"entries":[["1"]]})).is_err());
        assert!(matrix_from_json(&json!([1, 2])).is_err());
    }
}
