//! JSON encodings. Rationals are strings such as `"-3/2"`; integers are
//! also accepted as JSON numbers on input. Polynomials are coefficient
//! arrays, lowest degree first. Multisets are flat sorted arrays with
//! repetition, and `[value, count]` pairs are accepted on input.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, Poly, Rational};
use crate::rankn::{ExpModule, PolyMatrix};
use crate::rankone::RankOneModule;
use crate::rootorder::RootMultiset;

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(Error::Invalid(format!("{n} is not an exact rational"))),
        },
        other => Err(Error::Invalid(format!("expected a rational, got {other}"))),
    }
}

pub fn poly_to_json(f: &Poly) -> Value {
    Value::Array(f.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected a coefficient array".into()))?;
    Ok(Poly::new(
        items
            .iter()
            .map(rational_from_json)
            .collect::<Result<_>>()?,
    ))
}

pub fn multiset_to_json(r: &RootMultiset) -> Value {
    Value::Array(r.values().map(rational_to_json).collect())
}

pub fn multiset_from_json(v: &Value) -> Result<RootMultiset> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected an array of roots".into()))?;
    let mut out = RootMultiset::new();
    for item in items {
        match item {
            Value::Array(pair) if pair.len() == 2 => {
                let count = pair[1]
                    .as_u64()
                    .ok_or_else(|| Error::Invalid("multiplicity must be a count".into()))?;
                out.insert(rational_from_json(&pair[0])?, count as usize);
            }
            _ => out.insert(rational_from_json(item)?, 1),
        }
    }
    Ok(out)
}

pub fn matrix_to_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(poly_to_json).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value) -> Result<PolyMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected a matrix".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Invalid("expected a matrix row".into()))?
                .iter()
                .map(poly_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::new(rows)
}

/// `{"roots", "leading", "C", "X", "xi"}`.
pub fn module_to_json(m: &RankOneModule) -> Value {
    json!({
        "roots": multiset_to_json(m.roots()),
        "leading": rational_to_json(m.leading()),
        "C": rational_to_json(m.c()),
        "X": multiset_to_json(m.x()),
        "xi": rational_to_json(m.twist_param()),
    })
}

pub fn module_from_json(v: &Value) -> Result<RankOneModule> {
    let obj = object(v)?;
    let m = RankOneModule::build(
        &multiset_from_json(field(obj, "roots")?)?,
        &rational_from_json(field(obj, "leading")?)?,
        &optional_rational(obj, "C")?,
        &multiset_from_json(obj.get("X").unwrap_or(&json!([])))?,
    )?;
    match obj.get("xi") {
        Some(xi) => m.twist(&rational_from_json(xi)?),
        None => Ok(m),
    }
}

/// `{"p", "roots", "leading", "C", "lambda", "X", "dual"}`.
pub fn exp_to_json(m: &ExpModule) -> Value {
    json!({
        "p": poly_to_json(m.p_weyl()),
        "roots": multiset_to_json(m.roots()),
        "leading": rational_to_json(m.leading()),
        "C": rational_to_json(m.c()),
        "lambda": rational_to_json(m.lambda()),
        "X": multiset_to_json(m.xsub()),
        "dual": m.is_dual(),
    })
}

pub fn exp_from_json(v: &Value) -> Result<ExpModule> {
    let obj = object(v)?;
    ExpModule::build(
        &poly_from_json(field(obj, "p")?)?,
        &multiset_from_json(field(obj, "roots")?)?,
        &rational_from_json(field(obj, "leading")?)?,
        &optional_rational(obj, "C")?,
        &rational_from_json(field(obj, "lambda")?)?,
        &multiset_from_json(obj.get("X").unwrap_or(&json!([])))?,
        obj.get("dual").and_then(Value::as_bool).unwrap_or(false),
    )
}

pub fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Invalid("expected a JSON object".into()))
}

pub fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Invalid(format!("missing field {key:?}")))
}

fn optional_rational(obj: &Map<String, Value>, key: &str) -> Result<Rational> {
    obj.get(key)
        .map(rational_from_json)
        .unwrap_or_else(|| Ok(Rational::from_integer(0.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{frac, int};

    #[test]
    fn rationals_round_trip() {
        for r in [int(0), int(-7), frac(3, 4), frac(-5, 2)] {
            assert_eq!(rational_from_json(&rational_to_json(&r)).unwrap(), r);
        }
        assert_eq!(rational_from_json(&json!(3)).unwrap(), int(3));
        assert!(rational_from_json(&json!(0.5)).is_err());
        assert!(rational_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn multisets_accept_pairs() {
        let r = multiset_from_json(&json!([0, ["5/2", 2], "-1"])).unwrap();
        assert_eq!(
            r,
            RootMultiset::from_values(vec![int(0), frac(5, 2), frac(5, 2), int(-1)])
        );
        assert_eq!(multiset_from_json(&multiset_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn modules_round_trip() {
        let v = json!({"roots": [0, 2, 5, 7], "leading": "1", "C": "0", "X": [2, 7], "xi": "-1/2"});
        let m = module_from_json(&v).unwrap();
        assert_eq!(m.twist_param(), &frac(-1, 2));
        assert_eq!(module_from_json(&module_to_json(&m)).unwrap(), m);

        let v = json!({"p": [0, 1], "roots": [0, -1], "leading": "-1/2", "lambda": 0, "X": [-1], "dual": true});
        let e = exp_from_json(&v).unwrap();
        assert!(e.is_dual());
        assert_eq!(exp_from_json(&exp_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn matrices_round_trip() {
        let m = PolyMatrix::new(vec![
            vec![Poly::from_ints(&[1, 2]), Poly::zero()],
            vec![Poly::constant(frac(1, 3)), Poly::var()],
        ])
        .unwrap();
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }
}
