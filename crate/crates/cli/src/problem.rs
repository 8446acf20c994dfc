//! Problem files: JSON in, validated model objects out, and back.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use sixcube_core::prelude::*;

use crate::CliError;

/// Everything a problem file describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub family: EquationFamily,
    pub params: Parameterization,
    pub generators: Option<Vec<CurvePoint>>,
    pub nmax: u32,
}

fn malformed(field: impl Into<String>, msg: impl std::fmt::Display) -> CliError {
    CliError::Malformed(format!("{}: {msg}", field.into()))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, CliError> {
    obj.get(name).ok_or_else(|| malformed(name, "missing field"))
}

fn array<'a>(value: &'a Value, name: &str) -> Result<&'a Vec<Value>, CliError> {
    value.as_array().ok_or_else(|| malformed(name, "expected an array"))
}

fn integer(value: &Value, name: &str) -> Result<BigInt, CliError> {
    let parsed = match value {
        Value::Number(n) => n.as_i64().map(BigInt::from).or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    };
    parsed.ok_or_else(|| malformed(name, format!("expected an integer, found {value}")))
}

fn rational(value: &Value, name: &str) -> Result<Rational, CliError> {
    let parsed = match value {
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .or_else(|| n.as_u64().map(|u| Rational::from_integer(u.into()))),
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| malformed(name, format!("expected an integer or a \"p/q\" string, found {value}")))
}

fn rationals(obj: &Map<String, Value>, name: &str, len: usize, len_name: &str) -> Result<Vec<Rational>, CliError> {
    let items = array(field(obj, name)?, name)?;
    if items.len() != len {
        return Err(malformed(
            name,
            format!("expected {len} entries ({len_name}), found {}", items.len()),
        ));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, v)| rational(v, &format!("{name}[{i}]")))
        .collect()
}

fn coefficients(obj: &Map<String, Value>, name: &str, len: usize, len_name: &str) -> Result<Vec<BigInt>, CliError> {
    let items = array(field(obj, name)?, name)?;
    if items.len() != len {
        return Err(malformed(
            name,
            format!("expected {len} entries ({len_name}), found {}", items.len()),
        ));
    }
    let mut out = Vec::with_capacity(len);
    for (i, v) in items.iter().enumerate() {
        let name = format!("{name}[{i}]");
        let c = integer(v, &name)?;
        if c.is_zero() {
            return Err(malformed(name, "coefficient must be nonzero"));
        }
        out.push(c);
    }
    Ok(out)
}

fn count(obj: &Map<String, Value>, name: &str) -> Result<usize, CliError> {
    let value = field(obj, name)?;
    match value.as_u64().and_then(|n| usize::try_from(n).ok()) {
        Some(n) if n > 0 => Ok(n),
        _ => Err(malformed(name, format!("expected a positive integer, found {value}"))),
    }
}

fn point(value: &Value, name: &str) -> Result<CurvePoint, CliError> {
    match value {
        Value::String(s) if s == "infinity" => Ok(CurvePoint::Infinity),
        Value::Array(xy) if xy.len() == 2 => Ok(CurvePoint::Affine {
            x: rational(&xy[0], &format!("{name}[0]"))?,
            y: rational(&xy[1], &format!("{name}[1]"))?,
        }),
        _ => Err(malformed(name, "expected [x, y] or \"infinity\"")),
    }
}

impl Problem {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let root: Value = serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("invalid JSON: {e}")))?;
        let obj = root
            .as_object()
            .ok_or_else(|| CliError::Malformed("top level must be a JSON object".into()))?;

        let n = count(obj, "n")?;
        let m = count(obj, "m")?;
        let a = coefficients(obj, "a", n, "n")?;
        let b = coefficients(obj, "b", m, "m")?;
        let sign = match field(obj, "sign")?.as_str() {
            Some("plus") => Sign::Plus,
            Some("minus") => Sign::Minus,
            _ => return Err(malformed("sign", "expected \"plus\" or \"minus\"")),
        };
        let cubic_u = rationals(obj, "B", m, "m")?;
        let cubic_v = rationals(obj, "C", m, "m")?;
        let sextic_u = rationals(obj, "D", n, "n")?;
        let h = rational(field(obj, "h")?, "h")?;
        if h.is_zero() {
            return Err(malformed("h", "must be nonzero"));
        }

        let generators = match obj.get("generators") {
            None | Some(Value::Null) => None,
            Some(v) => Some(
                array(v, "generators")?
                    .iter()
                    .enumerate()
                    .map(|(i, p)| point(p, &format!("generators[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let nmax = match obj.get("nmax") {
            None | Some(Value::Null) => 4,
            Some(v) => v
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| malformed("nmax", format!("expected a non-negative integer, found {v}")))?,
        };

        let family = EquationFamily::new(a, b, sign).map_err(|e| CliError::Malformed(e.to_string()))?;
        let params = Parameterization::new(&family, cubic_u, cubic_v, sextic_u, h)?;
        Ok(Problem {
            family,
            params,
            generators,
            nmax,
        })
    }

    pub fn to_json(&self) -> String {
        let integer = |c: &BigInt| match c.to_i64() {
            Some(v) => json!(v),
            None => json!(c.to_string()),
        };
        let rationals = |rs: &[Rational]| rs.iter().map(|r| json!(r.to_string())).collect::<Vec<_>>();
        let mut obj = json!({
            "n": self.family.n(),
            "m": self.family.m(),
            "a": self.family.a().iter().map(integer).collect::<Vec<_>>(),
            "b": self.family.b().iter().map(integer).collect::<Vec<_>>(),
            "sign": self.family.sign().to_string(),
            "B": rationals(self.params.cubic_u()),
            "C": rationals(self.params.cubic_v()),
            "D": rationals(self.params.sextic_u()),
            "h": self.params.sextic_const().to_string(),
            "nmax": self.nmax,
        });
        if let Some(gens) = &self.generators {
            let points: Vec<Value> = gens
                .iter()
                .map(|p| match p {
                    CurvePoint::Infinity => json!("infinity"),
                    CurvePoint::Affine { x, y } => json!([x.to_string(), y.to_string()]),
                })
                .collect();
            obj["generators"] = Value::Array(points);
        }
        serde_json::to_string_pretty(&obj).expect("a JSON value always serializes")
    }
}
