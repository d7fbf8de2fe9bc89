//! JSON literal formats shared by files and the command line.
//!
//! * Rational: `"3"`, `"-7/2"` (bare JSON integers are accepted on input).
//! * Univariate polynomial: array of rationals in ascending degree,
//!   e.g. `["0","-1/2","1"]` for `x² − x/2`.
//! * Bivariate polynomial: object `{"i,j": "coeff"}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Rational, UniPoly};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Literal(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Literal(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Literal(format!("expected rational string, got {other}"))),
    }
}

pub fn poly_from_value(v: &Value) -> Result<UniPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Literal(format!("expected polynomial array, got {v}")))?;
    Ok(UniPoly::new(
        items.iter().map(rational_from_value).collect::<Result<_>>()?,
    ))
}

pub fn parse_poly(s: &str) -> Result<UniPoly> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Literal(format!("invalid JSON: {e}")))?;
    poly_from_value(&v)
}

/// Canonical literal: trimmed, one string per coefficient.
pub fn poly_literal(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn poly_to_value(p: &UniPoly) -> Value {
    Value::Array(poly_literal(p).into_iter().map(Value::String).collect())
}

/// `serialize_with` adapter writing a rational as its literal string.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn serialize_rational_opt<S: serde::Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

pub fn serialize_poly<S: serde::Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    poly_literal(p).serialize(s)
}

pub fn bipoly_from_value(v: &Value) -> Result<BiPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Literal(format!("expected bivariate object, got {v}")))?;
    let mut p = BiPoly::zero();
    for (k, c) in obj {
        let (i, j) = k
            .split_once(',')
            .ok_or_else(|| Error::Literal(format!("bad exponent key {k:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Literal(format!("bad exponent key {k:?}")))
        };
        p.add_term((parse(i)?, parse(j)?), rational_from_value(c)?)?;
    }
    Ok(p)
}

pub fn bipoly_to_value(p: &BiPoly) -> Value {
    let mut m = Map::new();
    for (&(i, j), c) in p.terms() {
        m.insert(format!("{i},{j}"), Value::String(format_rational(c)));
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    #[test]
    fn documented_example() {
        let p = parse_poly(r#"["0","-1/2","1"]"#).unwrap();
        assert_eq!(p, UniPoly::new(vec![rat(0, 1), rat(-1, 2), rat(1, 1)]));
        assert_eq!(poly_literal(&p), vec!["0", "-1/2", "1"]);
    }

    #[test]
    fn bare_integers_and_normalisation() {
        let p = parse_poly("[2, \"4/6\", -3]").unwrap();
        assert_eq!(poly_literal(&p), vec!["2", "2/3", "-3"]);
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_poly("[1.5]").is_err());
        assert!(parse_poly("{}").is_err());
    }

    #[test]
    fn bivariate_literal() {
        let v: Value = serde_json::from_str(r#"{"6,0":"1","0,6":"1"}"#).unwrap();
        let p = bipoly_from_value(&v).unwrap();
        assert_eq!(p.coeff(6, 0), rat(1, 1));
        assert_eq!(bipoly_to_value(&p), v);
    }

    proptest! {
        #[test]
        fn literal_round_trip(cs in proptest::collection::vec((-1000i64..1000, 1i64..50), 0..10)) {
            let p = UniPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect());
            let text = serde_json::to_string(&poly_literal(&p)).unwrap();
            prop_assert_eq!(parse_poly(&text).unwrap(), p);
        }
    }
}
