//! JSON encodings shared by the CLI and fixtures. Integers travel as
//! decimal strings so values never hit the float range of JSON numbers;
//! polynomials are {"var": ..., "coeffs": [...]} with coefficients encoded
//! per field (strings over prime fields and Q, string arrays over
//! extensions).

use super::ext::ExtField;
use super::field::Field;
use super::fp::Fp;
use super::poly::Poly;
use super::rat::Rationals;
use super::ratfun::RatFun;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use std::str::FromStr;

pub fn bigint_to_string(x: &BigInt) -> String {
    x.to_string()
}

pub fn bigint_from_value(v: &Value) -> Result<BigInt> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse("expected integer as decimal string".into()))?;
    BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer literal {s:?}")))
}

pub fn rational_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let parse_int =
        |t: &str| BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad rational {s:?}")));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
    }
}

/// Field-specific element codec used by every nested encoder.
pub trait FieldCodec: Field {
    fn elem_to_json(&self, e: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

impl FieldCodec for Fp {
    fn elem_to_json(&self, e: &u64) -> Value {
        Value::String(e.to_string())
    }
    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        let x = bigint_from_value(v)?;
        Ok(self.reduce_bigint(&x))
    }
}

impl FieldCodec for Rationals {
    fn elem_to_json(&self, e: &BigRational) -> Value {
        Value::String(rational_to_string(e))
    }
    fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Parse("expected rational as string".into()))?;
        rational_from_str(s)
    }
}

impl<F: FieldCodec> FieldCodec for ExtField<F> {
    fn elem_to_json(&self, e: &Poly<F>) -> Value {
        Value::Array(self.coords(e).iter().map(|c| self.base.elem_to_json(c)).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Result<Poly<F>> {
        // accept either a plain base element or a coordinate array
        if let Value::Array(items) = v {
            let coeffs: Result<Vec<_>> =
                items.iter().map(|c| self.base.elem_from_json(c)).collect();
            Ok(self.reduce(&Poly::new(self.base.clone(), coeffs?)))
        } else {
            Ok(Poly::constant(self.base.clone(), self.base.elem_from_json(v)?))
        }
    }
}

pub fn poly_to_json<F: FieldCodec>(p: &Poly<F>, var: &str) -> Value {
    json!({
        "var": var,
        "coeffs": p.coeffs().iter().map(|c| p.field.elem_to_json(c)).collect::<Vec<_>>(),
    })
}

pub fn poly_from_json<F: FieldCodec>(field: &F, v: &Value) -> Result<Poly<F>> {
    let coeffs = v
        .get("coeffs")
        .and_then(|c| c.as_array())
        .ok_or_else(|| Error::Parse("polynomial needs a coeffs array".into()))?;
    let parsed: Result<Vec<_>> = coeffs.iter().map(|c| field.elem_from_json(c)).collect();
    Ok(Poly::new(field.clone(), parsed?))
}

pub fn ratfun_to_json<F: FieldCodec>(r: &RatFun<F>, var: &str) -> Value {
    json!({
        "num": poly_to_json(&r.num, var),
        "den": poly_to_json(&r.den, var),
    })
}

pub fn ratfun_from_json<F: FieldCodec>(field: &F, v: &Value) -> Result<RatFun<F>> {
    // accept a bare polynomial object as well
    if v.get("num").is_none() {
        return Ok(RatFun::from_poly(poly_from_json(field, v)?));
    }
    let num = poly_from_json(field, v.get("num").unwrap())?;
    let den = poly_from_json(
        field,
        v.get("den")
            .ok_or_else(|| Error::Parse("rational function needs den".into()))?,
    )?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(RatFun::new(num, den))
}

pub fn zmat_to_json(m: &[Vec<BigInt>]) -> Value {
    Value::Array(
        m.iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn zmat_from_json(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let cells = r
            .as_array()
            .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        let row: Result<Vec<_>> = cells.iter().map(bigint_from_value).collect();
        out.push(row?);
    }
    let w = out.first().map(|r| r.len()).unwrap_or(0);
    if out.iter().any(|r| r.len() != w) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    Ok(out)
}

pub fn zvec_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn zvec_from_json(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected integer vector".into()))?
        .iter()
        .map(bigint_from_value)
        .collect()
}

/// Runtime description of a coefficient field. Dispatch happens in the CLI;
/// library code stays generic over the concrete field type.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldSpec {
    Prime(u64),
    FiniteExtension { p: u64, modulus: Vec<u64> },
    Rationals,
    NumberField { modulus: Vec<BigRational> },
}

impl FieldSpec {
    pub fn to_json(&self) -> Value {
        match self {
            FieldSpec::Prime(p) => json!({"kind": "prime-field", "p": p.to_string()}),
            FieldSpec::FiniteExtension { p, modulus } => {
                let k = Fp::new(*p);
                let m = Poly::new(k.clone(), modulus.clone());
                json!({"kind": "finite-extension", "p": p.to_string(), "modulus": poly_to_json(&m, "w")})
            }
            FieldSpec::Rationals => json!({"kind": "rationals"}),
            FieldSpec::NumberField { modulus } => {
                let m = Poly::new(Rationals, modulus.clone());
                json!({"kind": "number-field", "modulus": poly_to_json(&m, "w")})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<FieldSpec> {
        let kind = v
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| Error::Parse("field spec needs a kind".into()))?;
        match kind {
            "prime-field" => {
                let p = bigint_from_value(
                    v.get("p").ok_or_else(|| Error::Parse("prime-field needs p".into()))?,
                )?;
                let p = num_traits::ToPrimitive::to_u64(&p)
                    .ok_or_else(|| Error::Parse("p out of range".into()))?;
                Ok(FieldSpec::Prime(p))
            }
            "finite-extension" => {
                let p = bigint_from_value(
                    v.get("p").ok_or_else(|| Error::Parse("extension needs p".into()))?,
                )?;
                let p = num_traits::ToPrimitive::to_u64(&p)
                    .ok_or_else(|| Error::Parse("p out of range".into()))?;
                let k = Fp::new(p);
                let m = poly_from_json(
                    &k,
                    v.get("modulus")
                        .ok_or_else(|| Error::Parse("extension needs modulus".into()))?,
                )?;
                Ok(FieldSpec::FiniteExtension { p, modulus: m.coeffs().to_vec() })
            }
            "rationals" => Ok(FieldSpec::Rationals),
            "number-field" => {
                let m = poly_from_json(
                    &Rationals,
                    v.get("modulus")
                        .ok_or_else(|| Error::Parse("number-field needs modulus".into()))?,
                )?;
                Ok(FieldSpec::NumberField { modulus: m.coeffs().to_vec() })
            }
            other => Err(Error::Parse(format!("unknown field kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_roundtrip_fp() {
        let k = Fp::new(29);
        let p = Poly::from_i64(k.clone(), &[1, 0, 5, 28]);
        let v = poly_to_json(&p, "t");
        assert_eq!(poly_from_json(&k, &v).unwrap(), p);
    }

    #[test]
    fn rational_strings() {
        let x = BigRational::new(BigInt::from(2669), BigInt::from(2016));
        assert_eq!(rational_to_string(&x), "2669/2016");
        assert_eq!(rational_from_str("2669/2016").unwrap(), x);
        assert_eq!(rational_from_str("-7").unwrap(), BigRational::from_integer(BigInt::from(-7)));
    }

    #[test]
    fn field_spec_roundtrip() {
        let specs = vec![
            FieldSpec::Prime(29),
            FieldSpec::Rationals,
            FieldSpec::FiniteExtension { p: 29, modulus: vec![2, 1, 1] },
        ];
        for s in specs {
            assert_eq!(FieldSpec::from_json(&s.to_json()).unwrap(), s);
        }
    }
}
