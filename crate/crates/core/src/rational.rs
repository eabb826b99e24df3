//! Arbitrary-precision rationals and their JSON encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `n / 2`, the ubiquitous central shift.
pub fn half(n: u32) -> Rational {
    frac(n as i64, 2)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Integers become bare JSON numbers when they fit in an `i64`; everything
/// else is a `"p/q"` (or `"p"`) string so exactness survives the round trip.
pub fn to_json(q: &Rational) -> Value {
    if q.is_integer() {
        if let Some(v) = q.numer().to_i64() {
            return Value::from(v);
        }
        return Value::from(q.numer().to_string());
    }
    Value::from(format!("{}/{}", q.numer(), q.denom()))
}

pub fn to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn from_json(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(int),
        Value::String(s) => parse(s),
        _ => None,
    }
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn vec_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(to_json).collect())
}
