//! Exact values for claim sides.
//!
//! Bound formulas here are rationals or single-radical expressions
//! a + b*sqrt(d) with rational a, b and a non-negative integer radicand.
//! Comparisons of such expressions against rationals (and against each
//! other over the same radicand) reduce to sign tests on rationals, so
//! every verdict is decided exactly; no verdict depends on floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An exact claim-side value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
    /// a + b * sqrt(d), with d >= 0.
    Quad(QuadExpr),
}

impl Value {
    pub fn int(v: i64) -> Value {
        Value::Int(BigInt::from(v))
    }

    pub fn from_u64(v: u64) -> Value {
        Value::Int(BigInt::from(v))
    }

    pub fn rat(r: BigRational) -> Value {
        Value::Rat(r)
    }

    /// sqrt(d) for integer d >= 0, kept exact.
    pub fn sqrt_int(d: BigInt) -> Value {
        assert!(!d.is_negative(), "radicand must be non-negative");
        Value::quad(QuadExpr::sqrt(d))
    }

    /// Quad expression, collapsed to a rational when the radicand is a
    /// perfect square (or the coefficient vanishes).
    pub fn quad(q: QuadExpr) -> Value {
        match q.as_rational() {
            Some(r) => Value::Rat(r),
            None => Value::Quad(q),
        }
    }

    fn as_rational(&self) -> Option<BigRational> {
        match self {
            Value::Int(i) => Some(BigRational::from_integer(i.clone())),
            Value::Rat(r) => Some(r.clone()),
            Value::Quad(q) => q.as_rational(),
        }
    }

    /// Exact comparison. Panics if both sides are irrational over different
    /// radicands; the claim evaluators never produce that shape.
    pub fn cmp_exact(&self, other: &Value) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(a), None) => {
                let Value::Quad(q) = other else { unreachable!() };
                q.cmp_rational(&a).reverse()
            }
            (None, Some(b)) => {
                let Value::Quad(q) = self else { unreachable!() };
                q.cmp_rational(&b)
            }
            (None, None) => {
                let (Value::Quad(a), Value::Quad(b)) = (self, other) else { unreachable!() };
                a.cmp_same_radicand(b)
            }
        }
    }

    /// Decimal rendering for human-readable report columns.
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Int(i) => i.to_f64().unwrap_or(f64::NAN),
            Value::Rat(r) => ratio_to_f64(r),
            Value::Quad(q) => q.to_f64(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Quad(q) => write!(f, "{q}"),
        }
    }
}

/// JSON shape: rationals as `{"num", "den", "decimal"}`, radical expressions
/// as `{"a": {num, den}, "b": {num, den}, "d", "decimal"}`. Integer fields
/// are emitted as JSON numbers when they fit in i128 and as decimal strings
/// beyond that, so exact values survive arbitrarily large intermediates.
impl serde::Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        fn bigint_json(i: &BigInt) -> serde_json_compatible::Num {
            match i.to_i128() {
                Some(v) => serde_json_compatible::Num::Small(v),
                None => serde_json_compatible::Num::Big(i.to_string()),
            }
        }
        match self {
            Value::Int(i) => {
                let mut map = ser.serialize_map(Some(3))?;
                map.serialize_entry("num", &bigint_json(i))?;
                map.serialize_entry("den", &1)?;
                map.serialize_entry("decimal", &self.to_f64())?;
                map.end()
            }
            Value::Rat(r) => {
                let mut map = ser.serialize_map(Some(3))?;
                map.serialize_entry("num", &bigint_json(r.numer()))?;
                map.serialize_entry("den", &bigint_json(r.denom()))?;
                map.serialize_entry("decimal", &self.to_f64())?;
                map.end()
            }
            Value::Quad(q) => {
                let mut map = ser.serialize_map(Some(4))?;
                map.serialize_entry(
                    "a",
                    &[bigint_json(q.a.numer()), bigint_json(q.a.denom())],
                )?;
                map.serialize_entry(
                    "b",
                    &[bigint_json(q.b.numer()), bigint_json(q.b.denom())],
                )?;
                map.serialize_entry("d", &bigint_json(&q.d))?;
                map.serialize_entry("decimal", &self.to_f64())?;
                map.end()
            }
        }
    }
}

mod serde_json_compatible {
    use serde::Serialize;

    /// Integer that serializes as a number when small, string when huge.
    #[derive(Serialize)]
    #[serde(untagged)]
    pub enum Num {
        Small(i128),
        Big(String),
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// a + b * sqrt(d) with rational a, b and integer d >= 0.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadExpr {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadExpr {
    pub fn rational(a: BigRational) -> QuadExpr {
        QuadExpr { a, b: BigRational::zero(), d: BigInt::zero() }
    }

    pub fn sqrt(d: BigInt) -> QuadExpr {
        QuadExpr {
            a: BigRational::zero(),
            b: BigRational::from_integer(BigInt::from(1)),
            d,
        }
    }

    /// a + b*sqrt(d) in one step.
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> QuadExpr {
        QuadExpr { a, b, d }
    }

    fn is_rational(&self) -> bool {
        self.b.is_zero() || self.d.is_zero() || self.d.sqrt().pow(2u32) == self.d
    }

    fn as_rational(&self) -> Option<BigRational> {
        if self.b.is_zero() || self.d.is_zero() {
            return Some(self.a.clone());
        }
        let root = self.d.sqrt();
        if root.clone().pow(2u32) == self.d {
            Some(&self.a + &self.b * BigRational::from_integer(root))
        } else {
            None
        }
    }

    pub fn add_rational(&self, r: &BigRational) -> QuadExpr {
        QuadExpr { a: &self.a + r, b: self.b.clone(), d: self.d.clone() }
    }

    pub fn scale(&self, r: &BigRational) -> QuadExpr {
        QuadExpr { a: &self.a * r, b: &self.b * r, d: self.d.clone() }
    }

    pub fn add_same_radicand(&self, other: &QuadExpr) -> QuadExpr {
        assert_eq!(self.d, other.d, "radicands must match");
        QuadExpr {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        }
    }

    pub fn sub_same_radicand(&self, other: &QuadExpr) -> QuadExpr {
        assert_eq!(self.d, other.d, "radicands must match");
        QuadExpr {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    /// Product of two expressions over the same radicand.
    pub fn mul_same_radicand(&self, other: &QuadExpr) -> QuadExpr {
        assert_eq!(self.d, other.d, "radicands must match");
        let d = BigRational::from_integer(self.d.clone());
        QuadExpr {
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    /// Sign of a + b*sqrt(d): squared comparison of the two halves.
    fn sign(&self) -> Ordering {
        if self.b.is_zero() || self.d.is_zero() {
            return self.a.cmp(&BigRational::zero());
        }
        let a_sign = self.a.cmp(&BigRational::zero());
        let b_sign = self.b.cmp(&BigRational::zero());
        match (a_sign, b_sign) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            _ => {
                // opposite signs: |a| vs |b|*sqrt(d) decides
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * BigRational::from_integer(self.d.clone());
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => a_sign,
                    Ordering::Less => b_sign,
                }
            }
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        QuadExpr { a: &self.a - r, b: self.b.clone(), d: self.d.clone() }.sign()
    }

    pub fn cmp_same_radicand(&self, other: &QuadExpr) -> Ordering {
        if self.is_rational() {
            return other.cmp_rational(&self.as_rational().expect("rational")).reverse();
        }
        if other.is_rational() {
            return self.cmp_rational(&other.as_rational().expect("rational"));
        }
        assert_eq!(self.d, other.d, "cannot compare different irrational radicands");
        QuadExpr {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
        .sign()
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.a)
            + ratio_to_f64(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for QuadExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() || self.d.is_zero() {
            return write!(f, "{}/{}", self.a.numer(), self.a.denom());
        }
        write!(
            f,
            "{}/{} + {}/{}*sqrt({})",
            self.a.numer(),
            self.a.denom(),
            self.b.numer(),
            self.b.denom(),
            self.d
        )
    }
}
