//! Report values: exact rationals where the quantity is rational, floats
//! where logarithms, roots or real exponents enter.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::dyadic::Dyadic;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    pub fn exact(r: impl Into<BigRational>) -> Self {
        Value::Exact(r.into())
    }

    pub fn from_dyadic(d: &Dyadic) -> Self {
        Value::Exact(d.to_rational())
    }

    pub fn int(v: i64) -> Self {
        Value::Exact(BigRational::from_integer(v.into()))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Float(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Exact difference when both sides are exact, float otherwise.
    pub fn minus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            _ => Value::Float(self.to_f64() - other.to_f64()),
        }
    }

    pub fn plus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Float(self.to_f64() + other.to_f64()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_zero(),
            Value::Float(x) => *x == 0.0,
        }
    }

    /// Exact ratio when possible; `None` when the divisor is zero.
    pub fn ratio(&self, other: &Value) -> Option<Value> {
        if other.is_zero() {
            return None;
        }
        Some(match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a / b),
            _ => Value::Float(self.to_f64() / other.to_f64()),
        })
    }

    /// Total order: exact comparison between exact values, float otherwise.
    pub fn compare(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_negative(),
            Value::Float(x) => *x < 0.0,
        }
    }
}

impl From<Dyadic> for Value {
    fn from(d: Dyadic) -> Self {
        Value::Exact(d.to_rational())
    }
}

impl From<BigRational> for Value {
    fn from(r: BigRational) -> Self {
        Value::Exact(r)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Float(x)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Value::Exact(r) => write!(f, "{}/{} (≈{:.6})", r.numer(), r.denom(), rational_to_f64(r)),
            Value::Float(x) => write!(f, "{x:.6}"),
        }
    }
}

/// Correctly scaled float of a rational with arbitrarily large parts.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let (num, den) = (r.numer(), r.denom());
    if num.is_zero() {
        return 0.0;
    }
    if let (Some(a), Some(b)) = (num.to_f64(), den.to_f64()) {
        if a.is_finite() && b.is_finite() && a.abs() < 1e300 && b < 1e300 {
            return a / b;
        }
    }
    // Shift both to ~64 significant bits and fix up the binary exponent.
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let a = (num >> shift_n as usize).to_f64().unwrap_or(0.0);
    let b = (den >> shift_d as usize).to_f64().unwrap_or(1.0);
    let e = shift_n - shift_d;
    (a / b) * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// `a / b` as an exact rational.
pub fn ratio(a: impl Into<BigInt>, b: impl Into<BigInt>) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// `num / 2^exp` as an exact rational.
pub fn dyadic_ratio(num: i128, exp: u32) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(1) << exp as usize)
}
