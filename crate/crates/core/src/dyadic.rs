//! Exact dyadic rationals `num / 2^exp`.
//!
//! Every rational quantity on the uniform cube (measures, correlations,
//! influences, Walsh coefficients) has a power-of-two denominator, so a
//! normalized `(numerator, exponent)` pair gives exact arithmetic with cheap
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `numerator / 2^exponent`, normalized so the numerator is odd (or the
/// value is zero with exponent 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = Dyadic {
            num: num.into(),
            exp,
        };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic::new(v, 0)
    }

    pub fn from_i128(num: i128, exp: u32) -> Self {
        Dyadic::new(num, exp)
    }

    /// `2^-k`.
    pub fn pow2_inv(k: u32) -> Self {
        Dyadic::new(1, k)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let shift = (tz as u32).min(self.exp);
        if shift > 0 {
            self.num >>= shift as usize;
            self.exp -= shift;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Multiplies by `2^k` (`k` may be negative).
    pub fn scale_pow2(&self, k: i32) -> Self {
        if k >= 0 {
            Dyadic::new(&self.num << (k as usize), self.exp)
        } else {
            Dyadic::new(self.num.clone(), self.exp + k.unsigned_abs())
        }
    }

    pub fn half(&self) -> Self {
        self.scale_pow2(-1)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Numerator rescaled to the common exponent `exp >= self.exp`.
    pub fn numerator_at(&self, exp: u32) -> BigInt {
        debug_assert!(exp >= self.exp);
        &self.num << ((exp - self.exp) as usize)
    }

    /// Returns `k` when the value is exactly `2^k`.
    pub fn log2_exact(&self) -> Option<i64> {
        if !self.num.is_positive() {
            return None;
        }
        let bits = self.num.bits();
        if self.num.trailing_zeros() == Some(bits - 1) {
            Some((bits - 1) as i64 - self.exp as i64)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Split large numerators so 2^-exp does not underflow first.
        let num = match self.num.to_f64() {
            Some(v) if v.is_finite() => v,
            _ => {
                let shift = self.num.bits().saturating_sub(60);
                let top = (&self.num >> shift as usize).to_f64().unwrap_or(0.0);
                return top * 2f64.powi(shift as i32 - self.exp as i32);
            }
        };
        if self.exp <= 1000 {
            num / 2f64.powi(self.exp as i32)
        } else {
            num * 2f64.powi(-(self.exp as i32))
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.exp as usize)
    }

    /// Converts a rational with power-of-two denominator.
    pub fn from_rational(r: &BigRational) -> Option<Self> {
        let den = r.denom();
        let bits = den.bits();
        if den.is_positive() && den.trailing_zeros() == Some(bits - 1) {
            Some(Dyadic::new(r.numer().clone(), (bits - 1) as u32))
        } else {
            None
        }
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<Dyadic> for BigRational {
    fn from(d: Dyadic) -> Self {
        d.to_rational()
    }
}

impl From<&Dyadic> for BigRational {
    fn from(d: &Dyadic) -> Self {
        d.to_rational()
    }
}

fn add_aligned(a: &Dyadic, b: &Dyadic, negate_b: bool) -> Dyadic {
    let exp = a.exp.max(b.exp);
    let x = a.numerator_at(exp);
    let y = b.numerator_at(exp);
    Dyadic::new(if negate_b { x - y } else { x + y }, exp)
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        add_aligned(self, rhs, false)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        add_aligned(self, rhs, true)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Dyadic> for Dyadic {
    fn sum<I: Iterator<Item = &'a Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.numerator_at(exp).cmp(&other.numerator_at(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    #[test]
    fn normalizes_even_numerators() {
        let x = d(12, 4);
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.exponent(), 2);
        assert_eq!(d(0, 9).exponent(), 0);
        assert_eq!(d(8, 2), d(2, 0));
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(d(1, 1) + d(1, 2), d(3, 2));
        assert_eq!(d(1, 1) - d(1, 1), Dyadic::zero());
        assert_eq!(d(3, 2) * d(-1, 1), d(-3, 3));
        assert_eq!(d(7, 4).half(), d(7, 5));
        assert_eq!(d(7, 4).scale_pow2(4), d(7, 0));
        assert!(d(1, 3) < d(1, 2));
        assert!(d(-1, 1) < Dyadic::zero());
    }

    #[test]
    fn log2_exact_detects_powers() {
        assert_eq!(d(1, 3).log2_exact(), Some(-3));
        assert_eq!(d(8, 0).log2_exact(), Some(3));
        assert_eq!(d(3, 3).log2_exact(), None);
        assert_eq!(Dyadic::zero().log2_exact(), None);
    }

    #[test]
    fn rational_round_trip() {
        let x = d(-17, 8);
        let r = x.to_rational();
        assert_eq!(Dyadic::from_rational(&r), Some(x));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(Dyadic::from_rational(&third), None);
    }

    #[test]
    fn float_of_huge_values() {
        let big = Dyadic::new(BigInt::one() << 3000usize, 3001);
        assert!((big.to_f64() - 0.5).abs() < 1e-15);
        assert_eq!(d(17, 8).to_f64(), 17.0 / 256.0);
    }
}
