//! Scalar fields: exact rationals and binary64 floats.
//!
//! Construction code is generic over [`Field`], so the same routine builds a
//! polynomial with exact `BigRational` coefficients or with `f64` ones. The
//! runtime [`Scalar`] value exists for inputs whose backend is only known after
//! parsing (command-line parameters); mixing its two variants is an error.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always kept in lowest terms with positive
/// denominator by `num-rational`.
pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The rational integer `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A commutative field usable as polynomial coefficients.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` for backends whose arithmetic is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// -1, 0 or 1.
    fn sign(&self) -> i32 {
        if self.is_zero() {
            0
        } else if *self > Self::zero() {
            1
        } else {
            -1
        }
    }

    fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        int(n)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }
    fn sign(&self) -> i32 {
        if <Rational as Zero>::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Field for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_rational(q: &Rational) -> Self {
        ratio_to_f64(q)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Nearest-ish `f64` for a big rational, robust to numerators and
/// denominators beyond the `f64` range.
pub fn ratio_to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // Scale both sides down by a power of two before dividing.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 1000).max(0) as usize;
    let shift_d = (db - 1000).max(0) as usize;
    let n = (q.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d).to_f64().unwrap_or(1.0);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

/// Converts a finite `f64` into the exactly equal rational.
pub fn f64_to_rational(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// A parameter value whose backend is chosen at parse time.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => ratio_to_f64(q),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float(_) => None,
        }
    }

    fn zip(
        &self,
        other: &Scalar,
        exact: impl Fn(&Rational, &Rational) -> Result<Rational>,
        float: impl Fn(f64, f64) -> f64,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => exact(a, b).map(Scalar::Exact),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(float(*a, *b))),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| Ok(a + b), |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| Ok(a - b), |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| Ok(a * b), |a, b| a * b)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(
            other,
            |a, b| {
                if <Rational as Zero>::is_zero(b) {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(a / b)
                }
            },
            |a, b| a / b,
        )
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// `"3"`, `"-5/2"` parse exactly; anything with a decimal point or an
    /// exponent parses as `f64`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("cannot parse number {s:?}"));
        if let Some((n, d)) = t.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Scalar::Exact(Rational::new(n, d)));
        }
        if let Ok(n) = BigInt::from_str(t) {
            return Ok(Scalar::Exact(Rational::from_integer(n)));
        }
        let x = f64::from_str(t).map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(Scalar::Float(x))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{}", fmt_rational(q)),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Formats any field element: rationals as `p/q`, floats with `{}`.
pub fn fmt_field<T: Field>(v: &T) -> String {
    let any: &dyn std::any::Any = v;
    if let Some(q) = any.downcast_ref::<Rational>() {
        fmt_rational(q)
    } else {
        format!("{}", v.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_routes_backend() {
        assert_eq!("1/2".parse::<Scalar>().unwrap(), Scalar::Exact(rat(1, 2)));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::Exact(int(-3)));
        assert_eq!("0.5".parse::<Scalar>().unwrap(), Scalar::Float(0.5));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn mixed_backend_is_an_error() {
        let a = Scalar::Exact(rat(1, 2));
        let b = Scalar::Float(0.5);
        assert!(matches!(a.checked_add(&b), Err(Error::BackendMismatch)));
        assert!(matches!(b.checked_mul(&a), Err(Error::BackendMismatch)));
        assert_eq!(
            a.checked_add(&a).unwrap(),
            Scalar::Exact(int(1)),
        );
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigInt::from(10).pow(400u32);
        let q = Rational::new(big.clone() * 3, big);
        assert!((ratio_to_f64(&q) - 3.0).abs() < 1e-15);
    }
}
