//! Exact rational functions `num / den` over the rationals.
//!
//! Every value is kept canonical: numerator and denominator share no common
//! factor and the denominator is monic. Two rational functions are therefore
//! equal exactly when their stored parts are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Rational};

pub type QPoly = Poly<Rational>;

#[derive(Clone, Debug, PartialEq)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    /// Builds and reduces `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce_parts(num, den))
    }

    fn reduce_parts(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFun { num, den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading().expect("nonzero denominator").recip();
        RatFun { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun { num: p, den: QPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    /// `1 / (x - r)^e`.
    pub fn inverse_power(r: Rational, e: u32) -> Self {
        RatFun { num: QPoly::one(), den: QPoly::x_minus(r).pow(e) }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The quotient polynomial when the reduced denominator is constant.
    pub fn as_polynomial(&self) -> Option<QPoly> {
        (self.den.degree() == Some(0)).then(|| self.num.scale(&self.den.coeff(0).recip()))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce_parts(n, &self.den * &self.den)
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!Field::is_zero(&d)).then(|| self.num.eval(x) / d)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::reduce_parts(self.num.scale(s), self.den.clone())
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        Self::reduce_parts(&self.num * p, self.den.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce_parts(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

/// Reduces an arbitrary pair; fails on a zero denominator.
pub fn ratfun_reduce(num: QPoly, den: QPoly) -> Result<RatFun> {
    RatFun::new(num, den)
}

/// Certifies that `r` is a polynomial and returns it.
pub fn ratfun_is_polynomial(r: &RatFun) -> Option<QPoly> {
    r.as_polynomial()
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::reduce_parts(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::reduce_parts(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        RatFun::reduce_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    /// Panics on division by the zero function; see [`RatFun::checked_div`].
    fn div(self, rhs: &'a RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl From<QPoly> for RatFun {
    fn from(p: QPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn q(c: &[i64]) -> QPoly {
        Poly::from_ints(c)
    }

    #[test]
    fn cancels_common_factor() {
        let r = RatFun::new(q(&[-1, 0, 1]), q(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &q(&[1, 1]));
        assert_eq!(r.den(), &QPoly::one());
    }

    #[test]
    fn cancels_repeated_root() {
        let r = RatFun::new(q(&[9, -6, 1]), q(&[-3, 1])).unwrap();
        assert_eq!(r.as_polynomial(), Some(q(&[-3, 1])));
    }

    #[test]
    fn polynomial_is_unchanged() {
        let p = q(&[2, 0, 5]);
        let r = RatFun::new(p.clone(), QPoly::one()).unwrap();
        assert_eq!(r.num(), &p);
        assert_eq!(r.den(), &QPoly::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFun::new(q(&[1]), QPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFun::new(q(&[1]), q(&[4, 2])).unwrap();
        assert_eq!(r.den(), &q(&[2, 1]));
        assert_eq!(r.num(), &Poly::new(vec![rat(1, 2)]));
    }

    #[test]
    fn polynomial_certificate() {
        let r = RatFun::new(q(&[0, -1, 0, 1]), q(&[0, 1])).unwrap();
        assert_eq!(ratfun_is_polynomial(&r), Some(q(&[-1, 0, 1])));
        let s = RatFun::new(q(&[1, 1]), q(&[-3, 1])).unwrap();
        assert_eq!(ratfun_is_polynomial(&s), None);
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(x-1) = -1/(x-1)^2
        let r = RatFun::inverse_power(int(1), 1);
        let d = r.derivative();
        assert_eq!(d, RatFun::inverse_power(int(1), 2).scale(&int(-1)));
    }

    fn small_ratfun() -> impl Strategy<Value = RatFun> {
        let p = || prop::collection::vec(-6i64..6, 1..4).prop_map(|v| q(&v));
        (p(), p(), p()).prop_filter_map("zero denominator", |(a, b, c)| {
            // common factor c is injected on purpose
            RatFun::new(&a * &c, &b * &c).ok()
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(r in small_ratfun()) {
            let again = RatFun::new(r.num().clone(), r.den().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert_eq!(r.den().leading().cloned(), Some(int(1)));
        }

        #[test]
        fn field_identities(a in small_ratfun(), b in small_ratfun()) {
            prop_assert!((&(&a + &b) - &b).eq(&a));
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a.clone());
            }
        }
    }
}
