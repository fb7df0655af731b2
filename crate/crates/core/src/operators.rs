//! Second-order X1 operators, their ladder factorizations, and the weights
//! that make them formally self-adjoint.
//!
//! The general operator is
//!
//! ```text
//! T(y) = p y'' + q~/(x-b) y' + r~/(x-b) y
//! p  = k2 (x-b)^2 + k1 (x-b) + k0
//! q~ = a (x-c) (k1 (x-b) + 2 k0)
//! r~ = -a (k1 (x-b) + 2 k0)
//! ```
//!
//! with `c = b + 1/a` and `k0 != 0`. Applying it to a polynomial yields a
//! [`RatFun`]; whether the result is a polynomial is something the caller
//! certifies, never assumes.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::{QPoly, RatFun};
use crate::scalar::{int, Field, Rational};
use crate::x1::{JacobiParams, LaguerreParams, Params};

#[derive(Clone, Debug, PartialEq)]
pub struct X1Operator {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub k0: Rational,
    pub k1: Rational,
    pub k2: Rational,
    pub p: QPoly,
    pub q_tilde: QPoly,
    pub r_tilde: QPoly,
}

pub fn build_general_t(
    a: Rational,
    b: Rational,
    k0: Rational,
    k1: Rational,
    k2: Rational,
) -> Result<X1Operator> {
    if Field::is_zero(&a) {
        return Err(Error::InvalidParams("a != 0 required (c = b + 1/a)".into()));
    }
    if Field::is_zero(&k0) {
        return Err(Error::InvalidParams("k0 != 0 required".into()));
    }
    let c = b.clone() + a.recip();
    let t = QPoly::x_minus(b.clone());
    let p = &(&t.pow(2).scale(&k2) + &t.scale(&k1)) + &QPoly::constant(k0.clone());
    let inner = &t.scale(&k1) + &QPoly::constant(int(2) * k0.clone());
    let q_tilde = (&QPoly::x_minus(c.clone()) * &inner).scale(&a);
    let r_tilde = inner.scale(&-a.clone());
    Ok(X1Operator { a, b, c, k0, k1, k2, p, q_tilde, r_tilde })
}

/// Expands `p` about `b`: returns `(k2, k1, k0)` with
/// `p = k2 (x-b)^2 + k1 (x-b) + k0`. `p` must have degree at most two.
pub fn expand_about(p: &QPoly, b: &Rational) -> (Rational, Rational, Rational) {
    assert!(p.degree().unwrap_or(0) <= 2);
    let s = p.compose(&Poly::linear(b.clone(), int(1)));
    (s.coeff(2), s.coeff(1), s.coeff(0))
}

impl X1Operator {
    /// Operator with the given `p` (degree at most two) and flag `(a, b)`.
    pub fn with_p(p: &QPoly, a: Rational, b: Rational) -> Result<Self> {
        let (k2, k1, k0) = expand_about(p, &b);
        build_general_t(a, b, k0, k1, k2)
    }

    pub fn apply(&self, y: &QPoly) -> RatFun {
        let second = &self.p * &y.nth_derivative(2);
        let first = &(&self.q_tilde * &y.derivative()) + &(&self.r_tilde * y);
        let den = QPoly::x_minus(self.b.clone());
        RatFun::from_poly(second.clone())
            + RatFun::new(first, den).expect("nonzero denominator")
    }

    /// `lambda_n = (n-1)(n k2 + a k1)`.
    pub fn eigenvalue(&self, n: usize) -> Rational {
        assert!(n >= 1);
        let nn = int(n as i64);
        (nn.clone() - int(1)) * (nn * self.k2.clone() + self.a.clone() * self.k1.clone())
    }

    /// Full first-order coefficient `q = q~ / (x - b)`.
    pub fn q(&self) -> RatFun {
        RatFun::new(self.q_tilde.clone(), QPoly::x_minus(self.b.clone())).expect("nonzero")
    }
}

pub fn apply_t(op: &X1Operator, y: &QPoly) -> RatFun {
    op.apply(y)
}

/// `p = x^2 - 1` on the Jacobi flag.
pub fn t_jacobi(params: &JacobiParams<Rational>) -> X1Operator {
    X1Operator::with_p(&QPoly::from_ints(&[-1, 0, 1]), params.a.clone(), params.b.clone())
        .expect("validated parameters")
}

/// `p = -x` on the Laguerre flag.
pub fn t_laguerre(params: &LaguerreParams<Rational>) -> X1Operator {
    X1Operator::with_p(&QPoly::from_ints(&[0, -1]), params.a.clone(), params.b.clone())
        .expect("validated parameters")
}

pub fn operator_for(params: &Params<Rational>) -> X1Operator {
    match params {
        Params::Jacobi(p) => t_jacobi(p),
        Params::Laguerre(p) => t_laguerre(p),
    }
}

fn rf(num: QPoly, den: QPoly) -> RatFun {
    RatFun::new(num, den).expect("nonzero denominator")
}

/// `(x^2-1) y'' + 2a (1-bx)/(b-x) ((x-c) y' - y)`, written out directly.
pub fn t_jacobi_literal(p: &JacobiParams<Rational>, y: &RatFun) -> RatFun {
    let x2m1 = RatFun::from_poly(QPoly::from_ints(&[-1, 0, 1]));
    let frac = rf(
        QPoly::linear(int(1), -p.b.clone()).scale(&(int(2) * p.a.clone())),
        QPoly::linear(p.b.clone(), int(-1)),
    );
    let d1 = y.derivative();
    let inner = &(&d1 * &RatFun::from_poly(QPoly::x_minus(p.c.clone()))) - y;
    &(&x2m1 * &d1.derivative()) + &(&frac * &inner)
}

/// `-x y'' + (x-k)/(x+k) ((x+k+1) y' - y)`, written out directly.
pub fn t_laguerre_literal(p: &LaguerreParams<Rational>, y: &RatFun) -> RatFun {
    let k = &p.k;
    let minus_x = RatFun::from_poly(QPoly::from_ints(&[0, -1]));
    let frac = rf(QPoly::x_minus(k.clone()), QPoly::x_minus(-k.clone()));
    let d1 = y.derivative();
    let inner = &(&d1 * &RatFun::from_poly(QPoly::x_minus(-(k.clone() + int(1))))) - y;
    &(&minus_x * &d1.derivative()) + &(&frac * &inner)
}

/// Outcome of `T y = lambda_n y`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenCheck {
    pub n: usize,
    pub lambda: Rational,
    /// `T y` was certified to be a polynomial.
    pub polynomial: bool,
    /// `T y - lambda_n y`.
    pub residual: RatFun,
}

impl EigenCheck {
    pub fn passed(&self) -> bool {
        self.polynomial && self.residual.is_zero()
    }
}

/// Checks that `y` (of degree `n`) is an eigenfunction with eigenvalue
/// `lambda_n`.
pub fn verify_eigen(op: &X1Operator, y: &QPoly) -> EigenCheck {
    let n = y.degree().unwrap_or(0);
    let ty = op.apply(y);
    let lambda = if n >= 1 { op.eigenvalue(n) } else { int(0) };
    let residual = &ty - &RatFun::from_poly(y.scale(&lambda));
    EigenCheck { n, lambda, polynomial: ty.as_polynomial().is_some(), residual }
}

/// Lowering operator `A` of the family.
///
/// * Jacobi: `(x-c)/(x-b) (y' + a y) - a y`
/// * Laguerre: `-(x+k+1)/(x+k) (y' - y) - y`
pub fn ladder_a(params: &Params<Rational>, y: &RatFun) -> RatFun {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let ratio = rf(QPoly::x_minus(c.clone()), QPoly::x_minus(b.clone()));
    let inner = &y.derivative() + &y.scale(a);
    match params {
        Params::Jacobi(_) => &(&ratio * &inner) - &y.scale(a),
        Params::Laguerre(_) => &(-&(&ratio * &inner)) - y,
    }
}

/// Raising operator `B` of the family.
///
/// * Jacobi: `(x^2-1)(x-b)/(x-c) (y' + a y) - a (x^2 - 2bx + 1) y`
/// * Laguerre: `x (x+k)/(x+k+1) (y' - y) + k y`
pub fn ladder_b(params: &Params<Rational>, y: &RatFun) -> RatFun {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let inner = &y.derivative() + &y.scale(a);
    match params {
        Params::Jacobi(_) => {
            let front = rf(
                &QPoly::from_ints(&[-1, 0, 1]) * &QPoly::x_minus(b.clone()),
                QPoly::x_minus(c.clone()),
            );
            let quad = QPoly::new(vec![int(1), int(-2) * b.clone(), int(1)]);
            &(&front * &inner) - &y.mul_poly(&quad.scale(a))
        }
        Params::Laguerre(p) => {
            let front = rf(&QPoly::x() * &QPoly::x_minus(b.clone()), QPoly::x_minus(c.clone()));
            &(&front * &inner) + &y.scale(&p.k)
        }
    }
}

/// Residuals of the two shift relations at degree `n >= 1`:
///
/// * Jacobi: `A P^_n - (n+alpha+beta)/2 P^{(alpha+1,beta+1)}_{n-1}` and
///   `B P^{(alpha+1,beta+1)}_n - 2n P^_{n+1}`
/// * Laguerre: `A_k L^_n - L^{(k+1)}_{n-1}` and `B_k L^{(k+1)}_n - n L^_{n+1}`
///
/// The degree-zero member is taken as 0.
pub fn ladder_shift_check(params: &Params<Rational>, n: usize) -> Result<(RatFun, RatFun)> {
    assert!(n >= 1);
    let up = params.shifted(1)?;
    let here = params.x1_seq(n + 1)?;
    let above = up.x1_seq(n)?;
    let below = |m: usize| if m == 0 { QPoly::zero() } else { above[m - 1].clone() };
    let nn = int(n as i64);
    let (a_const, b_const) = match params {
        Params::Jacobi(p) => (
            (nn.clone() + p.alpha.clone() + p.beta.clone()) / int(2),
            int(2) * nn,
        ),
        Params::Laguerre(_) => (int(1), nn),
    };
    let a_res = &ladder_a(params, &RatFun::from_poly(here[n - 1].clone()))
        - &RatFun::from_poly(below(n - 1).scale(&a_const));
    let b_res = &ladder_b(params, &RatFun::from_poly(above[n - 1].clone()))
        - &RatFun::from_poly(here[n].scale(&b_const));
    Ok((a_res, b_res))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    /// `B A y - T y` for each test polynomial.
    pub lower_then_raise: Vec<RatFun>,
    /// `A' B' y - shift y - T y` with the parameter-lowered ladders, or
    /// `None` when the lowered parameters are not admissible.
    pub raise_then_lower: Option<Vec<RatFun>>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.lower_then_raise.iter().all(RatFun::is_zero)
            && self.raise_then_lower.iter().flatten().all(RatFun::is_zero)
    }
}

/// Compares `T` against `B A` and against `A_{-1} B_{-1} - shift` on `tests`,
/// where the shift is `alpha + beta` (Jacobi) or `1` (Laguerre).
pub fn factorization_check(params: &Params<Rational>, tests: &[QPoly]) -> FactorizationReport {
    let op = operator_for(params);
    let lower_then_raise = tests
        .iter()
        .map(|y| {
            let yr = RatFun::from_poly(y.clone());
            &ladder_b(params, &ladder_a(params, &yr)) - &op.apply(y)
        })
        .collect();
    let raise_then_lower = params.shifted(-1).ok().map(|down| {
        let shift = match params {
            Params::Jacobi(p) => p.alpha.clone() + p.beta.clone(),
            Params::Laguerre(_) => int(1),
        };
        tests
            .iter()
            .map(|y| {
                let yr = RatFun::from_poly(y.clone());
                let ab = ladder_a(&down, &ladder_b(&down, &yr));
                &(&ab - &yr.scale(&shift)) - &op.apply(y)
            })
            .collect()
    });
    FactorizationReport { lower_then_raise, raise_then_lower }
}

/// Which weight a [`WeightSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    JacobiX1,
    LaguerreX1,
    ClassicalJacobi,
    ClassicalLaguerre,
    Canonical(CanonicalCase),
}

/// The five normal forms of `p` for an X1 operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalCase {
    /// `p = 1 - x^2`
    I,
    /// `p = 1 + x^2`
    II,
    /// `p = x^2`
    III,
    /// `p = x`
    IV,
    /// `p = 1`
    V,
}

impl CanonicalCase {
    pub const ALL: [CanonicalCase; 5] =
        [CanonicalCase::I, CanonicalCase::II, CanonicalCase::III, CanonicalCase::IV, CanonicalCase::V];

    pub fn p(self) -> QPoly {
        match self {
            CanonicalCase::I => QPoly::from_ints(&[1, 0, -1]),
            CanonicalCase::II => QPoly::from_ints(&[1, 0, 1]),
            CanonicalCase::III => QPoly::from_ints(&[0, 0, 1]),
            CanonicalCase::IV => QPoly::from_ints(&[0, 1]),
            CanonicalCase::V => QPoly::from_ints(&[1]),
        }
    }
}

/// An orthogonality weight: its interval, a float evaluator, and (for exact
/// parameters) its logarithmic derivative as an exact rational function.
#[derive(Clone, Debug)]
pub struct WeightSpec {
    pub kind: WeightKind,
    pub interval: (f64, f64),
    /// Classical exponents `(alpha, beta)` or `(k, 0)` for evaluation.
    exponents: (f64, f64),
    /// The excluded point `b` for X1 and canonical weights.
    pole: Option<f64>,
    /// Canonical-case `a`.
    a: f64,
    pub logderiv: Option<RatFun>,
    pub normalizable: bool,
}

impl WeightSpec {
    pub fn x1_jacobi<T: Field>(p: &JacobiParams<T>) -> Self {
        let logderiv = exact_pair(&p.alpha, &p.beta).map(|(al, be)| {
            let b = any_rational(&p.b).expect("exact");
            &jacobi_logderiv(&al, &be) + &RatFun::inverse_power(b, 1).scale(&int(-2))
        });
        WeightSpec {
            kind: WeightKind::JacobiX1,
            interval: (-1.0, 1.0),
            exponents: (p.alpha.to_f64(), p.beta.to_f64()),
            pole: Some(p.b.to_f64()),
            a: p.a.to_f64(),
            logderiv,
            normalizable: true,
        }
    }

    pub fn x1_laguerre<T: Field>(p: &LaguerreParams<T>) -> Self {
        let logderiv = any_rational(&p.k).map(|k| {
            &laguerre_logderiv(&k) + &RatFun::inverse_power(-k, 1).scale(&int(-2))
        });
        WeightSpec {
            kind: WeightKind::LaguerreX1,
            interval: (0.0, f64::INFINITY),
            exponents: (p.k.to_f64(), 0.0),
            pole: Some(p.b.to_f64()),
            a: -1.0,
            logderiv,
            normalizable: true,
        }
    }

    pub fn classical_jacobi<T: Field>(alpha: &T, beta: &T) -> Self {
        WeightSpec {
            kind: WeightKind::ClassicalJacobi,
            interval: (-1.0, 1.0),
            exponents: (alpha.to_f64(), beta.to_f64()),
            pole: None,
            a: 0.0,
            logderiv: exact_pair(alpha, beta).map(|(a, b)| jacobi_logderiv(&a, &b)),
            normalizable: true,
        }
    }

    pub fn classical_laguerre<T: Field>(k: &T) -> Self {
        WeightSpec {
            kind: WeightKind::ClassicalLaguerre,
            interval: (0.0, f64::INFINITY),
            exponents: (k.to_f64(), 0.0),
            pole: None,
            a: 0.0,
            logderiv: any_rational(k).map(|k| laguerre_logderiv(&k)),
            normalizable: true,
        }
    }

    pub fn for_params<T: Field>(params: &Params<T>) -> Self {
        match params {
            Params::Jacobi(p) => Self::x1_jacobi(p),
            Params::Laguerre(p) => Self::x1_laguerre(p),
        }
    }

    /// Exponent pair `(alpha, beta)` or `(k, 0)` of the classical part.
    pub fn exponents(&self) -> (f64, f64) {
        self.exponents
    }

    /// Classical weight that a Gauss rule can integrate against natively,
    /// with everything else left to [`WeightSpec::modifier`].
    pub fn classical_part(&self) -> Option<ClassicalPart> {
        let (e1, e2) = self.exponents;
        match self.kind {
            WeightKind::JacobiX1 | WeightKind::ClassicalJacobi => Some(ClassicalPart::Jacobi(e1, e2)),
            WeightKind::LaguerreX1 | WeightKind::ClassicalLaguerre => Some(ClassicalPart::Laguerre(e1)),
            WeightKind::Canonical(CanonicalCase::I) => {
                let b = self.pole.unwrap_or(0.0);
                Some(ClassicalPart::Jacobi(self.a * (b - 1.0), self.a * (b + 1.0)))
            }
            WeightKind::Canonical(_) => None,
        }
    }

    /// The smooth factor `1/(x-b)^2` that multiplies the classical weight,
    /// or 1 for classical weights.
    pub fn modifier(&self, x: f64) -> f64 {
        match self.pole {
            Some(b) => 1.0 / ((x - b) * (x - b)),
            None => 1.0,
        }
    }

    /// Closed-form weight value at `x` (0 outside the interval).
    pub fn eval(&self, x: f64) -> f64 {
        let (lo, hi) = self.interval;
        if x < lo || x > hi {
            return 0.0;
        }
        let (e1, e2) = self.exponents;
        let base = match self.kind {
            WeightKind::JacobiX1 | WeightKind::ClassicalJacobi => (1.0 - x).powf(e1) * (1.0 + x).powf(e2),
            WeightKind::LaguerreX1 | WeightKind::ClassicalLaguerre => (-x).exp() * x.powf(e1),
            WeightKind::Canonical(case) => {
                let (a, b) = (self.a, self.pole.unwrap_or(0.0));
                match case {
                    CanonicalCase::I => (1.0 - x).powf(a * (b - 1.0)) * (1.0 + x).powf(a * (b + 1.0)),
                    CanonicalCase::II => (2.0 * a * x.atan()).exp() * (1.0 + x * x).powf(a * b),
                    CanonicalCase::III => x.abs().powf(2.0 * a * b),
                    CanonicalCase::IV => (a * x).exp() * x.abs().powf(a * b),
                    CanonicalCase::V => (2.0 * a * x).exp(),
                }
            }
        };
        base * self.modifier(x)
    }
}

/// `(1-x)^alpha (1+x)^beta` on `[-1, 1]` or `x^k e^{-x}` on `[0, inf)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassicalPart {
    Jacobi(f64, f64),
    Laguerre(f64),
}

fn any_rational<T: Field>(v: &T) -> Option<Rational> {
    let any: &dyn std::any::Any = v;
    any.downcast_ref::<Rational>().cloned()
}

fn exact_pair<T: Field>(a: &T, b: &T) -> Option<(Rational, Rational)> {
    Some((any_rational(a)?, any_rational(b)?))
}

/// `alpha/(x-1) + beta/(x+1)`.
fn jacobi_logderiv(alpha: &Rational, beta: &Rational) -> RatFun {
    &RatFun::inverse_power(int(1), 1).scale(alpha) + &RatFun::inverse_power(int(-1), 1).scale(beta)
}

/// `-1 + k/x`.
fn laguerre_logderiv(k: &Rational) -> RatFun {
    &RatFun::constant(int(-1)) + &RatFun::inverse_power(int(0), 1).scale(k)
}

/// Weight of canonical case `case` with flag parameters `(a, b)`.
/// Cases II, III and V are marked non-normalizable.
pub fn canonical_weights(case: CanonicalCase, a: &Rational, b: &Rational) -> WeightSpec {
    let two = int(2);
    let pole_term = RatFun::inverse_power(b.clone(), 1).scale(&-two.clone());
    let ab = a.clone() * b.clone();
    let core = match case {
        CanonicalCase::I => {
            &RatFun::inverse_power(int(1), 1).scale(&(ab.clone() - a.clone()))
                + &RatFun::inverse_power(int(-1), 1).scale(&(ab.clone() + a.clone()))
        }
        CanonicalCase::II => RatFun::new(
            QPoly::linear(two.clone() * a.clone(), two.clone() * ab.clone()),
            QPoly::from_ints(&[1, 0, 1]),
        )
        .expect("nonzero"),
        CanonicalCase::III => RatFun::inverse_power(int(0), 1).scale(&(two.clone() * ab.clone())),
        CanonicalCase::IV => &RatFun::constant(a.clone()) + &RatFun::inverse_power(int(0), 1).scale(&ab),
        CanonicalCase::V => RatFun::constant(two * a.clone()),
    };
    let (interval, normalizable) = match case {
        CanonicalCase::I => ((-1.0, 1.0), true),
        CanonicalCase::IV => ((0.0, f64::INFINITY), true),
        CanonicalCase::III => ((0.0, f64::INFINITY), false),
        CanonicalCase::II | CanonicalCase::V => ((f64::NEG_INFINITY, f64::INFINITY), false),
    };
    WeightSpec {
        kind: WeightKind::Canonical(case),
        interval,
        exponents: (0.0, 0.0),
        pole: Some(b.to_f64()),
        a: a.to_f64(),
        logderiv: Some(&core + &pole_term),
        normalizable,
    }
}

/// Operator of canonical case `case` on the flag `(a, b)`.
pub fn canonical_operator(case: CanonicalCase, a: &Rational, b: &Rational) -> Result<X1Operator> {
    X1Operator::with_p(&case.p(), a.clone(), b.clone())
}

/// Residual `p (W'/W) + p' - q` of the Pearson equation `(pW)' = qW`,
/// divided through by `W`.
pub fn pearson_check(op: &X1Operator, weight: &WeightSpec) -> Result<RatFun> {
    let logderiv = weight.logderiv.as_ref().ok_or(Error::ExactRequired)?;
    let p = RatFun::from_poly(op.p.clone());
    Ok(&(&(&p * logderiv) + &RatFun::from_poly(op.p.derivative())) - &op.q())
}

/// Boundary expression `(1-x)^{alpha+1} (y - (x-c) y')` near `x = 1`,
/// sampled at `x = 1 - 10^-j` for `j = 2..=8`.
pub fn jacobi_boundary_samples(p: &JacobiParams<Rational>, y: &QPoly) -> Vec<f64> {
    let yf = y.to_f64();
    let dyf = y.derivative().to_f64();
    let c = p.c.to_f64();
    let e = p.alpha.to_f64() + 1.0;
    (2..=8)
        .map(|j| {
            let h = 10f64.powi(-j);
            let x = 1.0 - h;
            h.powf(e) * (yf.at(x) - (x - c) * dyf.at(x))
        })
        .collect()
}
