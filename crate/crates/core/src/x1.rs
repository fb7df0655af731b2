//! Parameter records, the flag basis, and the reference construction of the
//! X1-Jacobi and X1-Laguerre polynomials from classical ones.
//!
//! Both families live in the flag `E_n = { p : deg p <= n, p'(b) + a p(b) = 0 }`
//! for their own `(a, b)`, with `c = b + 1/a`. The Jacobi family is
//! parametrized by `(alpha, beta)` with
//! `a = (beta - alpha)/2`, `b = (beta + alpha)/(beta - alpha)`; the Laguerre
//! family by `k > 0` with `a = -1`, `b = -k`, `c = -(k + 1)`.

use serde::Serialize;

use crate::classical::{at, binomial, classical_jacobi_seq, classical_laguerre_seq, factorial};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{fmt_field, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Jacobi,
    Laguerre,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Jacobi => "jacobi",
            Family::Laguerre => "laguerre",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiParams<T> {
    pub alpha: T,
    pub beta: T,
    pub a: T,
    pub b: T,
    pub c: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreParams<T> {
    pub k: T,
    pub a: T,
    pub b: T,
    pub c: T,
}

/// Validates `(alpha, beta)` and derives `(a, b, c)`.
pub fn jacobi_params<T: Field>(alpha: T, beta: T) -> Result<JacobiParams<T>> {
    if alpha == beta {
        return Err(Error::InvalidParams("alpha != beta required (b is undefined)".into()));
    }
    let minus_one = -T::one();
    if alpha <= minus_one || beta <= minus_one {
        return Err(Error::InvalidParams("alpha > -1 and beta > -1 required".into()));
    }
    if alpha.sign() != beta.sign() {
        return Err(Error::InvalidParams("sgn alpha = sgn beta required".into()));
    }
    let two = T::from_i64(2);
    let a = (beta.clone() - alpha.clone()) / two;
    let b = (beta.clone() + alpha.clone()) / (beta.clone() - alpha.clone());
    let c = b.clone() + a.recip();
    if b.abs() <= T::one() {
        return Err(Error::InvalidParams("|b| > 1 violated".into()));
    }
    Ok(JacobiParams { alpha, beta, a, b, c })
}

/// Validates `k > 0`.
pub fn laguerre_params<T: Field>(k: T) -> Result<LaguerreParams<T>> {
    if k <= T::zero() {
        return Err(Error::InvalidParams("k > 0 required".into()));
    }
    Ok(LaguerreParams {
        a: -T::one(),
        b: -k.clone(),
        c: -(k.clone() + T::one()),
        k,
    })
}

impl<T: Field> JacobiParams<T> {
    /// Parameters of the shifted family `(alpha + j, beta + j)`.
    pub fn shifted(&self, j: i64) -> Result<Self> {
        let d = T::from_i64(j);
        jacobi_params(self.alpha.clone() + d.clone(), self.beta.clone() + d)
    }

    /// Parameters after `x -> -x`, which swaps `alpha` and `beta`.
    pub fn mirrored(&self) -> Self {
        jacobi_params(self.beta.clone(), self.alpha.clone()).expect("mirror of admissible is admissible")
    }
}

impl<T: Field> LaguerreParams<T> {
    pub fn shifted(&self, j: i64) -> Result<Self> {
        laguerre_params(self.k.clone() + T::from_i64(j))
    }
}

/// Either family's parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Params<T> {
    Jacobi(JacobiParams<T>),
    Laguerre(LaguerreParams<T>),
}

impl<T: Field> Params<T> {
    pub fn family(&self) -> Family {
        match self {
            Params::Jacobi(_) => Family::Jacobi,
            Params::Laguerre(_) => Family::Laguerre,
        }
    }

    pub fn a(&self) -> &T {
        match self {
            Params::Jacobi(p) => &p.a,
            Params::Laguerre(p) => &p.a,
        }
    }

    pub fn b(&self) -> &T {
        match self {
            Params::Jacobi(p) => &p.b,
            Params::Laguerre(p) => &p.b,
        }
    }

    pub fn c(&self) -> &T {
        match self {
            Params::Jacobi(p) => &p.c,
            Params::Laguerre(p) => &p.c,
        }
    }

    pub fn shifted(&self, j: i64) -> Result<Self> {
        Ok(match self {
            Params::Jacobi(p) => Params::Jacobi(p.shifted(j)?),
            Params::Laguerre(p) => Params::Laguerre(p.shifted(j)?),
        })
    }

    /// `name=value` pairs for reports.
    pub fn describe(&self) -> Vec<(&'static str, String)> {
        match self {
            Params::Jacobi(p) => vec![
                ("alpha", fmt_field(&p.alpha)),
                ("beta", fmt_field(&p.beta)),
                ("a", fmt_field(&p.a)),
                ("b", fmt_field(&p.b)),
                ("c", fmt_field(&p.c)),
            ],
            Params::Laguerre(p) => vec![
                ("k", fmt_field(&p.k)),
                ("a", fmt_field(&p.a)),
                ("b", fmt_field(&p.b)),
                ("c", fmt_field(&p.c)),
            ],
        }
    }

    pub fn flag_basis(&self, i: usize) -> Poly<T> {
        flag_basis(self.b(), self.c(), i)
    }

    pub fn in_flag(&self, p: &Poly<T>) -> bool {
        in_flag(self.a(), self.b(), p)
    }

    /// Members `1..=nmax` of the family (index 0 of the result is degree 1).
    pub fn x1_seq(&self, nmax: usize) -> Result<Vec<Poly<T>>> {
        match self {
            Params::Jacobi(p) => x1_jacobi_seq(p, nmax),
            Params::Laguerre(p) => Ok(x1_laguerre_seq(p, nmax)),
        }
    }

    pub fn x1(&self, n: usize) -> Result<X1Poly<T>> {
        match self {
            Params::Jacobi(p) => x1_jacobi(p, n),
            Params::Laguerre(p) => Ok(x1_laguerre(p, n)),
        }
    }
}

impl<T> From<JacobiParams<T>> for Params<T> {
    fn from(p: JacobiParams<T>) -> Self {
        Params::Jacobi(p)
    }
}

impl<T> From<LaguerreParams<T>> for Params<T> {
    fn from(p: LaguerreParams<T>) -> Self {
        Params::Laguerre(p)
    }
}

/// `u_1 = x - c`, `u_i = (x - b)^i` for `i >= 2`.
pub fn flag_basis<T: Field>(b: &T, c: &T, i: usize) -> Poly<T> {
    assert!(i >= 1, "the flag basis starts at degree one");
    if i == 1 {
        Poly::x_minus(c.clone())
    } else {
        Poly::x_minus(b.clone()).pow(i as u32)
    }
}

pub fn flag_basis_jacobi<T: Field>(p: &JacobiParams<T>, i: usize) -> Poly<T> {
    flag_basis(&p.b, &p.c, i)
}

/// `v_1 = x + k + 1`, `v_i = (x + k)^i`.
pub fn flag_basis_laguerre<T: Field>(p: &LaguerreParams<T>, i: usize) -> Poly<T> {
    flag_basis(&p.b, &p.c, i)
}

/// `p'(b) + a p(b) == 0`.
pub fn in_flag<T: Field>(a: &T, b: &T, p: &Poly<T>) -> bool {
    (p.derivative().eval(b) + a.clone() * p.eval(b)).is_zero()
}

/// Coordinates of `p` in the basis `u_1, ..., u_deg`, or `None` when `p` is
/// not in the flag.
pub fn flag_coordinates<T: Field>(a: &T, b: &T, p: &Poly<T>) -> Option<Vec<T>> {
    if !in_flag(a, b, p) {
        return None;
    }
    // In t = x - b the flag condition reads p_1 + a p_0 = 0, so
    // p_0 + p_1 t = p_1 (t - 1/a) = p_1 u_1 and p_i t^i = p_i u_i.
    let shifted = p.compose(&Poly::linear(b.clone(), T::one()));
    let deg = shifted.degree()?;
    Some((1..=deg).map(|i| shifted.coeff(i)).collect())
}

/// Polynomial of degree `n` in the flag, with the family normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct X1Poly<T> {
    pub family: Family,
    pub n: usize,
    pub poly: Poly<T>,
}

/// Value of the Jacobi member at `x = 1`:
/// `(alpha + n)/(beta - alpha) * binom(alpha + n - 2, n - 1)`.
pub fn jacobi_norm_value<T: Field>(p: &JacobiParams<T>, n: usize) -> T {
    assert!(n >= 1);
    let nn = T::from_i64(n as i64);
    let top = p.alpha.clone() + nn.clone() - T::from_i64(2);
    (p.alpha.clone() + nn) / (p.beta.clone() - p.alpha.clone()) * binomial(&top, n - 1)
}

/// Leading coefficient of the Laguerre member: `(-1)^n / (n-1)!`.
pub fn laguerre_leading<T: Field>(n: usize) -> T {
    assert!(n >= 1);
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    sign / factorial::<T>(n - 1)
}

fn jacobi_from_classical<T: Field>(p: &JacobiParams<T>, cls: &[Poly<T>], n: usize) -> Result<Poly<T>> {
    let two = T::from_i64(2);
    let den = p.alpha.clone() + p.beta.clone() + two.clone() * T::from_i64(n as i64) - two.clone();
    if den.is_zero() {
        return Err(Error::Degenerate(format!("alpha + beta + 2n - 2 = 0 at n = {n}")));
    }
    let prev = &cls[n - 1];
    let prev2 = at(cls, n as isize - 2);
    let head = (&Poly::x_minus(p.b.clone()) * prev).scale(&(-T::one() / two));
    let tail = (&prev.scale(&p.b) - &prev2).scale(&den.recip());
    Ok(&head + &tail)
}

/// Members `1..=nmax` from `-(x-b)/2 P_{n-1} + (b P_{n-1} - P_{n-2})/(alpha+beta+2n-2)`.
pub fn x1_jacobi_seq<T: Field>(p: &JacobiParams<T>, nmax: usize) -> Result<Vec<Poly<T>>> {
    let cls = classical_jacobi_seq(&p.alpha, &p.beta, nmax.saturating_sub(1))?;
    (1..=nmax).map(|n| jacobi_from_classical(p, &cls, n)).collect()
}

pub fn x1_jacobi<T: Field>(p: &JacobiParams<T>, n: usize) -> Result<X1Poly<T>> {
    assert!(n >= 1, "X1 families start at degree one");
    let poly = x1_jacobi_seq(p, n)?.pop().expect("nonempty");
    Ok(X1Poly { family: Family::Jacobi, n, poly })
}

/// Members `1..=nmax` from `-(x+k+1) L_{n-1} + L_{n-2}`.
pub fn x1_laguerre_seq<T: Field>(p: &LaguerreParams<T>, nmax: usize) -> Vec<Poly<T>> {
    let cls = classical_laguerre_seq(&p.k, nmax.saturating_sub(1));
    let head = Poly::x_minus(p.c.clone());
    (1..=nmax)
        .map(|n| &at(&cls, n as isize - 2) - &(&head * &cls[n - 1]))
        .collect()
}

pub fn x1_laguerre<T: Field>(p: &LaguerreParams<T>, n: usize) -> X1Poly<T> {
    assert!(n >= 1, "X1 families start at degree one");
    let poly = x1_laguerre_seq(p, n).pop().expect("nonempty");
    X1Poly { family: Family::Laguerre, n, poly }
}

/// Coefficients `f_n, g_n, h_n` of the three-term classical expansion.
pub fn jacobi_fgh<T: Field>(p: &JacobiParams<T>, n: usize) -> Result<(T, T, T)> {
    let s = p.alpha.clone() + p.beta.clone();
    let nn = T::from_i64(n as i64);
    let two = T::from_i64(2);
    let m = s.clone() + two.clone() * nn.clone();
    let ab = (p.alpha.clone() + nn.clone()) * (p.beta.clone() + nn.clone());
    let d1 = (m.clone() - T::one()) * m.clone();
    let d2 = (m.clone() - two.clone()) * m.clone();
    let d3 = (m.clone() - two) * (m - T::one());
    if d1.is_zero() || d2.is_zero() || d3.is_zero() {
        return Err(Error::Degenerate(format!("f/g/h denominator vanishes at n = {n}")));
    }
    Ok((nn.clone() * (s + nn) / d1, ab.clone() / d2, ab / d3))
}

/// Coefficients `g^_n, h^_n` of the inverse relation.
pub fn jacobi_gh_hat<T: Field>(p: &JacobiParams<T>, n: usize) -> Result<(T, T)> {
    let s = p.alpha.clone() + p.beta.clone();
    let nn = T::from_i64(n as i64);
    let two = T::from_i64(2);
    let m = s + two.clone() * nn.clone();
    let d1 = m.clone() * (m.clone() + two);
    let d2 = m.clone() * (m + T::one());
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::Degenerate(format!("g^/h^ denominator vanishes at n = {n}")));
    }
    let g = (nn.clone() + p.alpha.clone()) * (nn.clone() + p.beta.clone()) / d1;
    let nm1 = nn - T::one();
    let h = (nm1.clone() + p.alpha.clone()) * (nm1 + p.beta.clone()) / d2;
    Ok((g, h))
}

/// The X1 member of degree `n >= 1` rebuilt from three classical polynomials:
/// `-f_n P_n + 2 b g_n P_{n-1} - h_n P_{n-2}` (Jacobi) or
/// `n L_n - 2(n+k) L_{n-1} + (n+k) L_{n-2}` (Laguerre).
pub fn x1_from_classical_3term<T: Field>(params: &Params<T>, n: usize) -> Result<Poly<T>> {
    assert!(n >= 1);
    match params {
        Params::Jacobi(p) => {
            let cls = classical_jacobi_seq(&p.alpha, &p.beta, n)?;
            let (f, g, h) = jacobi_fgh(p, n)?;
            let two_b_g = T::from_i64(2) * p.b.clone() * g;
            Ok(&(&cls[n].scale(&-f) + &cls[n - 1].scale(&two_b_g)) - &at(&cls, n as isize - 2).scale(&h))
        }
        Params::Laguerre(p) => {
            let cls = classical_laguerre_seq(&p.k, n);
            let nn = T::from_i64(n as i64);
            let nk = nn.clone() + p.k.clone();
            Ok(&(&cls[n].scale(&nn) - &cls[n - 1].scale(&(T::from_i64(2) * nk.clone())))
                + &at(&cls, n as isize - 2).scale(&nk))
        }
    }
}

/// Residual of the relation expressing a weighted classical polynomial via
/// three X1 members (`n >= 0`, with the degree-zero member taken as 0):
///
/// * Jacobi: `-(x-b)^2/4 P_n - (f_{n+1} P^_{n+2} - 2b g^_n P^_{n+1} + h^_n P^_n)`
/// * Laguerre: `(x+k)^2 L_n - ((n+1) L^_{n+2} - 2(n+k) L^_{n+1} + (n+k-1) L^_n)`
pub fn inverse_relations_check<T: Field>(params: &Params<T>, n: usize) -> Result<Poly<T>> {
    let x1 = params.x1_seq(n + 2)?;
    let member = |m: usize| if m == 0 { Poly::zero() } else { x1[m - 1].clone() };
    let nn = T::from_i64(n as i64);
    let sq = Poly::x_minus(params.b().clone()).pow(2);
    match params {
        Params::Jacobi(p) => {
            let cls = classical_jacobi_seq(&p.alpha, &p.beta, n)?;
            let lhs = (&sq * &cls[n]).scale(&T::from_ratio(-1, 4));
            let (f1, _, _) = jacobi_fgh(p, n + 1)?;
            let (gh, hh) = jacobi_gh_hat(p, n)?;
            let two_b_g = T::from_i64(2) * p.b.clone() * gh;
            let rhs = &(&member(n + 2).scale(&f1) - &member(n + 1).scale(&two_b_g))
                + &member(n).scale(&hh);
            Ok(&lhs - &rhs)
        }
        Params::Laguerre(p) => {
            let cls = classical_laguerre_seq(&p.k, n);
            let lhs = &sq * &cls[n];
            let nk = nn.clone() + p.k.clone();
            let rhs = &(&member(n + 2).scale(&(nn + T::one()))
                - &member(n + 1).scale(&(T::from_i64(2) * nk.clone())))
                + &member(n).scale(&(nk - T::one()));
            Ok(&lhs - &rhs)
        }
    }
}

/// Checks that the first `n` members and `u_1..u_n` span the same space:
/// the change-of-basis matrix must be upper triangular with nonzero diagonal.
pub fn span_check<T: Field>(params: &Params<T>, n: usize) -> Result<bool> {
    let members = params.x1_seq(n)?;
    for (i, m) in members.iter().enumerate() {
        let Some(coords) = flag_coordinates(params.a(), params.b(), m) else {
            return Ok(false);
        };
        // member i+1 has degree i+1: coordinates beyond it vanish by length
        if coords.len() != i + 1 || coords[i].is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type Q = Poly<Rational>;

    fn jp(a: Rational, b: Rational) -> JacobiParams<Rational> {
        jacobi_params(a, b).unwrap()
    }

    #[test]
    fn jacobi_parameter_map() {
        let p = jp(int(2), int(4));
        assert_eq!((p.a, p.b, p.c), (int(1), int(3), int(4)));
    }

    #[test]
    fn jacobi_parameter_errors() {
        assert!(matches!(jacobi_params(int(2), int(2)), Err(Error::InvalidParams(m)) if m.contains("alpha != beta")));
        assert!(matches!(jacobi_params(rat(-1, 2), rat(1, 2)), Err(Error::InvalidParams(m)) if m.contains("sgn")));
        assert!(jacobi_params(int(-1), rat(-1, 2)).is_err());
        assert!(jacobi_params(int(0), int(2)).is_err());
    }

    #[test]
    fn laguerre_parameter_map() {
        let p = laguerre_params(rat(3, 2)).unwrap();
        assert_eq!((p.a.clone(), p.b.clone(), p.c.clone()), (int(-1), rat(-3, 2), rat(-5, 2)));
        // c = b + 1/a
        assert_eq!(p.c, p.b + p.a.recip());
        assert!(laguerre_params(int(0)).is_err());
    }

    #[test]
    fn flag_basis_examples() {
        let p = jp(int(2), int(4));
        assert_eq!(flag_basis_jacobi(&p, 1), Q::from_ints(&[-4, 1]));
        assert_eq!(flag_basis_jacobi(&p, 2), Q::from_ints(&[9, -6, 1]));
        let l = laguerre_params(int(1)).unwrap();
        assert_eq!(flag_basis_laguerre(&l, 1), Q::from_ints(&[2, 1]));
        assert_eq!(flag_basis_laguerre(&l, 3), Q::from_ints(&[1, 1]).pow(3));
    }

    #[test]
    fn flag_membership() {
        let p = jp(int(2), int(4));
        assert!(in_flag(&p.a, &p.b, &flag_basis_jacobi(&p, 2)));
        assert!(in_flag(&p.a, &p.b, &Q::from_ints(&[-2, 8, -2])));
        assert!(!in_flag(&p.a, &p.b, &Q::one()));
    }

    #[test]
    fn first_jacobi_members() {
        let p = jp(int(2), int(4));
        let seq = x1_jacobi_seq(&p, 2).unwrap();
        assert_eq!(seq[0], Poly::new(vec![int(2), rat(-1, 2)]));
        assert_eq!(seq[1], Q::from_ints(&[-2, 8, -2]));
        assert_eq!(seq[0].eval(&int(1)), rat(3, 2));
        assert_eq!(jacobi_norm_value(&p, 1), rat(3, 2));
    }

    #[test]
    fn first_laguerre_members() {
        let p = laguerre_params(int(1)).unwrap();
        let seq = x1_laguerre_seq(&p, 3);
        assert_eq!(seq[0], Q::from_ints(&[-2, -1]));
        assert_eq!(seq[1], Q::from_ints(&[-3, 0, 1]));
        assert_eq!(seq[2], Poly::new(vec![int(-4), int(2), int(2), rat(-1, 2)]));
    }

    #[test]
    fn invariants_over_grid() {
        let grid = [
            Params::from(jp(int(2), int(4))),
            Params::from(jp(rat(1, 2), rat(5, 2))),
            Params::from(jp(int(4), int(2))),
            Params::from(jp(rat(-1, 4), rat(-1, 2))),
            Params::from(laguerre_params(int(1)).unwrap()),
            Params::from(laguerre_params(rat(3, 2)).unwrap()),
        ];
        for params in &grid {
            let seq = params.x1_seq(20).unwrap();
            for (i, p) in seq.iter().enumerate() {
                let n = i + 1;
                assert_eq!(p.degree(), Some(n));
                assert!(params.in_flag(p), "{params:?} n={n}");
                match params {
                    Params::Jacobi(j) => assert_eq!(p.eval(&int(1)), jacobi_norm_value(j, n)),
                    Params::Laguerre(_) => assert_eq!(p.leading().cloned(), Some(laguerre_leading(n))),
                }
                if n <= 15 {
                    assert_eq!(&x1_from_classical_3term(params, n).unwrap(), p);
                }
            }
            assert!(!params.in_flag(&Q::one()));
            assert!(span_check(params, 10).unwrap());
        }
    }

    #[test]
    fn inverse_relations() {
        let l = Params::from(laguerre_params(int(1)).unwrap());
        assert!(inverse_relations_check(&l, 0).unwrap().is_zero());
        assert!(inverse_relations_check(&l, 1).unwrap().is_zero());
        let j = Params::from(jp(int(2), int(4)));
        for n in 0..=10 {
            assert!(inverse_relations_check(&j, n).unwrap().is_zero(), "n={n}");
        }
    }

    #[test]
    fn float_backend_agrees() {
        let pf = jacobi_params(0.5f64, 2.5).unwrap();
        let pq = jp(rat(1, 2), rat(5, 2));
        let f = x1_jacobi(&pf, 6).unwrap().poly;
        let q = x1_jacobi(&pq, 6).unwrap().poly.to_f64();
        for i in 0..=6 {
            assert!((f.coeff(i) - q.coeff(i)).abs() < 1e-12 * q.max_abs_coeff());
        }
    }

    #[test]
    fn flag_coordinates_reconstruct() {
        let params = Params::from(jp(rat(1, 2), rat(5, 2)));
        let p = params.x1(5).unwrap().poly;
        let coords = flag_coordinates(params.a(), params.b(), &p).unwrap();
        let rebuilt = coords
            .iter()
            .enumerate()
            .fold(Q::zero(), |acc, (i, c)| &acc + &params.flag_basis(i + 1).scale(c));
        assert_eq!(rebuilt, p);
    }
}
