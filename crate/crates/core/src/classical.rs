//! Classical Jacobi and Laguerre polynomials and their norm constants.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Field;

/// `P_0, ..., P_nmax` for parameters `(alpha, beta)`, normalized by
/// `P_n(1) = binom(n + alpha, n)`.
pub fn classical_jacobi_seq<T: Field>(alpha: &T, beta: &T, nmax: usize) -> Result<Vec<Poly<T>>> {
    let two = T::from_i64(2);
    let s = alpha.clone() + beta.clone();
    let mut out = vec![Poly::one()];
    if nmax == 0 {
        return Ok(out);
    }
    out.push(Poly::linear(
        (alpha.clone() - beta.clone()) / two.clone(),
        (s.clone() + two.clone()) / two.clone(),
    ));
    for n in 2..=nmax {
        let nn = T::from_i64(n as i64);
        let m = two.clone() * nn.clone() + s.clone();
        let den = two.clone() * nn.clone() * (nn.clone() + s.clone()) * (m.clone() - two.clone());
        if den.is_zero() {
            return Err(Error::Degenerate(format!(
                "Jacobi recurrence denominator vanishes at n = {n}"
            )));
        }
        let c1 = (m.clone() - T::one()) * m.clone() * (m.clone() - two.clone()) / den.clone();
        let c0 = (m.clone() - T::one())
            * (alpha.clone() * alpha.clone() - beta.clone() * beta.clone())
            / den.clone();
        let c2 = two.clone()
            * (nn.clone() + alpha.clone() - T::one())
            * (nn.clone() + beta.clone() - T::one())
            * m
            / den;
        let next = &(&Poly::linear(c0, c1) * &out[n - 1]) - &out[n - 2].scale(&c2);
        out.push(next);
    }
    Ok(out)
}

pub fn classical_jacobi<T: Field>(alpha: &T, beta: &T, n: usize) -> Result<Poly<T>> {
    Ok(classical_jacobi_seq(alpha, beta, n)?.pop().expect("nonempty"))
}

/// `L_0, ..., L_nmax` for parameter `k`, via
/// `n L_n + (x - 2n - k + 1) L_{n-1} + (n + k - 1) L_{n-2} = 0`.
pub fn classical_laguerre_seq<T: Field>(k: &T, nmax: usize) -> Vec<Poly<T>> {
    let mut out = vec![Poly::one()];
    if nmax == 0 {
        return out;
    }
    out.push(Poly::linear(k.clone() + T::one(), -T::one()));
    for n in 2..=nmax {
        let nn = T::from_i64(n as i64);
        let mid = Poly::linear(
            T::from_i64(2) * nn.clone() + k.clone() - T::one(),
            -T::one(),
        );
        let c2 = nn.clone() + k.clone() - T::one();
        let next = (&(&mid * &out[n - 1]) - &out[n - 2].scale(&c2)).scale(&nn.recip());
        out.push(next);
    }
    out
}

pub fn classical_laguerre<T: Field>(k: &T, n: usize) -> Poly<T> {
    classical_laguerre_seq(k, n).pop().expect("nonempty")
}

/// `L_n^{(k)}` with the convention `L_{-1} = 0` for negative indices.
pub(crate) fn at<T: Field>(seq: &[Poly<T>], n: isize) -> Poly<T> {
    if n < 0 {
        Poly::zero()
    } else {
        seq[n as usize].clone()
    }
}

/// Residual of the textbook Jacobi recurrence at degree `n >= 2`.
pub fn jacobi_recurrence_residual<T: Field>(alpha: &T, beta: &T, n: usize) -> Result<Poly<T>> {
    assert!(n >= 2);
    let seq = classical_jacobi_seq(alpha, beta, n)?;
    let two = T::from_i64(2);
    let nn = T::from_i64(n as i64);
    let s = alpha.clone() + beta.clone();
    let m = two.clone() * nn.clone() + s.clone();
    let lhs = seq[n].scale(&(two.clone() * nn.clone() * (nn.clone() + s) * (m.clone() - two.clone())));
    let mid = Poly::linear(
        alpha.clone() * alpha.clone() - beta.clone() * beta.clone(),
        m.clone() * (m.clone() - two.clone()),
    );
    let rhs = &(&mid * &seq[n - 1]).scale(&(m.clone() - T::one()))
        - &seq[n - 2].scale(
            &(two * (nn.clone() + alpha.clone() - T::one()) * (nn + beta.clone() - T::one()) * m),
        );
    Ok(&lhs - &rhs)
}

/// Residual of `n L_n + (x - 2n - k + 1) L_{n-1} + (n + k - 1) L_{n-2}`.
pub fn laguerre_recurrence_residual<T: Field>(k: &T, n: usize) -> Poly<T> {
    assert!(n >= 1);
    let seq = classical_laguerre_seq(k, n);
    let nn = T::from_i64(n as i64);
    let mid = Poly::linear(T::one() - T::from_i64(2) * nn.clone() - k.clone(), T::one());
    let l2 = at(&seq, n as isize - 2);
    &(&seq[n].scale(&nn) + &(&mid * &seq[n - 1])) + &l2.scale(&(nn + k.clone() - T::one()))
}

/// Outcome of the two contiguous relations between `L^{(k)}` and `L^{(k+1)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContiguousReport {
    /// `L_n^{(k)} - (L_n^{(k+1)} - L_{n-1}^{(k+1)})`
    pub shift_residual: Poly<f64>,
    /// `d/dx L_n^{(k)} + L_{n-1}^{(k+1)}`
    pub derivative_residual: Poly<f64>,
    pub holds: bool,
}

/// Checks `L_n^{(k)} = L_n^{(k+1)} - L_{n-1}^{(k+1)}` and
/// `d/dx L_n^{(k)} = -L_{n-1}^{(k+1)}` for `n >= 1`.
pub fn classical_laguerre_contiguous_checks<T: Field>(k: &T, n: usize) -> ContiguousReport {
    assert!(n >= 1, "contiguous relations are stated for n >= 1");
    let base = classical_laguerre_seq(k, n);
    let up = classical_laguerre_seq(&(k.clone() + T::one()), n);
    let shift = &base[n] - &(&up[n] - &up[n - 1]);
    let deriv = &base[n].derivative() + &up[n - 1];
    let holds = shift.is_zero() && deriv.is_zero();
    ContiguousReport {
        shift_residual: shift.to_f64(),
        derivative_residual: deriv.to_f64(),
        holds,
    }
}

/// Rising factorial `x (x+1) ... (x+m-1) = Gamma(x+m) / Gamma(x)`.
pub fn rising<T: Field>(x: &T, m: usize) -> T {
    (0..m).fold(T::one(), |acc, j| acc * (x.clone() + T::from_i64(j as i64)))
}

pub fn factorial<T: Field>(m: usize) -> T {
    rising(&T::one(), m)
}

/// Generalized binomial `binom(top, j) = top (top-1) ... (top-j+1) / j!`.
pub fn binomial<T: Field>(top: &T, j: usize) -> T {
    let falling = (0..j).fold(T::one(), |acc, i| acc * (top.clone() - T::from_i64(i as i64)));
    falling / factorial::<T>(j)
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

pub fn gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::GammaPole(x));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// `Gamma(num1) Gamma(num2) / (Gamma(den1) Gamma(den2))`, through logarithms
/// when the factors would overflow.
fn gamma_quotient(num: [f64; 2], den: [f64; 2]) -> Result<f64> {
    for &v in num.iter().chain(&den) {
        if is_pole(v) {
            return Err(Error::GammaPole(v));
        }
    }
    if num.iter().chain(&den).all(|&v| v.abs() < 150.0) {
        let g = statrs::function::gamma::gamma;
        return Ok(g(num[0]) * g(num[1]) / (g(den[0]) * g(den[1])));
    }
    let lg = |v: f64| -> (f64, f64) {
        let g = statrs::function::gamma::gamma(v.min(150.0));
        let sign = if v > 0.0 { 1.0 } else { g.signum() };
        (statrs::function::gamma::ln_gamma(v), sign)
    };
    let mut log = 0.0;
    let mut sign = 1.0;
    for &v in &num {
        let (l, s) = lg(v);
        log += l;
        sign *= s;
    }
    for &v in &den {
        let (l, s) = lg(v);
        log -= l;
        sign *= s;
    }
    Ok(sign * log.exp())
}

/// Classical Jacobi norm `C_n = ||P_n^{(alpha,beta)}||^2`.
pub fn c_n(alpha: f64, beta: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    let s = alpha + beta;
    let q = gamma_quotient([alpha + nf + 1.0, beta + nf + 1.0], [nf + 1.0, s + nf + 1.0])?;
    Ok(2f64.powf(s + 1.0) / (s + 2.0 * nf + 1.0) * q)
}

/// Classical Laguerre norm `K_n = Gamma(n + k + 1) / n!`.
pub fn k_n(k: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    gamma_quotient([nf + k + 1.0, 1.0], [nf + 1.0, 1.0])
}

/// Exact `C_n / C_{n-1}` for `n >= 1`.
pub fn c_ratio<T: Field>(alpha: &T, beta: &T, n: usize) -> T {
    assert!(n >= 1);
    let nn = T::from_i64(n as i64);
    let s = alpha.clone() + beta.clone();
    let two = T::from_i64(2);
    (alpha.clone() + nn.clone())
        * (beta.clone() + nn.clone())
        * (s.clone() + two.clone() * nn.clone() - T::one())
        / (nn.clone() * (s.clone() + nn.clone()) * (s + two * nn + T::one()))
}

/// Exact `K_n / K_{n-1} = (n + k) / n` for `n >= 1`.
pub fn k_ratio<T: Field>(k: &T, n: usize) -> T {
    assert!(n >= 1);
    let nn = T::from_i64(n as i64);
    (nn.clone() + k.clone()) / nn
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type Q = Poly<Rational>;

    #[test]
    fn jacobi_low_degrees() {
        assert_eq!(classical_jacobi(&int(2), &int(4), 0).unwrap(), Q::one());
        let p1 = classical_jacobi(&int(2), &int(4), 1).unwrap();
        assert_eq!(p1, Q::from_ints(&[-1, 4]));
        assert_eq!(p1.eval(&int(1)), int(3));
    }

    #[test]
    fn jacobi_value_at_one() {
        let (a, b) = (rat(1, 2), rat(3, 2));
        let seq = classical_jacobi_seq(&a, &b, 12).unwrap();
        for (n, p) in seq.iter().enumerate() {
            let top = a.clone() + int(n as i64);
            assert_eq!(p.eval(&int(1)), binomial(&top, n), "n = {n}");
            assert_eq!(p.degree(), Some(n));
        }
    }

    #[test]
    fn jacobi_recurrence_is_exact() {
        for n in 2..=20 {
            assert!(jacobi_recurrence_residual(&rat(1, 2), &rat(3, 2), n).unwrap().is_zero());
        }
    }

    #[test]
    fn jacobi_degenerate_parameters() {
        // alpha + beta = -2 makes 2n(n+a+b)(2n+a+b-2) vanish at n = 2.
        assert!(classical_jacobi(&rat(-1, 1), &rat(-1, 1), 2).is_err());
    }

    #[test]
    fn laguerre_low_degrees() {
        let k = int(1);
        assert_eq!(classical_laguerre(&k, 0), Q::one());
        assert_eq!(classical_laguerre(&k, 1), Q::from_ints(&[2, -1]));
        let l2 = classical_laguerre(&k, 2);
        assert_eq!(l2, Poly::new(vec![int(3), int(-3), rat(1, 2)]));
    }

    #[test]
    fn laguerre_leading_coefficient() {
        let k = rat(3, 2);
        for (n, l) in classical_laguerre_seq(&k, 20).iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(l.leading().cloned(), Some(int(sign) / factorial::<Rational>(n)));
        }
    }

    #[test]
    fn laguerre_recurrence_is_exact() {
        for n in 1..=20 {
            assert!(laguerre_recurrence_residual(&int(1), n).is_zero());
        }
    }

    #[test]
    fn contiguous_relations() {
        let r = classical_laguerre_contiguous_checks(&int(1), 1);
        assert!(r.holds);
        for n in 1..=12 {
            assert!(classical_laguerre_contiguous_checks(&rat(5, 3), n).holds);
        }
    }

    #[test]
    fn norm_constants() {
        assert!((k_n(1.0, 0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(k_ratio(&int(1), 3), rat(4, 3));
        let direct = c_n(0.0, 1.0, 2).unwrap() / c_n(0.0, 1.0, 1).unwrap();
        assert!((c_ratio(&0.0, &1.0, 2) - direct).abs() < 1e-12 * direct);
        for n in 1..8 {
            let d = c_n(2.5, 0.5, n).unwrap() / c_n(2.5, 0.5, n - 1).unwrap();
            assert!((c_ratio(&2.5, &0.5, n) - d).abs() < 1e-12 * d);
            let e = k_n(1.5, n).unwrap() / k_n(1.5, n - 1).unwrap();
            assert!((k_ratio(&1.5, n) - e).abs() < 1e-12 * e);
        }
        assert!(matches!(gamma(-2.0), Err(Error::GammaPole(_))));
        assert!(c_n(-1.0, 0.5, 0).is_err());
    }

    #[test]
    fn large_argument_norms_do_not_overflow() {
        let c = c_n(180.0, 190.0, 5).unwrap();
        assert!(c.is_finite() && c > 0.0);
    }
}
