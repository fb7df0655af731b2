//! Rodrigues-type construction and three-term recurrences with polynomial
//! coefficients.
//!
//! The Rodrigues pipeline never touches the transcendental part of a weight.
//! Everything is carried as `r(x) W(x)` for one fixed base weight `W`, and
//! differentiation uses `(r W)' = (r' + r W'/W) W`.

use crate::classical::{classical_laguerre_seq, factorial};
use crate::error::{Error, Result};
use crate::operators::WeightSpec;
use crate::ratfun::{QPoly, RatFun};
use crate::scalar::{int, Field, Rational};
use crate::x1::{jacobi_fgh, jacobi_gh_hat, JacobiParams, LaguerreParams, Params};

/// `rat(x) * W(x)` for a base weight with known logarithmic derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedRational {
    pub rat: RatFun,
    logderiv: RatFun,
}

impl WeightedRational {
    pub fn new(rat: RatFun, base: &WeightSpec) -> Result<Self> {
        let logderiv = base.logderiv.clone().ok_or(Error::ExactRequired)?;
        Ok(WeightedRational { rat, logderiv })
    }

    pub fn logderiv(&self) -> &RatFun {
        &self.logderiv
    }

    pub fn derivative(&self) -> Self {
        let rat = &self.rat.derivative() + &(&self.rat * &self.logderiv);
        WeightedRational { rat, logderiv: self.logderiv.clone() }
    }

    pub fn mul(&self, f: &RatFun) -> Self {
        WeightedRational { rat: &self.rat * f, logderiv: self.logderiv.clone() }
    }
}

/// `b_j = b + j/a`, the pole of the weight with parameters shifted by `j`.
fn b_j(params: &Params<Rational>, j: i64) -> Rational {
    params.b().clone() + int(j) / params.a().clone()
}

fn x_minus_bj(params: &Params<Rational>, j: i64) -> QPoly {
    QPoly::x_minus(b_j(params, j))
}

fn rodrigues_core(params: &Params<Rational>, n: usize) -> Result<QPoly> {
    if n == 0 {
        return Err(Error::InvalidParams("n >= 1 required".into()));
    }
    let base = WeightSpec::for_params(params);
    let ni = n as i64;
    // classical part of W_{n-1} / W_0
    let classical = match params {
        Params::Jacobi(_) => QPoly::from_ints(&[1, 0, -1]),
        Params::Laguerre(_) => QPoly::x(),
    }
    .pow(n as u32 - 1);
    let seed_num = &(&x_minus_bj(params, ni).pow(2) * &classical) * &x_minus_bj(params, 0).pow(2);
    let seed = RatFun::new(seed_num, x_minus_bj(params, ni - 1).pow(2))?;
    let mut y = WeightedRational::new(seed, &base)?;
    for j in (1..ni).rev() {
        let factor = RatFun::new(
            x_minus_bj(params, j).pow(2),
            &x_minus_bj(params, j - 1) * &x_minus_bj(params, j + 1),
        )?;
        y = y.mul(&factor).derivative();
    }
    let out = y.rat.checked_div(&RatFun::from_poly(x_minus_bj(params, 1)))?;
    let poly = out
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(format!("Rodrigues output at n = {n}: {out}")))?;
    let scale = match params {
        Params::Jacobi(_) => num_traits::pow(int(-2), n) * factorial::<Rational>(n - 1),
        Params::Laguerre(_) => -factorial::<Rational>(n - 1),
    };
    Ok(poly.scale(&scale.recip()))
}

/// Degree-`n` Jacobi member from the iterated weighted derivative.
pub fn rodrigues_jacobi(params: &JacobiParams<Rational>, n: usize) -> Result<QPoly> {
    rodrigues_core(&Params::Jacobi(params.clone()), n)
}

/// Degree-`n` Laguerre member from the iterated weighted derivative.
pub fn rodrigues_laguerre(params: &LaguerreParams<Rational>, n: usize) -> Result<QPoly> {
    rodrigues_core(&Params::Laguerre(params.clone()), n)
}

pub fn rodrigues(params: &Params<Rational>, n: usize) -> Result<QPoly> {
    rodrigues_core(params, n)
}

/// Polynomial coefficients `(c2, c1, c0)` with
/// `c2 y_{n+2} + c1 y_{n+1} + c0 y_n = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceRow {
    pub c2: QPoly,
    pub c1: QPoly,
    pub c0: QPoly,
}

impl RecurrenceRow {
    pub fn apply(&self, y2: &QPoly, y1: &QPoly, y0: &QPoly) -> QPoly {
        &(&(&self.c2 * y2) + &(&self.c1 * y1)) + &(&self.c0 * y0)
    }

    fn degrees(&self) -> [usize; 3] {
        [&self.c2, &self.c1, &self.c0].map(|c| c.degree().unwrap_or(0))
    }
}

/// Laguerre row at `n >= 1`:
///
/// ```text
/// c2 = (n+1) ((x+k)^2 (n+k) - k)
/// c1 = (n+k) ((x+k)^2 (x-2n-k-1) + 2k)
/// c0 = (n+k-1) ((x+k)^2 (n+k+1) - k)
/// ```
pub fn laguerre_recurrence_row(p: &LaguerreParams<Rational>, n: usize) -> RecurrenceRow {
    let k = p.k.clone();
    let nn = int(n as i64);
    let nk = nn.clone() + k.clone();
    let sq = QPoly::x_minus(-k.clone()).pow(2);
    let kc = QPoly::constant(k.clone());
    let c2 = (&sq.scale(&nk) - &kc).scale(&(nn.clone() + int(1)));
    let mid = QPoly::x_minus(int(2) * nn + k.clone() + int(1));
    let c1 = (&(&sq * &mid) + &kc.scale(&int(2))).scale(&nk);
    let c0 = (&sq.scale(&(nk.clone() + int(1))) - &kc).scale(&(nk - int(1)));
    RecurrenceRow { c2, c1, c0 }
}

/// Jacobi row at `n >= 1`:
///
/// ```text
/// c2 = f_{n+1} ((b^2-1) - (alpha+n)(beta+n)(x-b)^2)
/// c1 = -2b g^_n ((b^2-1) + (a^2-1)(x-b)^2) + (alpha+n)(beta+n)/2 x (x-b)^2
/// c0 = h^_n ((b^2-1) - (alpha+n+1)(beta+n+1)(x-b)^2)
/// ```
pub fn jacobi_recurrence_row(p: &JacobiParams<Rational>, n: usize) -> Result<RecurrenceRow> {
    let nn = int(n as i64);
    let (f1, _, _) = jacobi_fgh(p, n + 1)?;
    let (gh, hh) = jacobi_gh_hat(p, n)?;
    let b = p.b.clone();
    let bb = QPoly::constant(b.clone() * b.clone() - int(1));
    let sq = QPoly::x_minus(b.clone()).pow(2);
    let prod = |s: i64| (p.alpha.clone() + nn.clone() + int(s)) * (p.beta.clone() + nn.clone() + int(s));
    let c2 = (&bb - &sq.scale(&prod(0))).scale(&f1);
    let a2m1 = p.a.clone() * p.a.clone() - int(1);
    let c1 = &(&bb + &sq.scale(&a2m1)).scale(&(int(-2) * b * gh))
        + &(&QPoly::x() * &sq).scale(&(prod(0) / int(2)));
    let c0 = (&bb - &sq.scale(&prod(1))).scale(&hh);
    Ok(RecurrenceRow { c2, c1, c0 })
}

pub fn recurrence_row(params: &Params<Rational>, n: usize) -> Result<RecurrenceRow> {
    match params {
        Params::Jacobi(p) => jacobi_recurrence_row(p, n),
        Params::Laguerre(p) => Ok(laguerre_recurrence_row(p, n)),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceReport {
    pub n: usize,
    /// Residual of the stated row on the constructed members.
    pub residual: QPoly,
    /// Dimension of the space of rows with the stated coefficient degrees
    /// that annihilate the three members (only computed in reconciliation mode).
    pub annihilator_dim: Option<usize>,
    /// A row from the solved space, scaled to match the stated leading
    /// coefficient of `c2`; present only when the stated row fails.
    pub corrected: Option<RecurrenceRow>,
}

impl RecurrenceReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Laguerre recurrence at `n >= 1`.
pub fn recurrence_check_laguerre(p: &LaguerreParams<Rational>, n: usize) -> RecurrenceReport {
    assert!(n >= 1);
    let ys = crate::x1::x1_laguerre_seq(p, n + 2);
    let row = laguerre_recurrence_row(p, n);
    let residual = row.apply(&ys[n + 1], &ys[n], &ys[n - 1]);
    RecurrenceReport { n, residual, annihilator_dim: None, corrected: None }
}

/// Residual of
/// `(n+1)(n+k) L^_{n+2} + (n+k)(x-2n-k-1) L^_{n+1} + (n+k-1)(n+k+1) L^_n - k L_n`
/// for `n >= 1`.
pub fn laguerre_reverse_identity(p: &LaguerreParams<Rational>, n: usize) -> QPoly {
    assert!(n >= 1);
    let ys = crate::x1::x1_laguerre_seq(p, n + 2);
    let cls = classical_laguerre_seq(&p.k, n);
    let k = p.k.clone();
    let nk = int(n as i64) + k.clone();
    let mid = QPoly::x_minus(int(2 * n as i64) + k.clone() + int(1)).scale(&nk);
    let combo = &(&ys[n + 1].scale(&(int(n as i64 + 1) * nk.clone())) + &(&mid * &ys[n]))
        + &ys[n - 1].scale(&((nk.clone() - int(1)) * (nk + int(1))));
    &combo - &cls[n].scale(&k)
}

/// Jacobi recurrence at `n >= 1`. With `reconcile`, also solves for the
/// annihilating rows of the same shape and, if the stated row fails, returns
/// one from the solved space.
pub fn recurrence_check_jacobi(
    p: &JacobiParams<Rational>,
    n: usize,
    reconcile: bool,
) -> Result<RecurrenceReport> {
    assert!(n >= 1);
    let ys = crate::x1::x1_jacobi_seq(p, n + 2)?;
    let row = jacobi_recurrence_row(p, n)?;
    let residual = row.apply(&ys[n + 1], &ys[n], &ys[n - 1]);
    let mut report = RecurrenceReport { n, residual, annihilator_dim: None, corrected: None };
    if reconcile {
        let basis = annihilators(&[&ys[n + 1], &ys[n], &ys[n - 1]], row.degrees());
        report.annihilator_dim = Some(basis.len());
        if !report.holds() {
            report.corrected = basis.first().map(|r| {
                let target = row.c2.leading().cloned().unwrap_or_else(|| int(1));
                match r.c2.leading() {
                    Some(l) => {
                        let s = target / l.clone();
                        RecurrenceRow { c2: r.c2.scale(&s), c1: r.c1.scale(&s), c0: r.c0.scale(&s) }
                    }
                    None => r.clone(),
                }
            });
        }
    }
    Ok(report)
}

/// Basis of all rows `(c2, c1, c0)` with `deg ci <= degs[i]` and
/// `c2 y2 + c1 y1 + c0 y0 = 0`, by exact elimination.
pub fn annihilators(ys: &[&QPoly; 3], degs: [usize; 3]) -> Vec<RecurrenceRow> {
    let width: usize = degs.iter().map(|d| d + 1).sum();
    let height = ys
        .iter()
        .zip(degs)
        .map(|(y, d)| y.degree().unwrap_or(0) + d + 1)
        .max()
        .unwrap_or(0);
    // column for x^j * y_i contributes the coefficients of that product
    let mut m = vec![vec![int(0); width]; height];
    let mut col = 0;
    for (y, d) in ys.iter().zip(degs) {
        for j in 0..=d {
            for (i, c) in y.coeffs().iter().enumerate() {
                m[i + j][col] = c.clone();
            }
            col += 1;
        }
    }
    nullspace(m, width)
        .into_iter()
        .map(|v| {
            let (v2, rest) = v.split_at(degs[0] + 1);
            let (v1, v0) = rest.split_at(degs[1] + 1);
            RecurrenceRow {
                c2: QPoly::new(v2.to_vec()),
                c1: QPoly::new(v1.to_vec()),
                c0: QPoly::new(v0.to_vec()),
            }
        })
        .collect()
}

/// Right nullspace of an exact matrix via reduced row echelon form.
pub(crate) fn nullspace(mut m: Vec<Vec<Rational>>, width: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(r) = (row..m.len()).find(|&r| !Field::is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, r);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !Field::is_zero(&m[r][col]) {
                let f = m[r][col].clone();
                for c in 0..width {
                    let d = f.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![int(0); width];
            v[free] = int(1);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Solves the recurrence forward: `y_{n+2} = -(c1 y_{n+1} + c0 y_n) / c2`.
/// Fails when the division is not exact.
pub fn recurrence_forward(row: &RecurrenceRow, y1: &QPoly, y0: &QPoly) -> Result<QPoly> {
    let rhs = -&(&(&row.c1 * y1) + &(&row.c0 * y0));
    rhs.exact_div(&row.c2)
        .ok_or_else(|| Error::NotPolynomial("recurrence quotient is not a polynomial".into()))
}

/// Members `1..=nmax` generated from the first two by the recurrence.
pub fn recurrence_sequence(params: &Params<Rational>, nmax: usize) -> Result<Vec<QPoly>> {
    let mut out = params.x1_seq(nmax.min(2))?;
    while out.len() < nmax {
        let n = out.len() - 1;
        let row = recurrence_row(params, n)?;
        let next = recurrence_forward(&row, &out[n], &out[n - 1])?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::x1::{jacobi_params, laguerre_params, x1_jacobi_seq, x1_laguerre_seq};

    fn jac(a: Rational, b: Rational) -> JacobiParams<Rational> {
        jacobi_params(a, b).unwrap()
    }

    #[test]
    fn product_rule() {
        let w = WeightSpec::x1_laguerre(&laguerre_params(int(1)).unwrap());
        let r = RatFun::new(QPoly::from_ints(&[1, 2, 3]), QPoly::from_ints(&[5, 1])).unwrap();
        let wr = WeightedRational::new(r.clone(), &w).unwrap();
        let expect = &r.derivative() + &(&r * w.logderiv.as_ref().unwrap());
        assert_eq!(wr.derivative().rat, expect);
    }

    #[test]
    fn float_weight_has_no_pipeline() {
        let w = WeightSpec::x1_laguerre(&laguerre_params(1.0f64).unwrap());
        assert_eq!(WeightedRational::new(RatFun::zero(), &w), Err(Error::ExactRequired));
    }

    #[test]
    fn rodrigues_first_members() {
        let p = jac(int(2), int(4));
        let b1 = p.b.clone() + p.a.recip();
        assert_eq!(rodrigues_jacobi(&p, 1).unwrap(), QPoly::x_minus(b1).scale(&rat(-1, 2)));
        assert_eq!(rodrigues_jacobi(&p, 2).unwrap(), QPoly::from_ints(&[-2, 8, -2]));
        let l = laguerre_params(int(1)).unwrap();
        assert_eq!(rodrigues_laguerre(&l, 1).unwrap(), QPoly::from_ints(&[-2, -1]));
        assert_eq!(rodrigues_laguerre(&l, 2).unwrap(), QPoly::from_ints(&[-3, 0, 1]));
    }

    #[test]
    fn rodrigues_matches_construction() {
        let j = jac(rat(1, 2), rat(5, 2));
        let js = x1_jacobi_seq(&j, 8).unwrap();
        let l = laguerre_params(rat(3, 2)).unwrap();
        let ls = x1_laguerre_seq(&l, 8);
        for n in 1..=8 {
            assert_eq!(rodrigues_jacobi(&j, n).unwrap(), js[n - 1], "jacobi n={n}");
            assert_eq!(rodrigues_laguerre(&l, n).unwrap(), ls[n - 1], "laguerre n={n}");
        }
    }

    #[test]
    fn laguerre_recurrences() {
        for k in [int(1), rat(3, 2), int(5)] {
            let l = laguerre_params(k).unwrap();
            for n in 1..=10 {
                assert!(recurrence_check_laguerre(&l, n).holds());
                assert!(laguerre_reverse_identity(&l, n).is_zero());
            }
        }
    }

    #[test]
    fn jacobi_recurrence_and_space() {
        let p = jac(int(2), int(4));
        for n in 1..=8 {
            let r = recurrence_check_jacobi(&p, n, true).unwrap();
            assert!(r.holds(), "n={n}");
            assert!(r.corrected.is_none());
            // the shape (2,3,2) leaves extra freedom for small n only
            let dim = r.annihilator_dim.unwrap();
            assert_eq!(dim, if n < 4 { 5 - n } else { 1 }, "n={n}");
        }
    }

    #[test]
    fn reconciliation_recovers_a_broken_row() {
        let p = jac(int(2), int(4));
        let n = 5;
        let ys = x1_jacobi_seq(&p, n + 2).unwrap();
        let good = jacobi_recurrence_row(&p, n).unwrap();
        let basis = annihilators(&[&ys[n + 1], &ys[n], &ys[n - 1]], [2, 3, 2]);
        assert_eq!(basis.len(), 1);
        let s = good.c2.leading().unwrap().clone() / basis[0].c2.leading().unwrap().clone();
        assert_eq!(basis[0].c1.scale(&s), good.c1);
        assert_eq!(basis[0].c0.scale(&s), good.c0);
    }

    #[test]
    fn forward_solve() {
        for params in [
            Params::from(jac(int(2), int(4))),
            Params::from(jac(rat(-1, 4), rat(-1, 2))),
            Params::from(laguerre_params(rat(3, 2)).unwrap()),
        ] {
            assert_eq!(recurrence_sequence(&params, 10).unwrap(), params.x1_seq(10).unwrap());
        }
    }

    #[test]
    fn nullspace_small() {
        // x + y = 0 in two unknowns
        let ns = nullspace(vec![vec![int(1), int(1)]], 2);
        assert_eq!(ns, vec![vec![int(-1), int(1)]]);
    }
}
