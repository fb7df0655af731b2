//! Gauss rules, weighted inner products with node-doubling error control,
//! Gram–Schmidt, norm checks and the completeness proxy.
//!
//! Every [`WeightSpec`] in the catalogue is integrated against its classical
//! part with a native Gauss rule; the remaining factor `1/(x-b)^2` is smooth
//! on the interval and goes into the integrand.

use std::sync::OnceLock;

use statrs::function::gamma::ln_gamma;

use crate::classical::{c_n, gamma, k_n};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::operators::{ladder_a, ladder_b, ClassicalPart, WeightSpec};
use crate::poly::Poly;
use crate::ratfun::{QPoly, RatFun};
use crate::scalar::{Field, Rational};
use crate::x1::{Family, Params};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RuleKind {
    GaussLegendre,
    GaussJacobi { alpha: f64, beta: f64 },
    GaussLaguerre { k: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: RuleKind,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum w_i h(x_i)`.
    pub fn apply(&self, h: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * h(x)).sum()
    }
}

/// Gauss–Legendre rule by Newton iteration on `P_m`.
pub fn gauss_legendre(m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::InvalidParams("m >= 1 required".into()));
    }
    let legendre = |x: f64| -> (f64, f64) {
        let (mut p0, mut p1) = (1.0, x);
        for j in 2..=m {
            let jf = j as f64;
            let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
            p0 = p1;
            p1 = p2;
        }
        // derivative from P_m and P_{m-1}
        (p1, m as f64 * (x * p1 - p0) / (x * x - 1.0))
    };
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence(format!("Legendre node {i} of {m}")));
        }
        let (_, dp) = legendre(x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    Ok(QuadratureRule { nodes, weights, kind: RuleKind::GaussLegendre })
}

/// Nodes and weights from the Jacobi matrix with diagonal `diag`, off-diagonal
/// `off` (`off[i]` couples rows `i` and `i+1`) and total mass `mu0`.
///
/// Implicit QL iteration that carries only the first component of each
/// eigenvector.
fn golub_welsch(mut d: Vec<f64>, off: &[f64], mu0: f64, kind: RuleKind) -> Result<QuadratureRule> {
    let n = d.len();
    let mut e = off.to_vec();
    e.resize(n, 0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= f64::EPSILON * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence(format!("tridiagonal eigenvalue {l} of {n}")));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                if f.abs() >= g.abs() {
                    c = g / f;
                    let r = c.hypot(1.0);
                    e[i + 1] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    let r = s.hypot(1.0);
                    e[i + 1] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i + 1] - p;
                let r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut pairs: Vec<(f64, f64)> = d.into_iter().zip(z).map(|(x, v)| (x, mu0 * v * v)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule { nodes, weights, kind })
}

/// Gauss rule for `x^k e^{-x}` on `[0, inf)`.
pub fn gauss_laguerre_gen(k: f64, m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::InvalidParams("m >= 1 required".into()));
    }
    if k <= -1.0 {
        return Err(Error::InvalidParams("k > -1 required".into()));
    }
    let diag = (0..m).map(|i| 2.0 * i as f64 + k + 1.0).collect();
    let off: Vec<f64> = (1..m).map(|i| (i as f64 * (i as f64 + k)).sqrt()).collect();
    golub_welsch(diag, &off, gamma(k + 1.0)?, RuleKind::GaussLaguerre { k })
}

/// Gauss rule for `(1-x)^alpha (1+x)^beta` on `[-1, 1]`.
pub fn gauss_jacobi(alpha: f64, beta: f64, m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::InvalidParams("m >= 1 required".into()));
    }
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::InvalidParams("alpha > -1 and beta > -1 required".into()));
    }
    let s = alpha + beta;
    let diag = (0..m)
        .map(|i| {
            if i == 0 {
                (beta - alpha) / (s + 2.0)
            } else {
                let t = 2.0 * i as f64 + s;
                (beta * beta - alpha * alpha) / (t * (t + 2.0))
            }
        })
        .collect();
    let off: Vec<f64> = (1..m)
        .map(|i| {
            let f = i as f64;
            let t = 2.0 * f + s;
            if i == 1 {
                (4.0 * (1.0 + alpha) * (1.0 + beta) / (t * t * (t + 1.0))).sqrt()
            } else {
                (4.0 * f * (f + alpha) * (f + beta) * (f + s) / (t * t * (t + 1.0) * (t - 1.0))).sqrt()
            }
        })
        .collect();
    let log_mu0 = (s + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
        - ln_gamma(s + 2.0);
    golub_welsch(diag, &off, log_mu0.exp(), RuleKind::GaussJacobi { alpha, beta })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InnerProductEstimate {
    pub value: f64,
    /// `|I_{2m} - I_m|` at the accepted level.
    pub error_estimate: f64,
    pub nodes: usize,
}

const LEVELS: usize = 9;
const M0: usize = 16;

/// Integrates against one weight, caching the rule at each doubling level.
#[derive(Debug)]
pub struct Integrator {
    spec: WeightSpec,
    part: ClassicalPart,
    rules: [OnceLock<Result<QuadratureRule>>; LEVELS],
    pub rel_tol: f64,
}

impl Integrator {
    pub fn new(spec: &WeightSpec) -> Result<Self> {
        let part = spec.classical_part().ok_or_else(|| {
            Error::InvalidParams(format!("no Gauss rule for weight {:?}", spec.kind))
        })?;
        Ok(Integrator { spec: spec.clone(), part, rules: Default::default(), rel_tol: 1e-10 })
    }

    pub fn for_params<T: Field>(params: &Params<T>) -> Result<Self> {
        Self::new(&WeightSpec::for_params(params))
    }

    pub fn spec(&self) -> &WeightSpec {
        &self.spec
    }

    /// Rule with `16 * 2^level` nodes.
    pub fn rule(&self, level: usize) -> Result<&QuadratureRule> {
        let m = M0 << level;
        self.rules[level]
            .get_or_init(|| match self.part {
                ClassicalPart::Jacobi(a, b) => gauss_jacobi(a, b, m),
                ClassicalPart::Laguerre(k) => gauss_laguerre_gen(k, m),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn level_sum(&self, level: usize, h: &dyn Fn(f64) -> f64) -> Result<(f64, f64)> {
        let rule = self.rule(level)?;
        let mut sum = 0.0;
        let mut abs = 0.0;
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let v = w * h(x) * self.spec.modifier(x);
            sum += v;
            abs += v.abs();
        }
        Ok((sum, abs))
    }

    /// `int h W` with doubling until two levels agree relative to
    /// `int |h| W`.
    pub fn integrate(&self, h: impl Fn(f64) -> f64) -> Result<InnerProductEstimate> {
        self.integrate_scaled(h, 0.0)
    }

    /// As [`Integrator::integrate`], with an extra absolute `norm_scale` for
    /// integrands that are small through cancellation.
    pub fn integrate_scaled(&self, h: impl Fn(f64) -> f64, norm_scale: f64) -> Result<InnerProductEstimate> {
        let (mut prev, _) = self.level_sum(0, &h)?;
        for level in 1..LEVELS {
            let (value, scale) = self.level_sum(level, &h)?;
            let err = (value - prev).abs();
            if err <= self.rel_tol * (value.abs() + scale + norm_scale) {
                return Ok(InnerProductEstimate { value, error_estimate: err, nodes: M0 << level });
            }
            prev = value;
        }
        Err(Error::NoConvergence(format!(
            "inner product not converged at {} nodes",
            M0 << (LEVELS - 1)
        )))
    }

    pub fn inner(&self, f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> Result<InnerProductEstimate> {
        self.integrate(|x| f(x) * g(x))
    }

    pub fn inner_poly(&self, f: &Poly<f64>, g: &Poly<f64>) -> Result<f64> {
        Ok(self.inner(|x| f.at(x), |x| g.at(x))?.value)
    }
}

/// `<f, g>` under `spec`.
pub fn inner_product(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    spec: &WeightSpec,
) -> Result<InnerProductEstimate> {
    Integrator::new(spec)?.inner(f, g)
}

/// Float snapshot of the parameters needed to evaluate members pointwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MemberEval {
    pub family: Family,
    /// `(alpha, beta)` or `(k, 0)`.
    pub p1: f64,
    pub p2: f64,
    pub b: f64,
}

impl MemberEval {
    pub fn new<T: Field>(params: &Params<T>) -> Self {
        match params {
            Params::Jacobi(p) => MemberEval {
                family: Family::Jacobi,
                p1: p.alpha.to_f64(),
                p2: p.beta.to_f64(),
                b: p.b.to_f64(),
            },
            Params::Laguerre(p) => {
                MemberEval { family: Family::Laguerre, p1: p.k.to_f64(), p2: 0.0, b: p.b.to_f64() }
            }
        }
    }

    /// Classical values `y_0(x), ..., y_nmax(x)` by the three-term recurrence.
    pub fn classical(&self, nmax: usize, x: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(nmax + 1);
        out.push(1.0);
        if nmax == 0 {
            return out;
        }
        match self.family {
            Family::Jacobi => {
                let (a, b) = (self.p1, self.p2);
                let s = a + b;
                out.push((a - b) / 2.0 + (s + 2.0) / 2.0 * x);
                for n in 2..=nmax {
                    let nf = n as f64;
                    let m = 2.0 * nf + s;
                    let den = 2.0 * nf * (nf + s) * (m - 2.0);
                    let c1 = (m - 1.0) * (m * (m - 2.0) * x + a * a - b * b);
                    let c2 = 2.0 * (nf + a - 1.0) * (nf + b - 1.0) * m;
                    out.push((c1 * out[n - 1] - c2 * out[n - 2]) / den);
                }
            }
            Family::Laguerre => {
                let k = self.p1;
                out.push(k + 1.0 - x);
                for n in 2..=nmax {
                    let nf = n as f64;
                    let next = ((2.0 * nf + k - 1.0 - x) * out[n - 1] - (nf + k - 1.0) * out[n - 2]) / nf;
                    out.push(next);
                }
            }
        }
        out
    }

    /// X1 values for degrees `1..=nmax` (index 0 is degree 1).
    pub fn members(&self, nmax: usize, x: f64) -> Vec<f64> {
        let cls = self.classical(nmax.saturating_sub(1), x);
        let prev2 = |n: usize| if n >= 2 { cls[n - 2] } else { 0.0 };
        (1..=nmax)
            .map(|n| match self.family {
                Family::Jacobi => {
                    let den = self.p1 + self.p2 + 2.0 * n as f64 - 2.0;
                    -0.5 * (x - self.b) * cls[n - 1] + (self.b * cls[n - 1] - prev2(n)) / den
                }
                Family::Laguerre => -(x + self.p1 + 1.0) * cls[n - 1] + prev2(n),
            })
            .collect()
    }

    pub fn member(&self, n: usize, x: f64) -> f64 {
        self.members(n, x)[n - 1]
    }
}

/// Gram matrix `<y_i, y_j>` for degrees `1..=nmax`.
pub fn gram_matrix<T: Field>(params: &Params<T>, nmax: usize, exec: Exec) -> Result<Vec<Vec<f64>>> {
    let integ = Integrator::for_params(params)?;
    let ev = MemberEval::new(params);
    let pairs: Vec<(usize, usize)> = (1..=nmax).flat_map(|i| (i..=nmax).map(move |j| (i, j))).collect();
    let vals = exec.try_map(pairs.clone(), |(i, j)| {
        integ.integrate(|x| {
            let v = ev.members(j, x);
            v[i - 1] * v[j - 1]
        })
    })?;
    let mut g = vec![vec![0.0; nmax]; nmax];
    for ((i, j), v) in pairs.into_iter().zip(vals) {
        g[i - 1][j - 1] = v.value;
        g[j - 1][i - 1] = v.value;
    }
    Ok(g)
}

/// `max |G_ij| / sqrt(G_ii G_jj)` over `i != j`.
pub fn max_normalized_offdiag(g: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            worst = worst.max(g[i][j].abs() / (g[i][i] * g[j][j]).sqrt());
        }
    }
    worst
}

/// How each output of [`gram_schmidt`] is scaled.
#[derive(Clone, Debug, PartialEq)]
pub enum Normalization {
    /// Output `i` takes the value `targets[i]` at `x`.
    ValueAt { x: f64, targets: Vec<f64> },
    /// Output `i` has leading coefficient `targets[i]`.
    Leading(Vec<f64>),
}

impl Normalization {
    /// The family's own convention for degrees `1..=nmax`.
    pub fn for_params<T: Field>(params: &Params<T>, nmax: usize) -> Self {
        match params {
            Params::Jacobi(p) => Normalization::ValueAt {
                x: 1.0,
                targets: (1..=nmax).map(|n| crate::x1::jacobi_norm_value(p, n).to_f64()).collect(),
            },
            Params::Laguerre(_) => Normalization::Leading(
                (1..=nmax).map(crate::x1::laguerre_leading::<f64>).collect(),
            ),
        }
    }
}

/// Modified Gram–Schmidt with one reorthogonalization pass.
pub fn gram_schmidt(integ: &Integrator, basis: &[Poly<f64>], norm: &Normalization) -> Result<Vec<Poly<f64>>> {
    let mut out: Vec<Poly<f64>> = Vec::with_capacity(basis.len());
    let mut sq: Vec<f64> = Vec::with_capacity(basis.len());
    for (i, u) in basis.iter().enumerate() {
        let start = integ.inner_poly(u, u)?;
        let mut v = u.clone();
        for _pass in 0..2 {
            for (q, qq) in out.iter().zip(&sq) {
                let c = integ.inner_poly(&v, q)? / qq;
                v = &v - &q.scale(&c);
            }
        }
        let vv = integ.inner_poly(&v, &v)?;
        if vv.is_nan() || vv <= 1e-24 * start {
            return Err(Error::IllConditioned(format!("basis vector {i} is numerically dependent")));
        }
        let current = match norm {
            Normalization::ValueAt { x, .. } => v.at(*x),
            Normalization::Leading(_) => v.leading().copied().unwrap_or(0.0),
        };
        let target = match norm {
            Normalization::ValueAt { targets, .. } | Normalization::Leading(targets) => targets[i],
        };
        if current == 0.0 {
            return Err(Error::IllConditioned(format!("normalization undefined for output {i}")));
        }
        let s = target / current;
        sq.push(vv * s * s);
        out.push(v.scale(&s));
    }
    Ok(out)
}

/// Which of the two candidate closed forms the quadrature value matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Printed,
    Inverted,
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormReport {
    pub n: usize,
    pub quadrature: f64,
    pub printed: f64,
    pub inverted: f64,
    pub verdict: Orientation,
}

impl NormReport {
    pub fn rel_err(&self, candidate: f64) -> f64 {
        (self.quadrature - candidate).abs() / self.quadrature.abs()
    }
}

/// Compares the quadrature norm of the degree-`n` member with
///
/// * Jacobi: `r C_{n-1}` and `C_{n-1}/r`, `r = (alpha+n)(beta+n) / (4 (alpha+n-1)(beta+n-1))`
/// * Laguerre: `r K_{n-1}` and `K_{n-1}/r`, `r = (k+n-1)/(k+n)`
///
/// where the first form in each pair is the printed one.
pub fn norm_check<T: Field>(params: &Params<T>, n: usize, rel_tol: f64) -> Result<NormReport> {
    assert!(n >= 1);
    let integ = Integrator::for_params(params)?;
    let ev = MemberEval::new(params);
    let quadrature = integ.integrate(|x| ev.member(n, x).powi(2))?.value;
    let nf = n as f64;
    let (r, base) = match params {
        Params::Jacobi(_) => {
            let (a, b) = (ev.p1, ev.p2);
            ((a + nf) * (b + nf) / (4.0 * (a + nf - 1.0) * (b + nf - 1.0)), c_n(a, b, n - 1)?)
        }
        Params::Laguerre(_) => {
            let k = ev.p1;
            ((k + nf - 1.0) / (k + nf), k_n(k, n - 1)?)
        }
    };
    let printed = r * base;
    let inverted = base / r;
    let hit = |v: f64| (quadrature - v).abs() <= rel_tol * quadrature.abs();
    let verdict = match (hit(printed), hit(inverted)) {
        (true, true) => Orientation::Both,
        (true, false) => Orientation::Printed,
        (false, true) => Orientation::Inverted,
        (false, false) => Orientation::Neither,
    };
    Ok(NormReport { n, quadrature, printed, inverted, verdict })
}

/// `r_N = || f - sum_{n<=N} <f,y_n>/<y_n,y_n> y_n ||` for `N = 1..=nmax`.
pub fn completeness_proxy<T: Field>(
    params: &Params<T>,
    f: impl Fn(f64) -> f64 + Sync,
    nmax: usize,
    exec: Exec,
) -> Result<Vec<f64>> {
    let integ = Integrator::for_params(params)?;
    let ev = MemberEval::new(params);
    let ff = integ.integrate(|x| f(x).powi(2))?.value;
    let coefs = exec.try_map_range(1, nmax + 1, |n| -> Result<f64> {
        let num = integ.integrate(|x| f(x) * ev.member(n, x))?.value;
        let den = integ.integrate(|x| ev.member(n, x).powi(2))?.value;
        Ok(num / den)
    })?;
    exec.try_map_range(1, nmax + 1, |big_n| -> Result<f64> {
        let r2 = integ.integrate_scaled(|x| {
            let v = ev.members(big_n, x);
            let proj: f64 = v.iter().zip(&coefs).map(|(y, c)| y * c).sum();
            (f(x) - proj).powi(2)
        }, ff)?;
        Ok(r2.value.max(0.0).sqrt())
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdjointReport {
    /// `<A f, g>` under the parameter-raised weight.
    pub lhs: f64,
    /// `<f, B g>` under the original weight.
    pub rhs: f64,
}

impl AdjointReport {
    pub fn rel_diff(&self) -> f64 {
        let scale = self.lhs.abs().max(self.rhs.abs()).max(f64::MIN_POSITIVE);
        (self.lhs - self.rhs).abs() / scale
    }
}

/// `<A f, g>_{shifted} = <f, B g>`; `None` when `A f` or `B g` is not a
/// polynomial.
pub fn adjoint_relation_check(params: &Params<Rational>, f: &QPoly, g: &QPoly) -> Result<Option<AdjointReport>> {
    let af = ladder_a(params, &RatFun::from_poly(f.clone())).as_polynomial();
    let bg = ladder_b(params, &RatFun::from_poly(g.clone())).as_polynomial();
    let (Some(af), Some(bg)) = (af, bg) else {
        return Ok(None);
    };
    let here = Integrator::for_params(params)?;
    let up = Integrator::for_params(&params.shifted(1)?)?;
    let lhs = up.inner_poly(&af.to_f64(), &g.to_f64())?;
    let rhs = here.inner_poly(&f.to_f64(), &bg.to_f64())?;
    Ok(Some(AdjointReport { lhs, rhs }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::x1::{jacobi_params, laguerre_params};
    use approx::assert_relative_eq;

    #[test]
    fn legendre_small() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!((r.nodes.clone(), r.weights.clone()), (vec![0.0], vec![2.0]));
        let r = gauss_legendre(2).unwrap();
        assert_relative_eq!(r.nodes[1], 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(r.weights[0], 1.0, epsilon = 1e-14);
        let r = gauss_legendre(3).unwrap();
        assert_relative_eq!(r.apply(|x| x.powi(4)), 0.4, epsilon = 1e-14);
    }

    #[test]
    fn laguerre_small() {
        let r = gauss_laguerre_gen(0.0, 1).unwrap();
        assert_relative_eq!(r.nodes[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(r.weights[0], 1.0, epsilon = 1e-15);
        let r = gauss_laguerre_gen(1.0, 2).unwrap();
        assert_relative_eq!(r.apply(|x| x), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn laguerre_exactness() {
        let r = gauss_laguerre_gen(1.0, 20).unwrap();
        for j in 0..40 {
            let exact = gamma(j as f64 + 2.0).unwrap();
            assert_relative_eq!(r.apply(|x| x.powi(j)), exact, max_relative = 1e-11);
        }
    }

    #[test]
    fn jacobi_exactness() {
        let (a, b) = (2.0, 4.0);
        let r = gauss_jacobi(a, b, 12).unwrap();
        // the rule must reproduce the classical norms
        for n in 0..12 {
            let ev = MemberEval { family: Family::Jacobi, p1: a, p2: b, b: 0.0 };
            let v = r.apply(|x| ev.classical(n, x)[n].powi(2));
            assert_relative_eq!(v, c_n(a, b, n).unwrap(), max_relative = 1e-12);
        }
        assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn laguerre_inner_products() {
        let p = Params::from(laguerre_params(1.0f64).unwrap());
        let integ = Integrator::for_params(&p).unwrap();
        let ev = MemberEval::new(&p);
        let v11 = integ.integrate(|x| ev.member(1, x).powi(2)).unwrap();
        assert_relative_eq!(v11.value, 2.0, max_relative = 1e-9);
        let v12 = integ.inner(|x| ev.member(1, x), |x| ev.member(2, x)).unwrap();
        assert!(v12.value.abs() < 1e-10);
        let classical = WeightSpec::classical_laguerre(&1.0);
        assert_relative_eq!(inner_product(|_| 1.0, |_| 1.0, &classical).unwrap().value, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn member_eval_matches_exact() {
        for params in [
            Params::from(jacobi_params(int(2), int(4)).unwrap()),
            Params::from(laguerre_params(rat(3, 2)).unwrap()),
        ] {
            let exact = params.x1_seq(10).unwrap();
            let ev = MemberEval::new(&params);
            for x in [-0.7, 0.1, 0.9, 2.5] {
                let v = ev.members(10, x);
                for (p, y) in exact.iter().zip(&v) {
                    assert_relative_eq!(p.to_f64().at(x), *y, max_relative = 1e-11, epsilon = 1e-11);
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_reproduces_members() {
        let p = Params::from(laguerre_params(int(1)).unwrap());
        let integ = Integrator::for_params(&p).unwrap();
        let basis: Vec<Poly<f64>> = (1..=3).map(|i| p.flag_basis(i).to_f64()).collect();
        let out = gram_schmidt(&integ, &basis, &Normalization::for_params(&p, 3)).unwrap();
        assert_relative_eq!(out[0].coeff(0), -2.0, epsilon = 1e-10);
        assert_relative_eq!(out[0].coeff(1), -1.0, epsilon = 1e-10);
        assert_relative_eq!(out[1].coeff(0), -3.0, epsilon = 1e-9);
    }

    #[test]
    fn norm_orientations() {
        let l = Params::from(laguerre_params(int(1)).unwrap());
        let r = norm_check(&l, 1, 1e-7).unwrap();
        assert_relative_eq!(r.quadrature, 2.0, max_relative = 1e-9);
        assert_relative_eq!(r.printed, 0.5, max_relative = 1e-14);
        assert_eq!(r.verdict, Orientation::Inverted);
        let j = Params::from(jacobi_params(int(2), int(4)).unwrap());
        let r = norm_check(&j, 1, 1e-7).unwrap();
        assert_relative_eq!(r.quadrature, 4.0 / 7.0, max_relative = 1e-9);
        assert_eq!(r.verdict, Orientation::Printed);
    }

    #[test]
    fn adjoint_laguerre() {
        let p = Params::from(laguerre_params(int(1)).unwrap());
        let f = QPoly::from_ints(&[-3, 0, 1]);
        let g = QPoly::from_ints(&[-3, -1]);
        let r = adjoint_relation_check(&p, &f, &g).unwrap().unwrap();
        assert!(r.rel_diff() < 1e-9, "{r:?}");
    }

    #[test]
    fn completeness_reproduces_member() {
        let p = Params::from(jacobi_params(int(2), int(4)).unwrap());
        let ev = MemberEval::new(&p);
        let r = completeness_proxy(&p, |x| ev.member(3, x), 5, Exec::Sequential).unwrap();
        assert!(r[0] > 1e-3);
        for v in &r[2..] {
            assert!(*v < 1e-9, "{r:?}");
        }
    }
}
