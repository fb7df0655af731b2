//! Exact real-root isolation by Sturm sequences, float refinement, and the
//! zero-location checks for both families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::ratfun::QPoly;
use crate::scalar::{int, ratio_to_f64, Field, Rational};
use crate::x1::{Family, Params};

/// A real root in `(lo, hi]`; `lo == hi` means the root is known exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
    /// Square-free factor the root belongs to, when known.
    pub factor: Option<QPoly>,
}

impl RootInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        RootInterval { lo, hi, multiplicity: 1, factor: None }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn with(&self, lo: Rational, hi: Rational) -> Self {
        RootInterval { lo, hi, multiplicity: self.multiplicity, factor: self.factor.clone() }
    }
}

/// Scales by a positive constant so coefficients stay small; signs survive.
fn shrink(p: &QPoly) -> QPoly {
    let pp = p.primitive_part();
    match (p.leading(), pp.leading()) {
        (Some(a), Some(b)) if a.is_negative() != b.is_negative() => -&pp,
        _ => pp,
    }
}

/// `p, p', -rem(p, p'), ...` for a square-free `p`.
pub fn sturm_sequence(p: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![shrink(p)];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(shrink(&p.derivative()));
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(shrink(&-&r));
    }
    seq
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sign of `p(x)`, evaluated homogeneously over the integers to avoid a gcd
/// per Horner step.
fn sign_at(p: &QPoly, x: &Rational) -> i32 {
    let Some(n) = p.degree() else { return 0 };
    let l = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let (num, den) = (x.numer(), x.denom());
    let mut acc = ints[n].clone();
    let mut qpow = BigInt::one();
    for a in ints[..n].iter().rev() {
        qpow *= den;
        acc = acc * num + a * &qpow;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn variations_at(seq: &[QPoly], x: &Rational) -> usize {
    variations(seq.iter().map(|q| sign_at(q, x)))
}

fn variations_at_infinity(seq: &[QPoly], positive: bool) -> usize {
    variations(seq.iter().map(|q| {
        let s = q.leading().map_or(0, Field::sign);
        let odd = q.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd { -s } else { s }
    }))
}

/// Number of distinct real roots.
pub fn real_root_count(p: &QPoly) -> usize {
    let seq = sturm_sequence(&p.square_free_part());
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Number of distinct real roots of a square-free `p` in `(lo, hi]`.
fn count_in(seq: &[QPoly], lo: &Rational, hi: &Rational) -> usize {
    variations_at(seq, lo) - variations_at(seq, hi)
}

/// `1 + max |c_i / c_n|`: every real root lies strictly inside.
pub fn cauchy_bound(p: &QPoly) -> Rational {
    let lead = Signed::abs(&p.leading().cloned().unwrap_or_else(|| int(1)));
    let n = p.degree().unwrap_or(0);
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| Signed::abs(c) / lead.clone())
        .fold(int(0), |a, b| if b > a { b } else { a });
    m + int(1)
}

/// Square-free factors `(f_i, i)` with `p = const * prod f_i^i` (Yun).
pub fn square_free_factors(p: &QPoly) -> Vec<(QPoly, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &nb.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

fn isolate_square_free(f: &QPoly, multiplicity: usize, out: &mut Vec<RootInterval>) {
    let seq = sturm_sequence(f);
    let bound = cauchy_bound(f);
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match count_in(&seq, &lo, &hi) {
            0 => {}
            1 => {
                let lo = if sign_at(f, &hi) == 0 { hi.clone() } else { lo };
                out.push(RootInterval { lo, hi, multiplicity, factor: Some(f.clone()) });
            }
            _ => {
                let mid = (lo.clone() + hi.clone()) / int(2);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
}

/// Disjoint intervals, one per distinct real root, sorted ascending. Each
/// holds its root in `(lo, hi]`, or exactly when `lo == hi`.
pub fn sturm_isolate(p: &QPoly) -> Vec<RootInterval> {
    let mut found = Vec::new();
    for (f, m) in square_free_factors(p) {
        isolate_square_free(&f, m, &mut found);
    }
    // factors of different multiplicity may produce overlapping intervals
    loop {
        found.sort_by(|a, b| a.lo.cmp(&b.lo));
        let Some(i) = (1..found.len()).find(|&i| found[i - 1].hi > found[i].lo) else {
            break;
        };
        for j in [i - 1, i] {
            let f = found[j].factor.clone().expect("set above");
            found[j] = narrow(&f, &found[j]);
        }
    }
    found
}

/// Halves an isolating interval of a root of the square-free `f`.
fn narrow(f: &QPoly, iv: &RootInterval) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let mid = (iv.lo.clone() + iv.hi.clone()) / int(2);
    let sm = sign_at(f, &mid);
    if sm == 0 {
        return iv.with(mid.clone(), mid);
    }
    if sm * sign_at(f, &iv.hi) < 0 {
        iv.with(mid, iv.hi.clone())
    } else {
        iv.with(iv.lo.clone(), mid)
    }
}

/// Float root in an isolating interval: exact bisection to a short bracket,
/// then Newton guarded by float bisection.
pub fn refine(p: &QPoly, iv: &RootInterval, tol: f64) -> f64 {
    if iv.is_exact() {
        return ratio_to_f64(&iv.lo);
    }
    let sf = iv.factor.clone().unwrap_or_else(|| p.square_free_part());
    let mut cur = iv.clone();
    for _ in 0..24 {
        if ratio_to_f64(&(cur.hi.clone() - cur.lo.clone())) < 1e-6 {
            break;
        }
        cur = narrow(&sf, &cur);
        if cur.is_exact() {
            return ratio_to_f64(&cur.lo);
        }
    }
    let f = sf.to_f64();
    let df = f.derivative();
    let (mut lo, mut hi) = (ratio_to_f64(&cur.lo), ratio_to_f64(&cur.hi));
    // hi is never a root of a non-exact interval
    let hi_sign = f.at(hi).signum();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f.at(x);
        if fx == 0.0 {
            return x;
        }
        if fx.signum() == hi_sign {
            hi = x;
        } else {
            lo = x;
        }
        let d = df.at(x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - x).abs() <= tol * x.abs().max(1.0) || hi - lo <= tol * x.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootReport {
    pub family: Family,
    pub n: usize,
    /// Refined roots in the reported orientation, ascending.
    pub roots: Vec<f64>,
    /// Roots in `(-1, 1)` (Jacobi) or `[0, inf)` (Laguerre).
    pub inside: usize,
    /// Roots in `(-inf, b)`, with `b = -k` for Laguerre.
    pub beyond: usize,
    /// Roots outside `[-1, 1]` (Jacobi) or in `(-inf, 0)` (Laguerre).
    pub outside: usize,
    pub total_real: usize,
    pub all_simple: bool,
    /// The member does not vanish at `b` (checked exactly).
    pub nonzero_at_b: bool,
    /// Jacobi only: `x -> -x` was applied to reach `a < 0`.
    pub mirrored: bool,
}

impl RootReport {
    /// One zero in `(-inf, b)` and `n - 1` in the orthogonality interval.
    pub fn passed(&self) -> bool {
        self.total_real == self.n
            && self.all_simple
            && self.beyond == 1
            && self.inside + 1 == self.n
            && self.nonzero_at_b
    }

    /// One zero outside the orthogonality interval and `n - 1` inside,
    /// without saying on which side.
    pub fn exterior_ok(&self) -> bool {
        self.total_real == self.n && self.all_simple && self.outside == 1 && self.inside + 1 == self.n
    }
}

/// Where an isolated root sits relative to a cut point: -1 below, 0 at, 1 above.
fn side(sf: &QPoly, iv: &RootInterval, cut: &Rational) -> i32 {
    let mut cur = iv.clone();
    loop {
        if cur.hi < *cut {
            return -1;
        }
        if cur.lo > *cut {
            return 1;
        }
        if cur.is_exact() {
            return 0;
        }
        if sign_at(sf, cut) == 0 && cur.lo <= *cut && *cut <= cur.hi {
            return 0;
        }
        cur = narrow(cur.factor.as_ref().unwrap_or(sf), &cur);
    }
}

/// Counts roots against the family's zero-location statement.
///
/// Jacobi members with `a > 0` are reflected by `x -> -x` first, which swaps
/// `alpha` and `beta` and negates `a`, `b`, `c`.
pub fn zero_location_check(params: &Params<Rational>, n: usize) -> Result<RootReport> {
    let poly = params.x1(n)?.poly;
    let nonzero_at_b = !Field::is_zero(&poly.eval(params.b()));
    let (poly, b, mirrored) = match params {
        Params::Jacobi(p) if p.a > int(0) => (poly.mirror(), -p.b.clone(), true),
        _ => (poly, params.b().clone(), false),
    };
    let ivs = sturm_isolate(&poly);
    let all_simple = ivs.iter().all(|iv| iv.multiplicity == 1);
    let total_real = ivs.iter().map(|iv| iv.multiplicity).sum();
    let sf = poly.square_free_part();
    let (lo, hi) = match params {
        Params::Jacobi(_) => (int(-1), int(1)),
        Params::Laguerre(_) => (int(0), int(0)),
    };
    let (mut inside, mut beyond, mut outside) = (0, 0, 0);
    for iv in &ivs {
        let m = iv.multiplicity;
        if side(&sf, iv, &b) < 0 {
            beyond += m;
        }
        let in_interval = match params {
            Params::Jacobi(_) => side(&sf, iv, &lo) > 0 && side(&sf, iv, &hi) < 0,
            Params::Laguerre(_) => side(&sf, iv, &lo) >= 0,
        };
        if in_interval {
            inside += m;
        } else if side(&sf, iv, &lo) < 0 || side(&sf, iv, &hi) > 0 {
            outside += m;
        }
    }
    let roots = ivs.iter().map(|iv| refine(&poly, iv, 1e-14)).collect();
    Ok(RootReport {
        family: params.family(),
        n,
        roots,
        inside,
        beyond,
        outside,
        total_real,
        all_simple,
        nonzero_at_b,
        mirrored,
    })
}

/// Whether the zeros of degree `n` in the orthogonality interval interlace
/// with those of degree `n + 1`. Informational only.
pub fn interlacing_probe(params: &Params<Rational>, n: usize) -> Result<bool> {
    let interior = |m: usize| -> Result<Vec<f64>> {
        let r = zero_location_check(params, m)?;
        let (lo, hi) = match params.family() {
            Family::Jacobi => (-1.0, 1.0),
            Family::Laguerre => (0.0, f64::INFINITY),
        };
        Ok(r.roots.into_iter().filter(|&x| x > lo && x < hi).collect())
    };
    let (a, b) = (interior(n)?, interior(n + 1)?);
    if b.len() != a.len() + 1 {
        return Ok(false);
    }
    Ok(a.iter().enumerate().all(|(i, &x)| b[i] < x && x < b[i + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::x1::{jacobi_params, laguerre_params};

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn isolates_sqrt3() {
        let p = q(&[-3, 0, 1]);
        let ivs = sturm_isolate(&p);
        assert_eq!(ivs.len(), 2);
        let r: Vec<f64> = ivs.iter().map(|iv| refine(&p, iv, 1e-15)).collect();
        assert!((r[0] + 3f64.sqrt()).abs() < 1e-12);
        assert!((r[1] - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn refine_on_given_bracket() {
        let p = q(&[-3, 0, 1]);
        let iv = RootInterval::new(int(1), int(2));
        assert!((refine(&p, &iv, 1e-15) - 1.7320508075688772).abs() < 1e-12);
        let iv = RootInterval::new(int(-2), int(-1));
        assert!((refine(&p, &iv, 1e-15) + 1.7320508075688772).abs() < 1e-12);
    }

    #[test]
    fn linear_and_repeated() {
        let ivs = sturm_isolate(&q(&[-4, 1]));
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].lo < int(4) && int(4) <= ivs[0].hi || ivs[0].is_exact());
        let p = q(&[-2, -1]);
        assert_eq!(refine(&p, &sturm_isolate(&p)[0], 1e-15), -2.0);
        let sq = q(&[-3, 1]).pow(2);
        let ivs = sturm_isolate(&sq);
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].multiplicity, 2);
    }

    #[test]
    fn mixed_multiplicities() {
        // (x-1)^3 (x-2) (x+5)^2
        let p = &(&q(&[-1, 1]).pow(3) * &q(&[-2, 1])) * &q(&[5, 1]).pow(2);
        let ivs = sturm_isolate(&p);
        let m: Vec<usize> = ivs.iter().map(|iv| iv.multiplicity).collect();
        assert_eq!(m, vec![2, 3, 1]);
        let r: Vec<f64> = ivs.iter().map(|iv| refine(&p, iv, 1e-15)).collect();
        assert!((r[0] + 5.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-12 && (r[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn yun_factors() {
        let p = (&q(&[-1, 1]).pow(2) * &q(&[1, 0, 1])).scale(&int(7));
        let f = square_free_factors(&p);
        assert_eq!(f, vec![(q(&[1, 0, 1]), 1), (q(&[-1, 1]), 2)]);
    }

    #[test]
    fn laguerre_locations() {
        let l = Params::from(laguerre_params(int(1)).unwrap());
        let r = zero_location_check(&l, 2).unwrap();
        assert_eq!((r.beyond, r.inside), (1, 1));
        let r = zero_location_check(&l, 1).unwrap();
        assert_eq!((r.beyond, r.inside), (1, 0));
        assert_eq!(r.roots, vec![-2.0]);
    }

    #[test]
    fn jacobi_locations() {
        let j = Params::from(jacobi_params(int(4), int(2)).unwrap());
        let r = zero_location_check(&j, 2).unwrap();
        assert!(!r.mirrored);
        assert_eq!((r.beyond, r.inside), (1, 1));
        let j = Params::from(jacobi_params(int(2), int(4)).unwrap());
        for n in 1..=10 {
            let r = zero_location_check(&j, n).unwrap();
            assert!(r.mirrored);
            assert!(r.passed() && r.exterior_ok(), "{r:?}");
        }
    }

    #[test]
    fn negative_parameters_break_the_side_statement() {
        // a = -1/8 < 0 but b = 3 > 1: the exterior zero sits above b
        let j = Params::from(jacobi_params(rat(-1, 4), rat(-1, 2)).unwrap());
        for n in 1..=10 {
            let r = zero_location_check(&j, n).unwrap();
            assert!(!r.mirrored);
            assert!(r.exterior_ok(), "{r:?}");
            assert_eq!(r.passed(), n <= 2, "n={n}");
        }
    }

    proptest::proptest! {
        #[test]
        fn integer_sign_matches_rational_eval(
            c in proptest::collection::vec((-20i64..20, 1i64..7), 1..8),
            x in (-30i64..30, 1i64..9),
        ) {
            let p = QPoly::new(c.iter().map(|&(n, d)| rat(n, d)).collect());
            let x = rat(x.0, x.1);
            proptest::prop_assert_eq!(sign_at(&p, &x), p.eval(&x).sign());
        }
    }
}
