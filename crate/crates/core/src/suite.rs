//! Check registry: runs named suites of identity checks and assembles a
//! [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::operators::{
    factorization_check, ladder_shift_check, operator_for, pearson_check, verify_eigen, WeightSpec,
};
use crate::poly::Poly;
use crate::quadrature::{
    adjoint_relation_check, completeness_proxy, gram_matrix, gram_schmidt, norm_check, Integrator,
    Normalization, Orientation,
};
use crate::ratfun::QPoly;
use crate::report::{Case, Residual, VerificationReport};
use crate::rodrigues::{laguerre_reverse_identity, recurrence_check_jacobi, recurrence_check_laguerre, rodrigues};
use crate::roots::zero_location_check;
use crate::scalar::{Field, Rational, Scalar};
use crate::x1::{inverse_relations_check, jacobi_params, laguerre_params, x1_from_classical_3term, Family, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ode,
    Orth,
    Ladder,
    Factor,
    Rodrigues,
    Recur,
    Norms,
    Zeros,
    Pearson,
    Complete,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Ode,
        Suite::Orth,
        Suite::Ladder,
        Suite::Factor,
        Suite::Rodrigues,
        Suite::Recur,
        Suite::Norms,
        Suite::Zeros,
        Suite::Pearson,
        Suite::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ode => "ode",
            Suite::Orth => "orth",
            Suite::Ladder => "ladder",
            Suite::Factor => "factor",
            Suite::Rodrigues => "rodrigues",
            Suite::Recur => "recur",
            Suite::Norms => "norms",
            Suite::Zeros => "zeros",
            Suite::Pearson => "pearson",
            Suite::Complete => "complete",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Family parameters in whichever backend the inputs selected.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyParams {
    Exact(Params<Rational>),
    Float(Params<f64>),
}

impl AnyParams {
    /// Both values must use the same backend.
    pub fn jacobi(alpha: &Scalar, beta: &Scalar) -> Result<Self> {
        match (alpha, beta) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(AnyParams::Exact(jacobi_params(a.clone(), b.clone())?.into())),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(AnyParams::Float(jacobi_params(*a, *b)?.into())),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn laguerre(k: &Scalar) -> Result<Self> {
        match k {
            Scalar::Exact(k) => Ok(AnyParams::Exact(laguerre_params(k.clone())?.into())),
            Scalar::Float(k) => Ok(AnyParams::Float(laguerre_params(*k)?.into())),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            AnyParams::Exact(p) => p.family(),
            AnyParams::Float(p) => p.family(),
        }
    }

    pub fn backend(&self) -> &'static str {
        match self {
            AnyParams::Exact(_) => "exact",
            AnyParams::Float(_) => "float",
        }
    }

    pub fn describe(&self) -> BTreeMap<String, String> {
        let pairs = match self {
            AnyParams::Exact(p) => p.describe(),
            AnyParams::Float(p) => p.describe(),
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn exact(&self) -> Option<&Params<Rational>> {
        match self {
            AnyParams::Exact(p) => Some(p),
            AnyParams::Float(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub nmax: usize,
    /// Tolerance for quadrature-based checks; exact checks ignore it.
    pub tol: f64,
    pub exec: Exec,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { nmax: 8, tol: 1e-9, exec: Exec::default() }
    }
}

/// Runs `suite` and assembles the report. Cases come back in registry order
/// regardless of how they were scheduled.
pub fn run_suite(suite: Suite, params: &AnyParams, opts: &SuiteOptions) -> VerificationReport {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let cases: Vec<Case> = opts
        .exec
        .map(suites, |s| run_one(s, params, opts))
        .into_iter()
        .flatten()
        .collect();
    VerificationReport::new(
        suite.name(),
        &params.family().to_string(),
        params.backend(),
        params.describe(),
        opts.tol,
        cases,
    )
}

fn run_one(suite: Suite, params: &AnyParams, opts: &SuiteOptions) -> Vec<Case> {
    let fam = params.family();
    match suite {
        Suite::Orth => match params {
            AnyParams::Exact(p) => orth_cases(p, opts),
            AnyParams::Float(p) => orth_cases(p, opts),
        },
        Suite::Norms => match params {
            AnyParams::Exact(p) => norm_cases(p, opts),
            AnyParams::Float(p) => norm_cases(p, opts),
        },
        Suite::Complete => match params {
            AnyParams::Exact(p) => complete_cases(p, opts),
            AnyParams::Float(p) => complete_cases(p, opts),
        },
        exact_only => match params.exact() {
            Some(p) => match exact_only {
                Suite::Ode => ode_cases(p, opts),
                Suite::Ladder => ladder_cases(p, opts),
                Suite::Factor => factor_cases(p, opts),
                Suite::Rodrigues => rodrigues_cases(p, opts),
                Suite::Recur => recur_cases(p, opts),
                Suite::Zeros => zero_cases(p, opts),
                Suite::Pearson => pearson_cases(p),
                _ => unreachable!("float-capable suites handled above"),
            },
            None => check_ids(exact_only, fam)
                .into_iter()
                .map(|(id, anchor)| Case::new(id, anchor, None).skipped("exact-only check; float parameters given"))
                .collect(),
        },
    }
}

/// `(check_id, paper_anchor)` pairs produced by each suite.
pub fn check_ids(suite: Suite, fam: Family) -> Vec<(&'static str, &'static str)> {
    let j = fam == Family::Jacobi;
    let pick = |a: &'static str, b: &'static str| if j { a } else { b };
    match suite {
        Suite::Ode => vec![("ode.eigen", pick("eq:Jacobidiffeq", "eq:Laguerrediffeq"))],
        Suite::Orth => vec![("orth.pairwise", "eq:intorth"), ("orth.gram-schmidt", "def:kops")],
        Suite::Ladder => vec![
            ("ladder.lower", pick("eq:Aabaction", "eq:Akaction")),
            ("ladder.raise", pick("eq:Babaction", "eq:Bkaction")),
            ("ladder.adjoint", pick("sec:propJ", "eq:LagX1adjoint")),
        ],
        Suite::Factor => vec![
            ("factor.lower-raise", pick("eq:Tii", "eq:Ti")),
            ("factor.raise-lower", pick("eq:Tii2", "eq:Ti")),
        ],
        Suite::Rodrigues => vec![
            ("rodrigues", pick("sec:propJ", "eq:LagRod1")),
            ("construction.three-term", pick("eq:JacX1ord", "eq:LagX1ord")),
        ],
        Suite::Recur => {
            let mut v = vec![("recur.row", pick("sec:propJ", "eq:LagX1Rec"))];
            if !j {
                v.push(("recur.reverse", "eq:LagX1ordreverse1"));
            }
            v.push(("recur.inverse", pick("eq:JacX1ordreverse", "eq:LagX1ordreverse")));
            v
        }
        Suite::Norms => vec![
            ("norms.orientation", pick("eq:JacL2X1", "eq:X1laguerreL2")),
            ("norms.consistency", pick("eq:JacL2X1", "eq:X1laguerreL2")),
        ],
        Suite::Zeros => vec![("zeros.location", pick("prop:x1jroots", "prop:x1lroots"))],
        Suite::Pearson => vec![("pearson.x1-weight", "eq:pearson"), ("pearson.control", "eq:pearson")],
        Suite::Complete => vec![("complete.residual", "sec:complete"), ("complete.decay", "sec:complete")],
        Suite::All => Suite::EACH.iter().flat_map(|s| check_ids(*s, fam)).collect(),
    }
}

fn anchor(suite: Suite, fam: Family, id: &str) -> &'static str {
    check_ids(suite, fam)
        .into_iter()
        .find(|(i, _)| *i == id)
        .map(|(_, a)| a)
        .expect("check id registered")
}

fn exact_residual(zero: bool, render: impl FnOnce() -> String) -> Residual {
    Residual::exact(zero, render)
}

fn error_case(id: &str, anchor: &'static str, n: Option<usize>, e: Error) -> Case {
    Case::new(id, anchor, n).failed(e.to_string())
}

fn ode_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let an = anchor(Suite::Ode, p.family(), "ode.eigen");
    let op = operator_for(p);
    opts.exec.map_range(1, opts.nmax + 1, |n| match p.x1(n) {
        Ok(y) => {
            let chk = verify_eigen(&op, &y.poly);
            let res = exact_residual(chk.residual.is_zero(), || chk.residual.to_string());
            Case::new("ode.eigen", an, Some(n))
                .pass_if(chk.passed(), res)
                .with_note(format!("lambda = {}", crate::scalar::fmt_rational(&chk.lambda)))
        }
        Err(e) => error_case("ode.eigen", an, Some(n), e),
    })
}

fn orth_cases<T: Field>(p: &Params<T>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let an = anchor(Suite::Orth, fam, "orth.pairwise");
    let mut cases = match gram_matrix(p, opts.nmax, opts.exec) {
        Ok(g) => (2..=opts.nmax)
            .map(|n| {
                let worst = (1..n)
                    .map(|m| g[m - 1][n - 1].abs() / (g[m - 1][m - 1] * g[n - 1][n - 1]).sqrt())
                    .fold(0.0, f64::max);
                Case::new("orth.pairwise", an, Some(n)).pass_if(worst < opts.tol, Residual::Float(worst))
            })
            .collect(),
        Err(e) => vec![error_case("orth.pairwise", an, None, e)],
    };
    let an = anchor(Suite::Orth, fam, "orth.gram-schmidt");
    let gs = (|| -> Result<Vec<Case>> {
        let integ = Integrator::for_params(p)?;
        let basis: Vec<Poly<f64>> = (1..=opts.nmax).map(|i| p.flag_basis(i).to_f64()).collect();
        let out = gram_schmidt(&integ, &basis, &Normalization::for_params(p, opts.nmax))?;
        let exact = p.x1_seq(opts.nmax)?;
        Ok(out
            .iter()
            .zip(&exact)
            .enumerate()
            .map(|(i, (g, e))| {
                let e = e.to_f64();
                let err = (&e - g).max_abs_coeff() / e.max_abs_coeff().max(1.0);
                // numeric route agreement is looser than orthogonality
                Case::new("orth.gram-schmidt", an, Some(i + 1)).pass_if(err < opts.tol.max(1e-8), Residual::Float(err))
            })
            .collect())
    })();
    match gs {
        Ok(c) => cases.extend(c),
        Err(e) => cases.push(error_case("orth.gram-schmidt", an, None, e)),
    }
    cases
}

fn ladder_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let (lo, hi, adj) = (
        anchor(Suite::Ladder, fam, "ladder.lower"),
        anchor(Suite::Ladder, fam, "ladder.raise"),
        anchor(Suite::Ladder, fam, "ladder.adjoint"),
    );
    let per_n = opts.exec.map_range(1, opts.nmax + 1, |n| {
        let mut out = Vec::with_capacity(3);
        match ladder_shift_check(p, n) {
            Ok((a, b)) => {
                out.push(Case::new("ladder.lower", lo, Some(n)).pass_if(a.is_zero(), exact_residual(a.is_zero(), || a.to_string())));
                out.push(Case::new("ladder.raise", hi, Some(n)).pass_if(b.is_zero(), exact_residual(b.is_zero(), || b.to_string())));
            }
            Err(e) => {
                out.push(error_case("ladder.lower", lo, Some(n), e.clone()));
                out.push(error_case("ladder.raise", hi, Some(n), e));
            }
        }
        let adjoint = (|| -> Result<Case> {
            let f = p.x1(n + 1)?.poly;
            let g = p.shifted(1)?.x1(n)?.poly;
            Ok(match adjoint_relation_check(p, &f, &g)? {
                Some(r) => {
                    let d = r.rel_diff();
                    Case::new("ladder.adjoint", adj, Some(n)).pass_if(d < opts.tol, Residual::Float(d))
                }
                None => Case::new("ladder.adjoint", adj, Some(n)).skipped("ladder image is not polynomial"),
            })
        })();
        out.push(adjoint.unwrap_or_else(|e| error_case("ladder.adjoint", adj, Some(n), e)));
        out
    });
    per_n.into_iter().flatten().collect()
}

fn factor_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let (an1, an2) = (anchor(Suite::Factor, fam, "factor.lower-raise"), anchor(Suite::Factor, fam, "factor.raise-lower"));
    let per_n = opts.exec.map_range(1, opts.nmax + 1, |n| {
        let r = factorization_check(p, &[p.flag_basis(n)]);
        let first = &r.lower_then_raise[0];
        let mut out = vec![Case::new("factor.lower-raise", an1, Some(n))
            .pass_if(first.is_zero(), exact_residual(first.is_zero(), || first.to_string()))];
        out.push(match &r.raise_then_lower {
            Some(v) => Case::new("factor.raise-lower", an2, Some(n))
                .pass_if(v[0].is_zero(), exact_residual(v[0].is_zero(), || v[0].to_string())),
            None => Case::new("factor.raise-lower", an2, Some(n)).skipped("lowered parameters are not admissible"),
        });
        out
    });
    per_n.into_iter().flatten().collect()
}

fn rodrigues_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let (an1, an2) = (
        anchor(Suite::Rodrigues, fam, "rodrigues"),
        anchor(Suite::Rodrigues, fam, "construction.three-term"),
    );
    let per_n = opts.exec.map_range(1, opts.nmax + 1, |n| {
        let reference = match p.x1(n) {
            Ok(y) => y.poly,
            Err(e) => return vec![error_case("rodrigues", an1, Some(n), e)],
        };
        let diff = |q: Result<QPoly>, id: &str, an: &'static str| match q {
            Ok(q) => {
                let d = &q - &reference;
                Case::new(id, an, Some(n)).pass_if(d.is_zero(), exact_residual(d.is_zero(), || d.to_string()))
            }
            Err(e) => error_case(id, an, Some(n), e),
        };
        vec![
            diff(rodrigues(p, n), "rodrigues", an1),
            diff(x1_from_classical_3term(p, n), "construction.three-term", an2),
        ]
    });
    per_n.into_iter().flatten().collect()
}

fn recur_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let an_row = anchor(Suite::Recur, fam, "recur.row");
    let an_inv = anchor(Suite::Recur, fam, "recur.inverse");
    let per_n = opts.exec.map_range(1, opts.nmax + 1, |n| {
        let mut out = Vec::new();
        match p {
            Params::Laguerre(lp) => {
                let r = recurrence_check_laguerre(lp, n);
                out.push(
                    Case::new("recur.row", an_row, Some(n))
                        .pass_if(r.holds(), exact_residual(r.holds(), || r.residual.to_string())),
                );
                let rev = laguerre_reverse_identity(lp, n);
                let an = anchor(Suite::Recur, fam, "recur.reverse");
                out.push(Case::new("recur.reverse", an, Some(n)).pass_if(rev.is_zero(), exact_residual(rev.is_zero(), || rev.to_string())));
            }
            Params::Jacobi(jp) => out.push(match recurrence_check_jacobi(jp, n, true) {
                Ok(r) => {
                    let dim = r.annihilator_dim.unwrap_or(0);
                    let res = exact_residual(r.holds(), || r.residual.to_string());
                    match (&r.corrected, r.holds()) {
                        (_, true) => Case::new("recur.row", an_row, Some(n))
                            .pass_if(true, res)
                            .with_note(format!("printed form holds; annihilator space dimension {dim}")),
                        (Some(c), false) => Case::new("recur.row", an_row, Some(n)).pass_if(true, res).with_note(format!(
                            "printed form fails; reconciled row c2 = {}, c1 = {}, c0 = {} (space dimension {dim})",
                            c.c2, c.c1, c.c0
                        )),
                        (None, false) => Case::new("recur.row", an_row, Some(n))
                            .pass_if(false, res)
                            .with_note("no annihilating row of the printed shape"),
                    }
                }
                Err(e) => error_case("recur.row", an_row, Some(n), e),
            }),
        }
        out
    });
    let mut cases: Vec<Case> = per_n.into_iter().flatten().collect();
    cases.extend(opts.exec.map_range(0, opts.nmax + 1, |n| match inverse_relations_check(p, n) {
        Ok(r) => Case::new("recur.inverse", an_inv, Some(n)).pass_if(r.is_zero(), exact_residual(r.is_zero(), || r.to_string())),
        Err(e) => error_case("recur.inverse", an_inv, Some(n), e),
    }));
    cases
}

fn norm_cases<T: Field>(p: &Params<T>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let an = anchor(Suite::Norms, fam, "norms.orientation");
    let reports = opts.exec.map_range(1, opts.nmax + 1, |n| norm_check(p, n, opts.tol));
    let mut verdicts = Vec::new();
    let mut cases: Vec<Case> = reports
        .into_iter()
        .zip(1..)
        .map(|(r, n)| match r {
            Ok(r) => {
                verdicts.push(r.verdict);
                let err = r.rel_err(r.printed).min(r.rel_err(r.inverted));
                let unique = matches!(r.verdict, Orientation::Printed | Orientation::Inverted);
                Case::new("norms.orientation", an, Some(n))
                    .pass_if(unique, Residual::Float(err))
                    .with_verdict(r.verdict)
                    .with_note(format!("quadrature {:.15e}, printed {:.15e}, inverted {:.15e}", r.quadrature, r.printed, r.inverted))
            }
            Err(e) => error_case("norms.orientation", an, Some(n), e),
        })
        .collect();
    let an = anchor(Suite::Norms, fam, "norms.consistency");
    let consistent = verdicts.len() == opts.nmax
        && verdicts.windows(2).all(|w| w[0] == w[1])
        && matches!(verdicts.first(), Some(Orientation::Printed | Orientation::Inverted));
    let mut c = Case::new("norms.consistency", an, None).pass_if(consistent, Residual::None);
    if let (true, Some(v)) = (consistent, verdicts.first()) {
        c = c.with_verdict(*v);
    }
    cases.push(c);
    cases
}

fn zero_cases(p: &Params<Rational>, opts: &SuiteOptions) -> Vec<Case> {
    let an = anchor(Suite::Zeros, p.family(), "zeros.location");
    opts.exec.map_range(1, opts.nmax + 1, |n| match zero_location_check(p, n) {
        Ok(r) => {
            let mut note = format!(
                "inside={} beyond_b={} outside={} real={}{}",
                r.inside,
                r.beyond,
                r.outside,
                r.total_real,
                if r.mirrored { " (mirrored x -> -x)" } else { "" }
            );
            if !r.passed() && r.exterior_ok() {
                note.push_str("; n-1 zeros inside and one outside the interval, but not below b");
            }
            Case::new("zeros.location", an, Some(n)).pass_if(r.passed(), Residual::None).with_note(note)
        }
        Err(e) => error_case("zeros.location", an, Some(n), e),
    })
}

fn pearson_cases(p: &Params<Rational>) -> Vec<Case> {
    let fam = p.family();
    let op = operator_for(p);
    let x1w = WeightSpec::for_params(p);
    let classical = match p {
        Params::Jacobi(j) => WeightSpec::classical_jacobi(&j.alpha, &j.beta),
        Params::Laguerre(l) => WeightSpec::classical_laguerre(&l.k),
    };
    let an = anchor(Suite::Pearson, fam, "pearson.x1-weight");
    let main = match pearson_check(&op, &x1w) {
        Ok(r) => Case::new("pearson.x1-weight", an, None).pass_if(r.is_zero(), exact_residual(r.is_zero(), || r.to_string())),
        Err(e) => error_case("pearson.x1-weight", an, None, e),
    };
    let an = anchor(Suite::Pearson, fam, "pearson.control");
    let control = match pearson_check(&op, &classical) {
        Ok(r) => Case::new("pearson.control", an, None)
            .pass_if(!r.is_zero(), exact_residual(r.is_zero(), || r.to_string()))
            .with_note("negative control: classical weight must not satisfy the X1 Pearson equation"),
        Err(e) => error_case("pearson.control", an, None, e),
    };
    vec![main, control]
}

/// Projection of `f = 1`; residuals are tracked up to `max(nmax, 12)` so the
/// decay ratio `r_12 / r_1` is always available.
fn complete_cases<T: Field>(p: &Params<T>, opts: &SuiteOptions) -> Vec<Case> {
    let fam = p.family();
    let an = anchor(Suite::Complete, fam, "complete.residual");
    let top = opts.nmax.max(12);
    let r = match completeness_proxy(p, |_| 1.0, top, opts.exec) {
        Ok(r) => r,
        Err(e) => return vec![error_case("complete.residual", an, None, e)],
    };
    // residuals are square roots of quadrature values, so their noise floor
    // is the square root of the integration tolerance
    let floor = 1e-5 * r[0];
    let mut cases: Vec<Case> = (1..=opts.nmax)
        .map(|big_n| {
            let ok = big_n == 1 || r[big_n - 1] <= r[big_n - 2] + floor;
            Case::new("complete.residual", an, Some(big_n)).pass_if(ok, Residual::Float(r[big_n - 1]))
        })
        .collect();
    let ratio = r[11] / r[0];
    let an = anchor(Suite::Complete, fam, "complete.decay");
    cases.push(
        Case::new("complete.decay", an, Some(12))
            .pass_if(ratio < 0.05, Residual::Float(ratio))
            .with_note("r_12 / r_1 < 0.05 required"),
    );
    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn exact(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn mixed_backends_rejected() {
        assert_eq!(AnyParams::jacobi(&exact("2"), &exact("4.5")), Err(Error::BackendMismatch));
    }

    #[test]
    fn ode_laguerre_ten_cases() {
        let p = AnyParams::laguerre(&exact("1")).unwrap();
        let r = run_suite(Suite::Ode, &p, &SuiteOptions { nmax: 10, ..Default::default() });
        assert_eq!(r.summary.pass, 10);
        assert!(r.cases.iter().all(|c| c.residual == Residual::ExactZero));
    }

    #[test]
    fn float_backend_skips_exact_checks() {
        let p = AnyParams::laguerre(&exact("1.5")).unwrap();
        let r = run_suite(Suite::Ode, &p, &SuiteOptions { nmax: 3, ..Default::default() });
        assert_eq!(r.backend, "float");
        assert_eq!(r.summary.skipped, 1);
        assert_eq!(r.cases[0].status, Status::Skipped);
        let r = run_suite(Suite::Norms, &p, &SuiteOptions { nmax: 3, ..Default::default() });
        assert_eq!(r.summary.pass, 4);
    }

    #[test]
    fn modes_give_identical_reports() {
        let p = AnyParams::jacobi(&exact("2"), &exact("4")).unwrap();
        let seq = run_suite(Suite::All, &p, &SuiteOptions { nmax: 4, tol: 1e-9, exec: Exec::Sequential });
        let par = run_suite(Suite::All, &p, &SuiteOptions { nmax: 4, tol: 1e-9, exec: Exec::Parallel });
        assert_eq!(seq.to_json(), par.to_json());
        assert!(seq.all_passed(), "{}", seq.to_text());
    }
}
