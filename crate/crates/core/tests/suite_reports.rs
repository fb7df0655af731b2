mod common;

use serde_json::Value;

use x1poly::report::{Residual, Status};
use x1poly::suite::{check_ids, run_suite, AnyParams, Suite, SuiteOptions};
use x1poly::x1::Family;
use x1poly::{Exec, Scalar};

fn s(v: &str) -> Scalar {
    v.parse().unwrap()
}

fn opts(nmax: usize) -> SuiteOptions {
    SuiteOptions { nmax, tol: 1e-9, exec: Exec::Parallel }
}

#[test]
fn every_suite_passes_on_laguerre() {
    let p = AnyParams::laguerre(&s("3/2")).unwrap();
    let r = run_suite(Suite::All, &p, &opts(6));
    assert!(r.all_passed(), "{}", r.to_text());
    assert_eq!(r.summary.skipped, 0);
}

#[test]
fn report_schema() {
    let p = AnyParams::jacobi(&s("2"), &s("4")).unwrap();
    let r = run_suite(Suite::Recur, &p, &opts(3));
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["report_version", "suite", "family", "params", "cases", "summary", "backend"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for c in v["cases"].as_array().unwrap() {
        for key in ["check_id", "paper_anchor", "n", "status", "residual"] {
            assert!(c.get(key).is_some(), "case missing {key}");
        }
        assert!(c["paper_anchor"].as_str().unwrap().contains(':'));
    }
    assert_eq!(v["params"]["b"], "3");
}

#[test]
fn every_case_id_is_registered() {
    for (fam, p) in [
        (Family::Jacobi, AnyParams::jacobi(&s("4"), &s("2")).unwrap()),
        (Family::Laguerre, AnyParams::laguerre(&s("1")).unwrap()),
    ] {
        let ids = check_ids(Suite::All, fam);
        let r = run_suite(Suite::All, &p, &opts(3));
        for c in &r.cases {
            assert!(ids.iter().any(|(id, an)| *id == c.check_id && *an == c.paper_anchor), "{}", c.check_id);
        }
        for (id, _) in ids {
            assert!(r.cases.iter().any(|c| c.check_id == id), "{id} never reported");
        }
    }
}

#[test]
fn float_backend_is_explicit() {
    let p = AnyParams::jacobi(&s("0.5"), &s("2.5")).unwrap();
    let r = run_suite(Suite::All, &p, &opts(4));
    assert_eq!(r.backend, "float");
    assert!(r.all_passed(), "{}", r.to_text());
    for c in &r.cases {
        if c.status == Status::Skipped {
            assert!(c.note.as_deref().unwrap().contains("exact-only"));
        } else {
            assert!(matches!(c.residual, Residual::Float(_) | Residual::None));
        }
    }
}

#[test]
fn negative_parameters_fail_only_the_one_sided_zero_statement() {
    let p = AnyParams::jacobi(&s("-1/4"), &s("-1/2")).unwrap();
    let r = run_suite(Suite::All, &p, &opts(5));
    let failed: Vec<(&str, Option<usize>)> = r
        .cases
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| (c.check_id.as_str(), c.n))
        .collect();
    assert_eq!(failed, [("zeros.location", Some(3)), ("zeros.location", Some(4)), ("zeros.location", Some(5))]);
}

#[test]
fn sequential_and_parallel_reports_match() {
    let p = AnyParams::laguerre(&s("1")).unwrap();
    let a = run_suite(Suite::All, &p, &SuiteOptions { exec: Exec::Sequential, ..opts(5) });
    let b = run_suite(Suite::All, &p, &opts(5));
    assert_eq!(a, b);
}
