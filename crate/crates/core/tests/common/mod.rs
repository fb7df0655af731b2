#![allow(dead_code)]

use x1poly::scalar::{int, rat};
use x1poly::x1::{jacobi_params, laguerre_params, Params};
use x1poly::Rational;

pub fn jacobi(a: (i64, i64), b: (i64, i64)) -> Params<Rational> {
    jacobi_params(rat(a.0, a.1), rat(b.0, b.1)).unwrap().into()
}

pub fn laguerre(k: (i64, i64)) -> Params<Rational> {
    laguerre_params(rat(k.0, k.1)).unwrap().into()
}

/// Four Jacobi points (one with negative parameters) and two Laguerre points.
pub fn grid() -> Vec<Params<Rational>> {
    vec![
        jacobi((2, 1), (4, 1)),
        jacobi((1, 2), (5, 2)),
        jacobi((4, 1), (2, 1)),
        jacobi((-1, 4), (-1, 2)),
        laguerre((1, 1)),
        laguerre((3, 2)),
    ]
}

/// Grid points where every parameter is positive.
pub fn positive_grid() -> Vec<Params<Rational>> {
    grid()
        .into_iter()
        .filter(|p| match p {
            Params::Jacobi(j) => j.alpha > int(0),
            Params::Laguerre(_) => true,
        })
        .collect()
}

pub fn label(p: &Params<Rational>) -> String {
    p.describe()
        .into_iter()
        .filter(|(k, _)| matches!(*k, "alpha" | "beta" | "k"))
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}
