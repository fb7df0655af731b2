mod common;

use proptest::prelude::*;

use x1poly::operators::{build_general_t, operator_for, verify_eigen};
use x1poly::quadrature::gauss_jacobi;
use x1poly::ratfun::{QPoly, RatFun};
use x1poly::rodrigues::recurrence_check_laguerre;
use x1poly::scalar::{int, rat};
use x1poly::x1::{flag_basis, flag_coordinates, in_flag, inverse_relations_check, jacobi_params, laguerre_params, Params};
use x1poly::Rational;

fn rational(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    rational(lo, hi).prop_filter("nonzero", |q| *q != int(0))
}

/// Admissible positive Jacobi pairs.
fn jacobi_pair() -> impl Strategy<Value = Params<Rational>> {
    (rational(1, 24), rational(1, 24))
        .prop_filter_map("admissible", |(a, b)| jacobi_params(a, b).ok().map(Params::from))
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(rational(-9, 9), 1..6).prop_map(QPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_members_are_flag_eigenpolynomials(p in jacobi_pair()) {
        let op = operator_for(&p);
        for (i, y) in p.x1_seq(5).unwrap().iter().enumerate() {
            prop_assert_eq!(y.degree(), Some(i + 1));
            prop_assert!(p.in_flag(y));
            prop_assert!(verify_eigen(&op, y).passed());
        }
    }

    #[test]
    fn laguerre_recurrence_and_inverse(k in rational(1, 30)) {
        let Params::Laguerre(lp) = Params::from(laguerre_params(k).unwrap()) else { unreachable!() };
        for n in 1..=4 {
            prop_assert!(recurrence_check_laguerre(&lp, n).holds());
        }
        let p = Params::Laguerre(lp);
        for n in 0..=4 {
            prop_assert!(inverse_relations_check(&p, n).unwrap().is_zero());
        }
    }

    #[test]
    fn general_operator_preserves_flag(
        a in nonzero(-8, 8),
        b in rational(-8, 8),
        k0 in nonzero(-8, 8),
        k1 in rational(-8, 8),
        k2 in rational(-8, 8),
    ) {
        let op = build_general_t(a.clone(), b.clone(), k0, k1, k2).unwrap();
        for i in 1..=6 {
            let u = flag_basis(&op.b, &op.c, i);
            let tu = op.apply(&u).as_polynomial();
            prop_assert!(tu.is_some());
            let tu = tu.unwrap();
            prop_assert!(in_flag(&a, &b, &tu));
            prop_assert_eq!(tu.coeff(i), op.eigenvalue(i) * u.coeff(i));
        }
        prop_assert!(op.apply(&QPoly::one()).as_polynomial().is_none());
    }

    #[test]
    fn flag_coordinates_round_trip(
        a in nonzero(-5, 5),
        b in rational(-5, 5),
        coords in proptest::collection::vec(rational(-9, 9), 1..6),
    ) {
        let c = b.clone() + a.recip();
        let p = coords
            .iter()
            .enumerate()
            .fold(QPoly::zero(), |acc, (i, ci)| &acc + &flag_basis(&b, &c, i + 1).scale(ci));
        prop_assume!(!p.is_zero());
        let got = flag_coordinates(&a, &b, &p).unwrap();
        let deg = p.degree().unwrap();
        prop_assert_eq!(&got[..], &coords[..deg]);
    }

    #[test]
    fn ratfun_is_canonical(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assume!(!q.is_zero() && !r.is_zero());
        let direct = RatFun::new(p.clone(), q.clone()).unwrap();
        let padded = RatFun::new(&p * &r, &q * &r).unwrap();
        prop_assert_eq!(direct, padded);
    }

    #[test]
    fn gauss_jacobi_weights_sum_to_moment(alpha in 0.0f64..4.0, beta in 0.0f64..4.0, m in 1usize..40) {
        let rule = gauss_jacobi(alpha, beta, m).unwrap();
        let mu0 = 2f64.powf(alpha + beta + 1.0)
            * x1poly::classical::gamma(alpha + 1.0).unwrap()
            * x1poly::classical::gamma(beta + 1.0).unwrap()
            / x1poly::classical::gamma(alpha + beta + 2.0).unwrap();
        let total: f64 = rule.weights.iter().sum();
        prop_assert!((total - mu0).abs() <= 1e-12 * mu0);
        prop_assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(rule.nodes.iter().all(|x| x.abs() < 1.0));
    }
}

#[test]
fn negative_grid_point_members_stay_in_flag() {
    let p = common::jacobi((-1, 4), (-1, 2));
    for y in p.x1_seq(10).unwrap() {
        assert!(p.in_flag(&y));
    }
}
