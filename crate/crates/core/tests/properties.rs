use polycauchy::series_core::rational::{ratio, Rational};
use polycauchy::series_core::{Polynomial, TruncatedSeries};
use polycauchy::sheffer::pairing;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(small_rational(), order + 1)
        .prop_map(move |c| TruncatedSeries::from_coeffs(c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (series(order), 1i64..=4).prop_map(move |(s, c0)| {
        let mut c = s.coeffs().to_vec();
        c[0] = ratio(c0, 1);
        TruncatedSeries::from_coeffs(c, order)
    })
}

fn delta_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (series(order), 1i64..=4).prop_map(move |(s, c1)| {
        let mut c = s.coeffs().to_vec();
        c[0] = ratio(0, 1);
        c[1] = ratio(c1, 1);
        TruncatedSeries::from_coeffs(c, order)
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_undoes_multiplication(a in series(6), b in unit_series(6)) {
        let q = (&a * &b).div(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn compositional_inverse_is_two_sided(f in delta_series(6)) {
        let g = f.compositional_inverse().unwrap();
        prop_assert_eq!(TruncatedSeries::compose(&f, &g).unwrap(), TruncatedSeries::t(6));
        prop_assert_eq!(TruncatedSeries::compose(&g, &f).unwrap(), TruncatedSeries::t(6));
    }

    #[test]
    fn truncation_commutes_with_products(a in series(7), b in series(7), m in 0usize..=7) {
        prop_assert_eq!((&a * &b).truncate(m), &a.truncate(m) * &b.truncate(m));
    }

    #[test]
    fn pairing_adjoint_rule(f in series(7), p in polynomial()) {
        let xp = &Polynomial::x() * &p;
        prop_assert_eq!(pairing(&f, &xp).unwrap(), pairing(&f.derivative(), &p).unwrap());
    }
}
