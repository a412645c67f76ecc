//! Recurrences producing `Ã_n^{(r,k)}(x)` from lower members, possibly of
//! neighbouring orders `r + 1` and indices `k - 1`.

use num_traits::Zero;

use super::mixed_oracle_row;
use crate::error::{Error, Result};
use crate::sequences::{self, binomial, s1};
use crate::series_core::rational::{self, Rational};
use crate::series_core::Polynomial;

/// Assembles `Ã_n^{(r,k)}(x)` as
///
/// ```text
/// x Ã_{n-1}^{(r,k)}(x-1)
///   + r sum_{a=0}^{n-1} (-1)^{a+1} a!/(a+2) C(n-1,a) Ã_{n-1-a}^{(r+1,k)}(x)
///   + (1/n) (Ã_n^{(r+1,k-1)}(x) - Ã_n^{(r+1,k)}(x))
/// ```
///
/// Needs `n >= 1` and `r >= 1`.
pub fn order_raising_recurrence(n: usize, r: usize, k: i64) -> Result<Polynomial> {
    if n == 0 || r == 0 {
        return Err(Error::ParamDomain(format!(
            "need n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    let same = mixed_oracle_row(n, r, k);
    let up = mixed_oracle_row(n, r + 1, k);
    let up_km1 = mixed_oracle_row(n, r + 1, k - 1);

    let shifted = same[n - 1].compose(&Polynomial::shifted_x(-rational::one()));
    let first = &Polynomial::x() * &shifted;
    let second: Polynomial = (0..n)
        .map(|a| {
            let w = rational::int(r as i64)
                * rational::sign(a as i64 + 1)
                * rational::factorial(a)
                * rational::ratio(1, a as i64 + 2)
                * binomial(n - 1, a as i64);
            up[n - 1 - a].scale(&w)
        })
        .sum();
    let third = (&up_km1[n] - &up[n]).scale(&rational::ratio(1, n as i64));
    Ok(&(&first + &second) + &third)
}

/// Assembles `Ã_{n+1}^{(r,k)}(x)` from `Ã_n^{(r,k)}(x-1)` and Bernoulli
/// polynomials of orders `1-r` and `-r` at the reflected arguments `2-x`
/// and `1-x`:
///
/// ```text
/// x Ã_n(x-1)
///   - r sum_{m,l,a} (-1)^{m-a} C(m,l) C(m-l,a) / ((a+2)(a+1)(l+1)^k) S1(n,m) B_{m-l-a}^{(1-r)}(2-x)
///   - sum_{m,a} (-1)^m C(m,a) / (a+2)^k S1(n,m) B_{m-a}^{(-r)}(1-x)
/// ```
pub fn shift_recurrence(n: usize, r: usize, k: i64) -> Polynomial {
    let same = mixed_oracle_row(n, r, k);
    let first = &Polynomial::x() * &same[n].compose(&Polynomial::shifted_x(-rational::one()));

    let ri = r as i64;
    let b_two: Vec<Polynomial> = sequences::bernoulli_polys(n, 1 - ri)
        .iter()
        .map(|p| p.compose(&Polynomial::reflected_x(rational::int(2))))
        .collect();
    let b_one: Vec<Polynomial> = sequences::bernoulli_polys(n, -ri)
        .iter()
        .map(|p| p.compose(&Polynomial::reflected_x(rational::one())))
        .collect();
    let inv_pow =
        |base: usize| rational::pow_int(&rational::int(base as i64), -k).expect("base > 0");

    let mut second = Polynomial::zero();
    let mut third = Polynomial::zero();
    for m in 0..=n {
        let s = s1(n, m);
        if s.is_zero() {
            continue;
        }
        if r > 0 {
            for l in 0..=m {
                for a in 0..=m - l {
                    let w: Rational = rational::sign((m - a) as i64)
                        * binomial(m, l as i64)
                        * binomial(m - l, a as i64)
                        * rational::ratio(1, ((a + 2) * (a + 1)) as i64)
                        * inv_pow(l + 1)
                        * &s;
                    second = &second + &b_two[m - l - a].scale(&w);
                }
            }
        }
        for a in 0..=m {
            let w = rational::sign(m as i64) * binomial(m, a as i64) * inv_pow(a + 2) * &s;
            third = &third + &b_one[m - a].scale(&w);
        }
    }
    let second = second.scale(&rational::int(ri));
    &(&first - &second) - &third
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed_poly::mixed_oracle;

    #[test]
    fn order_raising_matches_oracle() {
        assert_eq!(
            order_raising_recurrence(1, 1, 1).unwrap(),
            mixed_oracle(1, 1, 1)
        );
        for n in 1..=8 {
            for r in 1..=3 {
                for k in -2..=3 {
                    let got = order_raising_recurrence(n, r, k).unwrap();
                    assert_eq!(got.degree(), Some(n));
                    assert_eq!(got, mixed_oracle(n, r, k), "n={n} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn order_raising_domain() {
        assert!(matches!(
            order_raising_recurrence(0, 1, 1),
            Err(Error::ParamDomain(_))
        ));
        assert!(matches!(
            order_raising_recurrence(3, 0, 1),
            Err(Error::ParamDomain(_))
        ));
    }

    #[test]
    fn shift_recurrence_matches_oracle() {
        for n in 0..=7 {
            for r in 0..=3 {
                for k in -2..=3 {
                    assert_eq!(
                        shift_recurrence(n, r, k),
                        mixed_oracle(n + 1, r, k),
                        "n={n} r={r} k={k}"
                    );
                }
            }
        }
    }
}
