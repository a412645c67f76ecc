//! Series in `t` whose coefficients are polynomials in `x`.
//!
//! This is the carrier for generating functions of the shape
//! `prefactor(t) * exp(x * u(t))`, whose `t^n` coefficients (times `n!`)
//! are the members of a polynomial sequence.

use num_traits::Zero;

use super::poly::Polynomial;
use super::rational::{self, Rational};
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<Polynomial>,
}

impl PolySeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Polynomial coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// `n! * [t^n]` for every `n`: the polynomial sequence this series
    /// generates exponentially.
    pub fn egf_polys(&self) -> Vec<Polynomial> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| p.scale(&rational::factorial(n)))
            .collect()
    }

    /// Substitutes `x = x0`, leaving a scalar series.
    pub fn eval_x(&self, x0: &Rational) -> TruncatedSeries {
        let order = self.order();
        TruncatedSeries::from_coeffs(self.coeffs.iter().map(|p| p.eval(x0)).collect(), order)
    }

    /// `prefactor(t) * exp(x * u(t))` where `u` has no constant term.
    ///
    /// The truncation order is `min(order(u), order(prefactor))`.
    pub fn from_exp(u: &TruncatedSeries, prefactor: &TruncatedSeries) -> Result<Self> {
        if !u.coeff(0).is_zero() {
            return Err(Error::ComposeWithUnit);
        }
        let order = u.order().min(prefactor.order());
        let u = u.truncate(order);

        // exp(x u) = sum_j x^j u^j / j!; row n collects [t^n] over j.
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); order + 1]; order + 1];
        let mut u_pow = TruncatedSeries::one(order);
        for j in 0..=order {
            let inv_fact = rational::factorial(j).recip();
            for (n, row) in rows.iter_mut().enumerate() {
                let c = u_pow.coeff(n);
                if !c.is_zero() {
                    row[j] = c * &inv_fact;
                }
            }
            u_pow = &u_pow * &u;
        }
        let exp_part: Vec<Polynomial> = rows.into_iter().map(Polynomial::new).collect();

        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !prefactor.coeff(i).is_zero())
                    .map(|i| exp_part[n - i].scale(&prefactor.coeff(i)))
                    .sum()
            })
            .collect();
        Ok(Self { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_core::rational::{int, ratio};

    #[test]
    fn plain_exponential() {
        let ps = PolySeries::from_exp(&TruncatedSeries::t(6), &TruncatedSeries::one(6)).unwrap();
        for n in 0..=6 {
            assert_eq!(
                ps.coeff(n),
                &Polynomial::monomial(n, rational::factorial(n).recip())
            );
        }
    }

    #[test]
    fn binomial_exponential_gives_falling_factorials() {
        let ps =
            PolySeries::from_exp(&TruncatedSeries::log1p(5), &TruncatedSeries::one(5)).unwrap();
        let polys = ps.egf_polys();
        // (x)_3 = x^3 - 3x^2 + 2x
        assert_eq!(
            polys[3],
            Polynomial::new(vec![int(0), int(2), int(-3), int(1)])
        );
        let mut falling = Polynomial::one();
        for (n, p) in polys.iter().enumerate() {
            assert_eq!(p, &falling);
            falling = &falling * &Polynomial::shifted_x(int(-(n as i64)));
        }
    }

    #[test]
    fn prefactor_multiplies() {
        let pre = TruncatedSeries::from_coeffs(vec![int(1), ratio(1, 2)], 4);
        let ps = PolySeries::from_exp(&TruncatedSeries::t(4), &pre).unwrap();
        // [t^1] = x + 1/2
        assert_eq!(ps.coeff(1), &Polynomial::new(vec![ratio(1, 2), int(1)]));
        assert_eq!(ps.eval_x(&int(0)), pre);
    }

    #[test]
    fn rejects_unit_exponent() {
        assert_eq!(
            PolySeries::from_exp(&TruncatedSeries::one(3), &TruncatedSeries::one(3)),
            Err(Error::ComposeWithUnit)
        );
    }
}
