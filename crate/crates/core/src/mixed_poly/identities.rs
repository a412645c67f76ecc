//! Identities checked as exact two-sided comparisons, each returning an
//! [`IdentityReport`].

use num_traits::Zero;

use super::{mixed_numbers, mixed_oracle_row, mixed_pair, mixed_pair_g, mixed_values};
use super::{IdentityId, IdentityParams, IdentityReport};
use crate::error::{Error, Result};
use crate::sequences::{self, binomial, s1};
use crate::series_core::rational::{self, Rational};
use crate::series_core::{PolySeries, Polynomial, TruncatedSeries};
use crate::sheffer::{self, ShefferPair};

/// The pairing representation `sum_j (1/j!) <prefactor * log(1+t)^j | x^n> x^j`
/// against the generating-function oracle.
pub fn conjugate_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    let pair = mixed_pair(r, k, n);
    Ok(IdentityReport::compare(
        IdentityId::ConjugateOracle,
        IdentityParams::nrk(n, r, k),
        mixed_oracle_row(n, r, k)[n].clone(),
        sheffer::conjugate_expansion(&pair, n)?,
    ))
}

/// For `n - 1 >= m >= 1`, compares
/// `sum_l C(n,l) S1(n-l,m) Ã_l^{(r,k)}` with the three-part sum involving
/// `Ã^{(r+1,k)}`, `Ã^{(r+1,k-1)}` and the values `Ã^{(r,k)}(-1)`.
pub fn double_evaluation_identity(n: usize, m: usize, r: usize, k: i64) -> Result<IdentityReport> {
    if m < 1 || m + 1 > n {
        return Err(Error::ParamDomain(format!(
            "need n - 1 >= m >= 1, got n = {n}, m = {m}"
        )));
    }
    let a = mixed_numbers(n, r, k);
    let a_up = mixed_numbers(n, r + 1, k);
    let a_up_km1 = mixed_numbers(n, r + 1, k - 1);
    let a_minus_one = mixed_values(n, r, k, &-rational::one());
    let bin = |p: usize, q: usize| binomial(p, q as i64);

    let lhs: Rational = (0..=n - m).map(|l| bin(n, l) * s1(n - l, m) * &a[l]).sum();

    let mut first = Rational::zero();
    for l in 0..n - m {
        for j in 0..n - l - m {
            first += rational::sign(j as i64 + 1)
                * rational::factorial(j)
                * rational::ratio(1, j as i64 + 2)
                * bin(n - 1, l + m)
                * bin(n - l - m - 1, j)
                * s1(l + m, m)
                * &a_up[n - l - m - j - 1];
        }
    }
    let first = first * rational::int(r as i64);
    let second: Rational = (0..n - m)
        .map(|l| {
            rational::ratio(1, (n - l - m) as i64)
                * bin(n - 1, l + m)
                * s1(l + m, m)
                * (&a_up_km1[n - l - m] - &a_up[n - l - m])
        })
        .sum();
    let third: Rational = (0..=n - m)
        .map(|l| bin(n - 1, l + m - 1) * s1(l + m - 1, m - 1) * &a_minus_one[n - l - m])
        .sum();

    Ok(IdentityReport::compare(
        IdentityId::DoubleEvaluation,
        IdentityParams {
            m: Some(m),
            ..IdentityParams::nrk(n, r, k)
        },
        lhs,
        first + second + third,
    ))
}

/// `d/dx Ã_n(x) = (-1)^n n! sum_{l<n} (-1)^{l+1} / ((n-l) l!) Ã_l(x)`.
pub fn derivative_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::ParamDomain("need n >= 1".into()));
    }
    let row = mixed_oracle_row(n, r, k);
    let rhs: Polynomial = (0..n)
        .map(|l| {
            let w = rational::sign(l as i64 + 1)
                / (rational::int((n - l) as i64) * rational::factorial(l));
            row[l].scale(&w)
        })
        .sum();
    let rhs = rhs.scale(&(rational::sign(n as i64) * rational::factorial(n)));
    Ok(IdentityReport::compare(
        IdentityId::Derivative,
        IdentityParams::nrk(n, r, k),
        row[n].derivative(),
        rhs,
    ))
}

/// `Ã_n(x + y) = sum_j C(n,j) Ã_j(x) (y)_{n-j}` for one rational `y`.
pub fn addition_identity(n: usize, r: usize, k: i64, y: &Rational) -> IdentityReport {
    let row = mixed_oracle_row(n, r, k);
    let lhs = row[n].compose(&Polynomial::shifted_x(y.clone()));
    let rhs: Polynomial = (0..=n)
        .map(|j| {
            let w = binomial(n, j as i64) * sequences::falling_factorial(n - j).eval(y);
            row[j].scale(&w)
        })
        .sum();
    IdentityReport::compare(
        IdentityId::Addition,
        IdentityParams {
            y: Some(y.clone()),
            ..IdentityParams::nrk(n, r, k)
        },
        lhs,
        rhs,
    )
}

/// `(e^t - 1) Ã_n(x) = n Ã_{n-1}(x)`, with the operator applied through
/// the umbral action.
pub fn delta_action_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    let row = mixed_oracle_row(n, r, k);
    let delta = &TruncatedSeries::exp(n) - &TruncatedSeries::one(n);
    let lhs = sheffer::apply_series(&delta, &row[n])?;
    let rhs = if n == 0 {
        Polynomial::zero()
    } else {
        row[n - 1].scale(&rational::int(n as i64))
    };
    Ok(IdentityReport::compare(
        IdentityId::DeltaAction,
        IdentityParams::nrk(n, r, k),
        lhs,
        rhs,
    ))
}

/// `(t e^t/(e^t-1))^r / Lif_k(-t)` applied to `Ã_n(x)` gives `(x)_n`.
pub fn operator_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    let op = mixed_pair_g(r, k, n);
    let lhs = sheffer::apply_series(&op, &mixed_oracle_row(n, r, k)[n])?;
    Ok(IdentityReport::compare(
        IdentityId::OperatorInverse,
        IdentityParams::nrk(n, r, k),
        lhs,
        sequences::falling_factorial(n),
    ))
}

/// `d/dt Lif_k(-log(1+t)) = (Lif_{k-1}(-log(1+t)) - Lif_k(-log(1+t))) / ((1+t) log(1+t))`,
/// compared as series truncated at `order - 1`.
pub fn lif_derivative_identity(k: i64, order: usize) -> Result<IdentityReport> {
    if order < 2 {
        return Err(Error::ParamDomain(format!("need order >= 2, got {order}")));
    }
    let cur = sequences::lif_of_neglog(k, order);
    let lower = sequences::lif_of_neglog(k - 1, order);
    let one_plus_t = TruncatedSeries::from_coeffs(vec![rational::one(), rational::one()], order);
    let den = &one_plus_t * &TruncatedSeries::log1p(order);
    let rhs = (&lower - &cur).div_cancel(&den)?;
    Ok(IdentityReport::compare(
        IdentityId::LifDerivative,
        IdentityParams {
            n: order,
            k: Some(k),
            ..Default::default()
        },
        cur.derivative(),
        rhs,
    ))
}

/// The generic Sheffer recurrence applied to `Ã_{n-1}` must give `Ã_n`.
pub fn generic_recurrence_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::ParamDomain("need n >= 1".into()));
    }
    let pair = mixed_pair(r, k, n);
    let row = mixed_oracle_row(n, r, k);
    Ok(IdentityReport::compare(
        IdentityId::GenericRecurrence,
        IdentityParams::nrk(n, r, k),
        row[n].clone(),
        sheffer::sheffer_recurrence_next(&pair, &row[n - 1])?,
    ))
}

/// `<g(t) f(t)^j | Ã_n(x)>` for `j = 0..=j_max` against `n! delta_{n,j}`.
pub fn biorthogonality_identity(
    n: usize,
    j_max: usize,
    r: usize,
    k: i64,
) -> Result<IdentityReport> {
    let order = n.max(j_max);
    let pair = mixed_pair(r, k, order);
    let target = &mixed_oracle_row(n, r, k)[n];
    let mut functional = pair.g().clone();
    let mut lhs = Vec::with_capacity(j_max + 1);
    for _ in 0..=j_max {
        lhs.push(sheffer::pairing(&functional, target)?);
        functional = &functional * pair.f();
    }
    let rhs = (0..=j_max)
        .map(|j| {
            if j == n {
                rational::factorial(n)
            } else {
                Rational::zero()
            }
        })
        .collect::<Vec<_>>();
    Ok(IdentityReport::compare(
        IdentityId::Biorthogonality,
        IdentityParams::nrk(n, r, k),
        lhs,
        rhs,
    ))
}

/// Row `n` of the generic connection matrix from the mixed pair to
/// `(1, e^t - 1)` against `C(n,m) Ã_{n-m}`.
pub fn connection_identity(n: usize, r: usize, k: i64) -> Result<IdentityReport> {
    let matrix =
        sheffer::connection_coeffs(&mixed_pair(r, k, n), &ShefferPair::falling_factorial(n), n)?;
    let numbers = mixed_numbers(n, r, k);
    let rhs = (0..=n)
        .map(|m| binomial(n, m as i64) * &numbers[n - m])
        .collect::<Vec<_>>();
    Ok(IdentityReport::compare(
        IdentityId::ConnectionMatrix,
        IdentityParams::nrk(n, r, k),
        matrix.row(n).to_vec(),
        rhs,
    ))
}

/// `n! [t^n] (t/log(1+t))^m (1+t)^{x-1} = B_n^{(n-m+1)}(x)` as polynomials.
pub fn log_power_bernoulli_identity(n: usize, m: usize) -> IdentityReport {
    let base = TruncatedSeries::t(n + 1)
        .div_cancel(&TruncatedSeries::log1p(n + 1))
        .expect("log(1+t) has valuation 1");
    let pre = &base.pow(m as i64).expect("nonnegative power")
        * &TruncatedSeries::binomial_power(&-rational::one(), n);
    let lhs = PolySeries::from_exp(&TruncatedSeries::log1p(n), &pre)
        .expect("log(1+t) has no constant term")
        .egf_polys()
        .swap_remove(n);
    IdentityReport::compare(
        IdentityId::LogPowerBernoulli,
        IdentityParams {
            n,
            m: Some(m),
            ..Default::default()
        },
        lhs,
        sequences::bernoulli_poly(n, n as i64 - m as i64 + 1),
    )
}

/// `C_n^{(r)} = B_n^{(n-r+1)}(1-r)` for the Cauchy numbers of the second
/// kind of order `r`.
pub fn cauchy_bernoulli_identity(n: usize, r: usize) -> IdentityReport {
    IdentityReport::compare(
        IdentityId::CauchyBernoulli,
        IdentityParams {
            n,
            r: Some(r),
            ..Default::default()
        },
        sequences::cauchy2_number(n, r),
        sequences::bernoulli_value(n, n as i64 - r as i64 + 1, &rational::int(1 - r as i64)),
    )
}

/// `C_n^{(1)} = B_n^{(n)}`.
pub fn cauchy_diagonal_identity(n: usize) -> IdentityReport {
    IdentityReport::compare(
        IdentityId::CauchyDiagonal,
        IdentityParams {
            n,
            ..Default::default()
        },
        sequences::cauchy2_number(n, 1),
        sequences::bernoulli_value(n, n as i64, &Rational::zero()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_core::rational::{int, ratio};

    #[test]
    fn double_evaluation_small_and_boundary() {
        assert!(double_evaluation_identity(2, 1, 1, 1).unwrap().equal);
        for n in 2..=6 {
            for m in 1..n {
                for r in 0..=2 {
                    for k in [-1, 0, 2] {
                        let rep = double_evaluation_identity(n, m, r, k).unwrap();
                        assert!(rep.equal, "{}", rep.params);
                    }
                }
            }
        }
        assert!(double_evaluation_identity(3, 0, 1, 1).is_err());
        assert!(double_evaluation_identity(3, 3, 1, 1).is_err());
    }

    #[test]
    fn derivative_small() {
        let rep = derivative_identity(1, 2, 1).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, Polynomial::one().into());
        for n in 1..=8 {
            let rep = derivative_identity(n, 3, -2).unwrap();
            assert!(rep.equal);
        }
        assert!(derivative_identity(0, 1, 1).is_err());
    }

    #[test]
    fn addition_and_delta() {
        for y in [int(0), int(1), int(-2), ratio(1, 2)] {
            for n in 0..=8 {
                assert!(addition_identity(n, 2, 1, &y).equal);
            }
        }
        for n in 0..=8 {
            assert!(delta_action_identity(n, 1, -1).unwrap().equal);
        }
    }

    #[test]
    fn operator_maps_to_falling_factorials() {
        assert_eq!(
            operator_identity(0, 1, 1).unwrap().lhs,
            Polynomial::one().into()
        );
        let rep = operator_identity(3, 1, 1).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, sequences::falling_factorial(3).into());
    }

    #[test]
    fn lif_derivative_for_several_k() {
        for k in [1, 0, -2, 3] {
            assert!(lif_derivative_identity(k, 8).unwrap().equal, "k={k}");
        }
        assert!(lif_derivative_identity(1, 1).is_err());
    }

    #[test]
    fn sheffer_machinery_on_mixed_pair() {
        assert!(generic_recurrence_identity(3, 1, 1).unwrap().equal);
        assert!(conjugate_identity(5, 2, -1).unwrap().equal);
        for n in 0..=5 {
            assert!(biorthogonality_identity(n, 6, 2, 1).unwrap().equal);
            assert!(connection_identity(n, 1, 2).unwrap().equal);
        }
    }

    #[test]
    fn auxiliary_series() {
        assert!(log_power_bernoulli_identity(4, 2).equal);
        assert!(cauchy_bernoulli_identity(5, 3).equal);
        assert!(cauchy_diagonal_identity(6).equal);
    }
}
