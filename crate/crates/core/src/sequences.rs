//! Classical number and polynomial families: Stirling numbers of both kinds,
//! falling factorials, the polylogarithm factorial series, higher-order
//! Bernoulli and Frobenius-Euler polynomials, Cauchy numbers of the second
//! kind of order `r`, and poly-Cauchy polynomials of the second kind.
//!
//! Everything except the Stirling tables is extracted from a generating
//! function built with [`crate::series_core`]; the Stirling tables use their
//! defining recurrences and are cross-checked against the series in tests.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series_core::rational::{self, Rational};
use crate::series_core::{PolySeries, Polynomial, TruncatedSeries};

/// A rational parameter `lambda` with `lambda != 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lambda(Rational);

impl Lambda {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_one() {
            return Err(Error::LambdaUnit);
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

#[derive(Default)]
struct Tables {
    s1: Vec<Vec<Rational>>,
    s2: Vec<Vec<Rational>>,
}

impl Tables {
    fn grow_to(&mut self, max_n: usize) {
        if self.s1.is_empty() {
            self.s1.push(vec![rational::one()]);
            self.s2.push(vec![rational::one()]);
        }
        while self.s1.len() <= max_n {
            let n = self.s1.len() - 1;
            let prev1 = &self.s1[n];
            let prev2 = &self.s2[n];
            let get =
                |row: &Vec<Rational>, l: usize| row.get(l).cloned().unwrap_or_else(Rational::zero);
            let nq = rational::int(n as i64);
            let mut row1 = Vec::with_capacity(n + 2);
            let mut row2 = Vec::with_capacity(n + 2);
            for l in 0..=n + 1 {
                let below1 = if l == 0 {
                    Rational::zero()
                } else {
                    get(prev1, l - 1)
                };
                let below2 = if l == 0 {
                    Rational::zero()
                } else {
                    get(prev2, l - 1)
                };
                // S1(n+1,l) = S1(n,l-1) - n S1(n,l);  S2(n+1,l) = l S2(n,l) + S2(n,l-1)
                row1.push(below1 - &nq * get(prev1, l));
                row2.push(rational::int(l as i64) * get(prev2, l) + below2);
            }
            self.s1.push(row1);
            self.s2.push(row2);
        }
    }
}

/// Triangular tables of signed Stirling numbers of the first kind and
/// Stirling numbers of the second kind, grown on demand.
///
/// Lookups take a read lock; growth takes a write lock, so a shared cache
/// behaves like a pure function from any thread.
#[derive(Default)]
pub struct StirlingCache {
    tables: RwLock<Tables>,
}

impl StirlingCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static StirlingCache {
        static CACHE: OnceLock<StirlingCache> = OnceLock::new();
        CACHE.get_or_init(StirlingCache::new)
    }

    pub fn max_n(&self) -> Option<usize> {
        self.tables.read().unwrap().s1.len().checked_sub(1)
    }

    fn lookup(&self, n: usize, l: usize, first: bool) -> Rational {
        if l > n {
            return Rational::zero();
        }
        {
            let t = self.tables.read().unwrap();
            let table = if first { &t.s1 } else { &t.s2 };
            if let Some(row) = table.get(n) {
                return row[l].clone();
            }
        }
        let mut t = self.tables.write().unwrap();
        t.grow_to(n);
        let table = if first { &t.s1 } else { &t.s2 };
        table[n][l].clone()
    }

    /// Signed Stirling number of the first kind; zero when `l > n`.
    pub fn s1(&self, n: usize, l: usize) -> Rational {
        self.lookup(n, l, true)
    }

    /// Stirling number of the second kind; zero when `l > n`.
    pub fn s2(&self, n: usize, l: usize) -> Rational {
        self.lookup(n, l, false)
    }
}

/// Signed Stirling number of the first kind, with `0` outside `0 <= l <= n`.
pub(crate) fn s1(n: usize, l: usize) -> Rational {
    StirlingCache::global().s1(n, l)
}

/// Stirling number of the second kind, with `0` outside `0 <= l <= n`.
pub(crate) fn s2(n: usize, l: usize) -> Rational {
    StirlingCache::global().s2(n, l)
}

fn check_triangle(n: usize, l: usize) -> Result<()> {
    if l > n {
        return Err(Error::IndexRange(format!(
            "need l <= n, got n = {n}, l = {l}"
        )));
    }
    Ok(())
}

/// Signed Stirling number of the first kind: the coefficient of `x^l` in
/// `(x)_n`.
pub fn stirling1(n: usize, l: usize) -> Result<Rational> {
    check_triangle(n, l)?;
    Ok(s1(n, l))
}

/// Stirling number of the second kind: the number of partitions of an
/// `n`-set into `l` blocks.
pub fn stirling2(n: usize, l: usize) -> Result<Rational> {
    check_triangle(n, l)?;
    Ok(s2(n, l))
}

/// `(x)_n = x (x - 1) ... (x - n + 1)`.
pub fn falling_factorial(n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::shifted_x(rational::int(-(i as i64)))
    })
}

/// Binomial coefficient; zero when `b < 0` or `b > a`.
pub fn binomial(a: usize, b: i64) -> Rational {
    if b < 0 || b as usize > a {
        return Rational::zero();
    }
    let b = (b as usize).min(a - b as usize);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// `a! / (a_1! ... a_r!)`; the parts must sum to `a`.
pub fn multinomial(a: usize, parts: &[usize]) -> Result<Rational> {
    let sum: usize = parts.iter().sum();
    if sum != a {
        return Err(Error::MultinomialMismatch {
            total: a,
            parts: sum,
        });
    }
    Ok(parts.iter().fold(rational::factorial(a), |acc, &p| {
        acc / rational::factorial(p)
    }))
}

/// The polylogarithm factorial series `sum_m t^m / (m! (m+1)^k)`.
pub fn lif_series(k: i64, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|m| {
            let weight =
                rational::pow_int(&rational::int(m as i64 + 1), -k).expect("m + 1 is never zero");
            weight / rational::factorial(m)
        })
        .collect();
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// `Lif_k(-log(1 + t))`.
pub fn lif_of_neglog(k: i64, order: usize) -> TruncatedSeries {
    let inner = -&TruncatedSeries::log1p(order);
    TruncatedSeries::compose(&lif_series(k, order), &inner).expect("-log(1+t) has no constant term")
}

/// `(t / (e^t - 1))^alpha` for any integer `alpha`.
pub fn bernoulli_prefactor(alpha: i64, order: usize) -> TruncatedSeries {
    let em1 = &TruncatedSeries::exp(order + 1) - &TruncatedSeries::one(order + 1);
    TruncatedSeries::t(order + 1)
        .div_cancel(&em1)
        .and_then(|base| base.pow(alpha))
        .expect("t/(e^t-1) is invertible")
}

/// `B_0^{(alpha)}(x), ..., B_{n_max}^{(alpha)}(x)`: higher-order Bernoulli
/// polynomials, generated by `(t/(e^t-1))^alpha e^{xt}`. Any integer order
/// is allowed; `alpha <= 0` uses `((e^t-1)/t)^{-alpha}`.
pub fn bernoulli_polys(n_max: usize, alpha: i64) -> Vec<Polynomial> {
    egf_with_exp_t(&bernoulli_prefactor(alpha, n_max))
}

pub fn bernoulli_poly(n: usize, alpha: i64) -> Polynomial {
    bernoulli_polys(n, alpha).pop().expect("n + 1 entries")
}

pub fn bernoulli_value(n: usize, alpha: i64, x0: &Rational) -> Rational {
    bernoulli_poly(n, alpha).eval(x0)
}

/// `((1 - lambda) / (e^t - lambda))^alpha`.
pub fn frobenius_euler_prefactor(alpha: usize, lambda: &Lambda, order: usize) -> TruncatedSeries {
    let lam = lambda.value();
    let den = &TruncatedSeries::exp(order) - &TruncatedSeries::constant(lam.clone(), order);
    let num = TruncatedSeries::constant(rational::one() - lam, order);
    num.div(&den)
        .and_then(|base| base.pow(alpha as i64))
        .expect("e^t - lambda is invertible for lambda != 1")
}

/// `H_0^{(alpha)}(x|lambda), ..., H_{n_max}^{(alpha)}(x|lambda)`.
pub fn frobenius_euler_polys(n_max: usize, alpha: usize, lambda: &Lambda) -> Vec<Polynomial> {
    egf_with_exp_t(&frobenius_euler_prefactor(alpha, lambda, n_max))
}

pub fn frobenius_euler_poly(n: usize, alpha: usize, lambda: &Lambda) -> Polynomial {
    frobenius_euler_polys(n, alpha, lambda)
        .pop()
        .expect("n + 1 entries")
}

pub fn frobenius_euler_value(n: usize, alpha: usize, lambda: &Lambda, x0: &Rational) -> Rational {
    frobenius_euler_poly(n, alpha, lambda).eval(x0)
}

/// `(t / ((1 + t) log(1 + t)))^r`.
pub fn cauchy2_prefactor(r: i64, order: usize) -> TruncatedSeries {
    let n = order + 1;
    let one_plus_t = TruncatedSeries::from_coeffs(vec![rational::one(), rational::one()], n);
    let den = &one_plus_t * &TruncatedSeries::log1p(n);
    TruncatedSeries::t(n)
        .div_cancel(&den)
        .and_then(|base| base.pow(r))
        .expect("(1+t)log(1+t)/t is invertible")
}

/// Cauchy numbers of the second kind of order `r`, indices `0..=n_max`.
pub fn cauchy2_numbers(n_max: usize, r: usize) -> Vec<Rational> {
    cauchy2_prefactor(r as i64, n_max).egf_coeffs()
}

pub fn cauchy2_number(n: usize, r: usize) -> Rational {
    cauchy2_numbers(n, r).pop().expect("n + 1 entries")
}

/// `C~_0^{(k)}(x), ..., C~_{n_max}^{(k)}(x)`: poly-Cauchy polynomials of the
/// second kind, generated by `Lif_k(-log(1+t)) (1+t)^x`.
///
/// The generating variable is `t` throughout, including inside the
/// polylogarithm factorial's argument.
pub fn poly_cauchy2_polys(n_max: usize, k: i64) -> Vec<Polynomial> {
    PolySeries::from_exp(&TruncatedSeries::log1p(n_max), &lif_of_neglog(k, n_max))
        .expect("log(1+t) has no constant term")
        .egf_polys()
}

pub fn poly_cauchy2_poly(n: usize, k: i64) -> Polynomial {
    poly_cauchy2_polys(n, k).pop().expect("n + 1 entries")
}

/// Poly-Cauchy numbers of the second kind (the polynomials at `x = 0`).
pub fn poly_cauchy2_numbers(n_max: usize, k: i64) -> Vec<Rational> {
    lif_of_neglog(k, n_max).egf_coeffs()
}

pub fn poly_cauchy2_value(n: usize, k: i64, x0: &Rational) -> Rational {
    poly_cauchy2_poly(n, k).eval(x0)
}

fn egf_with_exp_t(prefactor: &TruncatedSeries) -> Vec<Polynomial> {
    PolySeries::from_exp(&TruncatedSeries::t(prefactor.order()), prefactor)
        .expect("t has no constant term")
        .egf_polys()
}
