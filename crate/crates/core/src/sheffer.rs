//! Umbral calculus over truncated series.
//!
//! A series `f(t)` acts on polynomials in two ways: as a linear functional
//! through the pairing `<t^k | x^n> = n! delta_{n,k}`, and as an operator
//! where `t^k` differentiates `k` times. A [`ShefferPair`] `(g, f)` with `g`
//! invertible and `f` a delta series determines the unique polynomial
//! sequence with `<g(t) f(t)^k | s_n(x)> = n! delta_{n,k}`.
//!
//! Series are stored with plain `t^k` coefficients, so the functional value
//! `<f(t) | x^k>` equals `k! [t^k] f`. That conversion happens only in
//! [`pairing`] and [`apply_series`].

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequences::{self, Lambda};
use crate::series_core::rational::{self, Rational};
use crate::series_core::{PolySeries, Polynomial, TruncatedSeries};

fn require_order(series: &TruncatedSeries, p: &Polynomial) -> Result<()> {
    let needed = p.degree().unwrap_or(0);
    if series.order() < needed {
        return Err(Error::TruncationTooShort {
            needed,
            have: series.order(),
        });
    }
    Ok(())
}

/// `<f(t) | p(x)>`.
pub fn pairing(f: &TruncatedSeries, p: &Polynomial) -> Result<Rational> {
    require_order(f, p)?;
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| f.coeff(k) * rational::factorial(k) * c)
        .sum())
}

/// `f(t) p(x) = sum_k [t^k]f * p^{(k)}(x)`.
pub fn apply_series(f: &TruncatedSeries, p: &Polynomial) -> Result<Polynomial> {
    require_order(f, p)?;
    let deg = match p.degree() {
        Some(d) => d,
        None => return Ok(Polynomial::zero()),
    };
    Ok((0..=deg)
        .filter(|&k| !f.coeff(k).is_zero())
        .map(|k| p.nth_derivative(k).scale(&f.coeff(k)))
        .sum())
}

/// A validated pair `(g, f)` together with the compositional inverse of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShefferPair {
    g: TruncatedSeries,
    f: TruncatedSeries,
    f_bar: TruncatedSeries,
}

impl ShefferPair {
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Result<Self> {
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let order = g.order().min(f.order());
        let g = g.truncate(order);
        let f = f.truncate(order);
        let f_bar = f.compositional_inverse()?;
        Ok(Self { g, f, f_bar })
    }

    /// `(1, t)`: the monomials `x^n`.
    pub fn identity(order: usize) -> Self {
        let order = order.max(1);
        Self::new(TruncatedSeries::one(order), TruncatedSeries::t(order)).expect("valid pair")
    }

    /// `(1, e^t - 1)`: the falling factorials `(x)_n`.
    pub fn falling_factorial(order: usize) -> Self {
        let order = order.max(1);
        let f = &TruncatedSeries::exp(order) - &TruncatedSeries::one(order);
        Self::new(TruncatedSeries::one(order), f).expect("valid pair")
    }

    /// `(((e^t - 1)/t)^s, t)`: Bernoulli polynomials of order `s`.
    pub fn bernoulli(s: i64, order: usize) -> Self {
        let order = order.max(1);
        let g = sequences::bernoulli_prefactor(-s, order);
        Self::new(g, TruncatedSeries::t(order)).expect("valid pair")
    }

    /// `(((e^t - lambda)/(1 - lambda))^s, t)`: Frobenius-Euler polynomials.
    pub fn frobenius_euler(s: usize, lambda: &Lambda, order: usize) -> Self {
        let order = order.max(1);
        let g = sequences::frobenius_euler_prefactor(s, lambda, order)
            .inverse()
            .expect("prefactor is invertible");
        Self::new(g, TruncatedSeries::t(order)).expect("valid pair")
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn f_bar(&self) -> &TruncatedSeries {
        &self.f_bar
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `1 / g(f_bar(t))`, the prefactor of the generating function.
    pub fn generating_prefactor(&self) -> TruncatedSeries {
        TruncatedSeries::compose(&self.g, &self.f_bar)
            .and_then(|gf| gf.inverse())
            .expect("g invertible and f_bar delta")
    }

    fn require(&self, n: usize) -> Result<()> {
        if self.order() < n {
            return Err(Error::TruncationTooShort {
                needed: n,
                have: self.order(),
            });
        }
        Ok(())
    }
}

/// `s_0, ..., s_{n_max}` read off `exp(x f_bar(t)) / g(f_bar(t))`.
pub fn sheffer_polys(pair: &ShefferPair, n_max: usize) -> Result<Vec<Polynomial>> {
    pair.require(n_max)?;
    let order = n_max;
    let u = pair.f_bar.truncate(order);
    let pre = pair.generating_prefactor().truncate(order);
    Ok(PolySeries::from_exp(&u, &pre)?.egf_polys())
}

/// `s_n(x) = sum_j (1/j!) <g(f_bar)^{-1} f_bar^j | x^n> x^j`, computed
/// coefficient by coefficient through the pairing.
pub fn conjugate_expansion(pair: &ShefferPair, n: usize) -> Result<Polynomial> {
    pair.require(n)?;
    let pre = pair.generating_prefactor().truncate(n);
    let f_bar = pair.f_bar.truncate(n);
    let xn = Polynomial::monomial(n, rational::one());
    let mut term = pre;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        coeffs.push(pairing(&term, &xn)? / rational::factorial(j));
        term = &term * &f_bar;
    }
    Ok(Polynomial::new(coeffs))
}

/// Lower-triangular change-of-basis matrix `s_n = sum_m C[n][m] r_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionMatrix {
    entries: Vec<Vec<Rational>>,
}

impl ConnectionMatrix {
    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    /// `C[n][m]`, zero above the diagonal.
    pub fn get(&self, n: usize, m: usize) -> Rational {
        self.entries[n]
            .get(m)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.entries[n]
    }

    /// `sum_m C[n][m] basis[m]` for every row.
    pub fn expand(&self, basis: &[Polynomial]) -> Vec<Polynomial> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(basis).map(|(c, b)| b.scale(c)).sum())
            .collect()
    }
}

/// `C[n][m] = (1/m!) <h(f_bar)/g(f_bar) l(f_bar)^m | x^n>` for
/// `s_n ~ (g, f)` (`from`) and `r_n ~ (h, l)` (`to`).
pub fn connection_coeffs(
    from: &ShefferPair,
    to: &ShefferPair,
    n_max: usize,
) -> Result<ConnectionMatrix> {
    from.require(n_max)?;
    to.require(n_max)?;
    let f_bar = from.f_bar.truncate(n_max);
    let h_of = TruncatedSeries::compose(&to.g.truncate(n_max), &f_bar)?;
    let l_of = TruncatedSeries::compose(&to.f.truncate(n_max), &f_bar)?;
    let base = &h_of * &from.generating_prefactor().truncate(n_max);

    let mut powers = Vec::with_capacity(n_max + 1);
    let mut term = base;
    for _ in 0..=n_max {
        powers.push(term.clone());
        term = &term * &l_of;
    }
    let entries = (0..=n_max)
        .map(|n| {
            let xn = Polynomial::monomial(n, rational::one());
            (0..=n)
                .map(|m| Ok(pairing(&powers[m], &xn)? / rational::factorial(m)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectionMatrix { entries })
}

/// `s_{n+1}(x) = (x - g'(t)/g(t)) (1/f'(t)) s_n(x)`.
pub fn sheffer_recurrence_next(pair: &ShefferPair, s_n: &Polynomial) -> Result<Polynomial> {
    let n = s_n.degree().unwrap_or(0);
    // Derivatives lose one order of truncation.
    pair.require(n + 1)?;
    let inv_f_prime = pair.f.derivative().inverse()?;
    let log_deriv_g = pair
        .g
        .derivative()
        .div(&pair.g.truncate(pair.order() - 1))?;
    let q = apply_series(&inv_f_prime, s_n)?;
    let xq = &Polynomial::x() * &q;
    Ok(&xq - &apply_series(&log_deriv_g, &q)?)
}

/// Outcome of checking `f(t) s_n(x) = n s_{n-1}(x)` across a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaActionReport {
    pub checked: usize,
    /// Indices `n` where the identity failed or could not be evaluated.
    pub failures: Vec<usize>,
}

impl DeltaActionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn delta_action_check(pair: &ShefferPair, polys: &[Polynomial]) -> DeltaActionReport {
    let mut failures = Vec::new();
    for (n, s_n) in polys.iter().enumerate() {
        let expected = if n == 0 {
            Polynomial::zero()
        } else {
            polys[n - 1].scale(&rational::int(n as i64))
        };
        match apply_series(&pair.f, s_n) {
            Ok(got) if got == expected => {}
            _ => failures.push(n),
        }
    }
    DeltaActionReport {
        checked: polys.len(),
        failures,
    }
}

/// Pairs `(n, k)` where `<g f^k | s_n> != n! delta_{n,k}`, for `n, k` up to
/// `polys.len() - 1`.
pub fn biorthogonality_failures(
    pair: &ShefferPair,
    polys: &[Polynomial],
) -> Result<Vec<(usize, usize)>> {
    let top = polys.len().saturating_sub(1);
    pair.require(top)?;
    let f = pair.f.truncate(top);
    let mut functional = pair.g.truncate(top);
    let mut failures = Vec::new();
    for k in 0..=top {
        for (n, s_n) in polys.iter().enumerate() {
            let expected = if n == k {
                rational::factorial(n)
            } else {
                Rational::zero()
            };
            if pairing(&functional, s_n)? != expected {
                failures.push((n, k));
            }
        }
        functional = &functional * &f;
    }
    failures.sort_unstable();
    Ok(failures)
}

/// The binomial-type addition rule
/// `s_n(x + y) = sum_k C(n,k) s_k(x) p_{n-k}(y)` with `p_m = g(t) s_m`,
/// checked for one rational `y` as a polynomial identity in `x`.
/// Returns the indices `n` where it fails.
pub fn addition_failures(
    pair: &ShefferPair,
    polys: &[Polynomial],
    y: &Rational,
) -> Result<Vec<usize>> {
    let p_at_y = polys
        .iter()
        .map(|s| Ok(apply_series(&pair.g, s)?.eval(y)))
        .collect::<Result<Vec<_>>>()?;
    let shift = Polynomial::shifted_x(y.clone());
    Ok(polys
        .iter()
        .enumerate()
        .filter(|(n, s_n)| {
            let lhs = s_n.compose(&shift);
            let rhs: Polynomial = (0..=*n)
                .map(|k| polys[k].scale(&(sequences::binomial(*n, k as i64) * &p_at_y[n - k])))
                .sum();
            lhs != rhs
        })
        .map(|(n, _)| n)
        .collect())
}

/// `d/dx s_n(x) = sum_{l<n} C(n,l) <f_bar(t) | x^{n-l}> s_l(x)`.
pub fn derivative_expansion(
    pair: &ShefferPair,
    polys: &[Polynomial],
    n: usize,
) -> Result<Polynomial> {
    pair.require(n)?;
    (0..n)
        .map(|l| {
            let w = pairing(&pair.f_bar, &Polynomial::monomial(n - l, rational::one()))?;
            Ok(polys[l].scale(&(sequences::binomial(n, l as i64) * w)))
        })
        .sum::<Result<Polynomial>>()
}
