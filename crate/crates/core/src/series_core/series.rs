//! Truncated formal power series in `t` over the rationals.
//!
//! Coefficients are stored against plain powers `t^j`, never against
//! `t^j / j!`. A series of truncation order `N` carries exactly `N + 1`
//! coefficients and represents its value modulo `t^(N+1)`.
//!
//! Binary operations truncate to the smaller of the two orders. Nothing ever
//! silently extends a series past the order it was built with.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of truncation order `order`, padding with zeros or
    /// dropping terms beyond `t^order`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(1, rational::one(), order)
    }

    pub fn monomial(power: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds a series from exponential-generating-function coefficients:
    /// the result has `[t^j] = egf[j] / j!`.
    pub fn from_egf(egf: &[Rational], order: usize) -> Self {
        let coeffs = egf
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(j, a)| a / rational::factorial(j))
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    /// `j! * [t^j]` for every `j`, i.e. the coefficients in the
    /// exponential-generating-function convention.
    pub fn egf_coeffs(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * rational::factorial(j))
            .collect()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[t^j]`, zero beyond the stored terms.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_invertible(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs.len() > 1 && !self.coeffs[1].is_zero()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend a series");
        Self::from_coeffs(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Replaces `t` by `c * t`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut pw = rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pw;
                pw *= c;
                v
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Exact quotient `self / b`; `b` must be invertible.
    pub fn div(&self, b: &Self) -> Result<Self> {
        if !b.is_invertible() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(b.order());
        let b0_inv = b.coeffs[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = self.coeffs[j].clone();
            for i in 1..=j {
                acc -= &b.coeffs[i] * &q[j - i];
            }
            q.push(acc * &b0_inv);
        }
        Ok(Self { coeffs: q })
    }

    /// Quotient after cancelling the largest power of `t` dividing `b`.
    ///
    /// With `m = valuation(b)`, both operands are shifted down by `m`, so the
    /// result has truncation order `min(N_a, N_b) - m`. Fails when `a` is not
    /// divisible by `t^m` or `b` is zero.
    pub fn div_cancel(&self, b: &Self) -> Result<Self> {
        let m = b.valuation().ok_or(Error::DivisionByNonUnit)?;
        let order = self.order().min(b.order());
        if self.coeffs[..m].iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionByNonUnit);
        }
        let shift = |s: &Self| Self::from_coeffs(s.coeffs[m..=order].to_vec(), order - m);
        shift(self).div(&shift(b))
    }

    /// `self^m` for any integer `m`; negative powers need an invertible base.
    pub fn pow(&self, m: i64) -> Result<Self> {
        let base = if m < 0 { self.inverse()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `outer(inner(t))`; `inner` must have no constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeWithUnit);
        }
        let order = outer.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner in the outer coefficients.
        let mut acc = Self::constant(outer.coeffs[order].clone(), order);
        for j in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &outer.coeffs[j];
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `g(f(t)) = t`, solved order by order.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.is_delta() {
            return Err(Error::NotDelta);
        }
        let order = self.order();
        let lead_inv = self.coeffs[1].recip();
        let mut g = Self::monomial(1, lead_inv.clone(), order);
        for n in 2..=order {
            // [t^n] f(g) = f_1 g_n + (terms in g_1..g_{n-1}); g_n is still zero.
            let residual = Self::compose(self, &g)?.coeffs[n].clone();
            g.coeffs[n] = -residual * &lead_inv;
        }
        Ok(g)
    }

    /// Term-wise derivative; the truncation order drops by one.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=order)
            .map(|j| &self.coeffs[j] * rational::int(j as i64))
            .collect();
        Self::from_coeffs(coeffs, order - 1)
    }

    /// `e^t`.
    pub fn exp(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|j| rational::factorial(j).recip())
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    /// `log(1 + t)`.
    pub fn log1p(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|j| {
                if j == 0 {
                    Rational::zero()
                } else {
                    rational::sign(j as i64 - 1) * rational::ratio(1, j as i64)
                }
            })
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    /// `(1 + t)^a` via the binomial series, for rational `a`.
    pub fn binomial_power(a: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = rational::one();
        for j in 0..=order {
            coeffs.push(c.clone());
            c = c * (a - rational::int(j as i64)) / rational::int(j as i64 + 1);
        }
        Self::from_coeffs(coeffs, order)
    }

    /// `e^{a(t)}` for `a` without constant term.
    pub fn exp_of(&self) -> Result<Self> {
        Self::compose(&Self::exp(self.order()), self)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::serde_str::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = rational::serde_str::vec::deserialize(d)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom(
                "series needs at least one coefficient",
            ));
        }
        Ok(Self { coeffs })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| &self.coeffs[j] + &rhs.coeffs[j])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| &self.coeffs[j] - &rhs.coeffs[j])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// Cauchy product.
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}
