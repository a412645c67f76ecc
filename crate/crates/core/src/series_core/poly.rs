//! Dense univariate polynomials in `x` over the rationals.
//!
//! The zero polynomial is the empty coefficient list; otherwise the last
//! stored coefficient is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, rational::one())
    }

    pub fn monomial(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `c + x`, handy for argument shifts.
    pub fn shifted_x(c: Rational) -> Self {
        Self::new(vec![c, rational::one()])
    }

    /// `c - x`, for reflected arguments.
    pub fn reflected_x(c: Rational) -> Self {
        Self::new(vec![c, -rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at `x0`.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }

    pub fn derivative(&self) -> Polynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * rational::int(j as i64))
                .collect(),
        )
    }

    /// The `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Polynomial {
        if k >= self.coeffs.len() {
            return Polynomial::zero();
        }
        // d^k x^j = j!/(j-k)! x^{j-k}
        let coeffs = (k..self.coeffs.len())
            .map(|j| &self.coeffs[j] * rational::factorial(j) / rational::factorial(j - k))
            .collect();
        Self::new(coeffs)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Polynomial{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Polynomial {
    /// Human-readable form such as `x^2 - 3/2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag == rational::one();
            match j {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{j}")?,
                _ => write!(f, "{mag}*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_str::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        rational::serde_str::vec::deserialize(d).map(Polynomial::new)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Self) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}
