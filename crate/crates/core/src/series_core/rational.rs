//! Exact rational scalars and their canonical text form.
//!
//! The canonical string is `"p/q"` with `q > 0`, or `"p"` when `q = 1`; the
//! sign lives on the numerator. `BigRational` is always kept in lowest terms
//! by `num-rational`, so `Display` already produces this form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// `base^exp` for any integer exponent; `0^negative` is rejected.
pub fn pow_int(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::DivisionByNonUnit);
    }
    let mut acc = one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    Ok(if exp < 0 { acc.recip() } else { acc })
}

/// `(-1)^e`.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

pub fn to_canonical(q: &Rational) -> String {
    q.to_string()
}

/// Parses `"p"` or `"p/q"` with optional leading minus on `p`.
///
/// Decimals, exponents, whitespace, a signed or zero denominator are all
/// rejected.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let num_body = num.strip_prefix('-').unwrap_or(num);
    if !digits(num_body) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Serde adapters writing rationals as canonical strings.
pub mod serde_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_canonical(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(D::Error::custom)
    }

    pub mod option {
        use super::super::Rational;
        use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_str(&super::super::to_canonical(q)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| super::super::parse(&s).map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::super::Rational;
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&super::super::to_canonical(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| super::super::parse(s).map_err(D::Error::custom))
                .collect()
        }
    }
}
