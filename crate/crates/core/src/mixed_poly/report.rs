use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::series_core::rational::{self, Rational};
use crate::series_core::{Polynomial, TruncatedSeries};

/// Every identity the harness knows how to check. The short keys are the
/// stable names used in reports and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// Conjugate (pairing) representation against the generating function.
    ConjugateOracle,
    ClosedForm,
    NumberExpansion,
    ShiftedBernoulli,
    BernoulliProducts,
    Addition,
    DeltaAction,
    OperatorInverse,
    GenericRecurrence,
    ShiftRecurrence,
    OrderRaising,
    DoubleEvaluation,
    LifDerivative,
    Derivative,
    BernoulliBasis,
    FrobeniusEulerBasis,
    ConnectionMatrix,
    FallingBasis,
    Biorthogonality,
    LogPowerBernoulli,
    CauchyBernoulli,
    CauchyDiagonal,
}

impl IdentityId {
    pub const ALL: [IdentityId; 22] = [
        IdentityId::ConjugateOracle,
        IdentityId::ClosedForm,
        IdentityId::NumberExpansion,
        IdentityId::ShiftedBernoulli,
        IdentityId::BernoulliProducts,
        IdentityId::Addition,
        IdentityId::DeltaAction,
        IdentityId::OperatorInverse,
        IdentityId::GenericRecurrence,
        IdentityId::ShiftRecurrence,
        IdentityId::OrderRaising,
        IdentityId::DoubleEvaluation,
        IdentityId::LifDerivative,
        IdentityId::Derivative,
        IdentityId::BernoulliBasis,
        IdentityId::FrobeniusEulerBasis,
        IdentityId::ConnectionMatrix,
        IdentityId::FallingBasis,
        IdentityId::Biorthogonality,
        IdentityId::LogPowerBernoulli,
        IdentityId::CauchyBernoulli,
        IdentityId::CauchyDiagonal,
    ];

    pub fn key(self) -> &'static str {
        match self {
            IdentityId::ConjugateOracle => "conjugate_oracle",
            IdentityId::ClosedForm => "closed_form",
            IdentityId::NumberExpansion => "number_expansion",
            IdentityId::ShiftedBernoulli => "shifted_bernoulli",
            IdentityId::BernoulliProducts => "bernoulli_products",
            IdentityId::Addition => "addition",
            IdentityId::DeltaAction => "delta_action",
            IdentityId::OperatorInverse => "operator_inverse",
            IdentityId::GenericRecurrence => "generic_recurrence",
            IdentityId::ShiftRecurrence => "shift_recurrence",
            IdentityId::OrderRaising => "order_raising",
            IdentityId::DoubleEvaluation => "double_evaluation",
            IdentityId::LifDerivative => "lif_derivative",
            IdentityId::Derivative => "derivative",
            IdentityId::BernoulliBasis => "bernoulli_basis",
            IdentityId::FrobeniusEulerBasis => "frobenius_euler_basis",
            IdentityId::ConnectionMatrix => "connection_matrix",
            IdentityId::FallingBasis => "falling_basis",
            IdentityId::Biorthogonality => "biorthogonality",
            IdentityId::LogPowerBernoulli => "log_power_bernoulli",
            IdentityId::CauchyBernoulli => "cauchy_bernoulli",
            IdentityId::CauchyDiagonal => "cauchy_diagonal",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::ConjugateOracle => {
                "conjugate representation equals the generating function"
            }
            IdentityId::ClosedForm => "triple-sum closed form with Stirling numbers of both kinds",
            IdentityId::NumberExpansion => "expansion through the numbers and S1",
            IdentityId::ShiftedBernoulli => {
                "expansion through shifted-order Bernoulli values and poly-Cauchy numbers"
            }
            IdentityId::BernoulliProducts => {
                "expansion through products of diagonal Bernoulli numbers"
            }
            IdentityId::Addition => "addition formula against falling factorials",
            IdentityId::DeltaAction => "(e^t - 1) lowers the index",
            IdentityId::OperatorInverse => "inverse prefactor operator maps the sequence to (x)_n",
            IdentityId::GenericRecurrence => "generic Sheffer recurrence",
            IdentityId::ShiftRecurrence => "recurrence with Bernoulli terms at reflected arguments",
            IdentityId::OrderRaising => "recurrence through order r+1 terms",
            IdentityId::DoubleEvaluation => "two-way evaluation including values at x = -1",
            IdentityId::LifDerivative => "derivative of Lif_k(-log(1+t))",
            IdentityId::Derivative => "x-derivative as a combination of lower members",
            IdentityId::BernoulliBasis => "expansion in Bernoulli polynomials of order s",
            IdentityId::FrobeniusEulerBasis => "expansion in Frobenius-Euler polynomials",
            IdentityId::ConnectionMatrix => "generic connection coefficients to falling factorials",
            IdentityId::FallingBasis => "expansion in falling factorials",
            IdentityId::Biorthogonality => "biorthogonality against g(t) f(t)^k",
            IdentityId::LogPowerBernoulli => {
                "(t/log(1+t))^m (1+t)^(x-1) generates shifted-order Bernoulli polynomials"
            }
            IdentityId::CauchyBernoulli => "Cauchy numbers of order r as Bernoulli values",
            IdentityId::CauchyDiagonal => "Cauchy numbers of order 1 as diagonal Bernoulli numbers",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.key() == s)
            .ok_or_else(|| Error::Config(format!("unknown identity {s:?}")))
    }
}

/// Parameters of one checked instance. Only the fields meaningful for the
/// identity are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdentityParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational::serde_str::option"
    )]
    pub lambda: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational::serde_str::option"
    )]
    pub y: Option<Rational>,
}

impl IdentityParams {
    pub fn nrk(n: usize, r: usize, k: i64) -> Self {
        Self {
            n,
            r: Some(r),
            k: Some(k),
            ..Default::default()
        }
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(y) = &self.y {
            write!(f, " y={y}")?;
        }
        Ok(())
    }
}

/// One side of a compared identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Scalar(#[serde(with = "rational::serde_str")] Rational),
    Poly(Polynomial),
    Series(TruncatedSeries),
    Values(#[serde(with = "rational::serde_str::vec")] Vec<Rational>),
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Scalar(q)
    }
}

impl From<Polynomial> for Value {
    fn from(p: Polynomial) -> Self {
        Value::Poly(p)
    }
}

impl From<TruncatedSeries> for Value {
    fn from(s: TruncatedSeries) -> Self {
        Value::Series(s)
    }
}

impl From<Vec<Rational>> for Value {
    fn from(v: Vec<Rational>) -> Self {
        Value::Values(v)
    }
}

/// An exact comparison of two independently computed sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: IdentityParams,
    pub lhs: Value,
    pub rhs: Value,
    pub equal: bool,
}

impl IdentityReport {
    pub fn compare(
        identity: IdentityId,
        params: IdentityParams,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let equal = lhs == rhs;
        Self {
            identity,
            params,
            lhs,
            rhs,
            equal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_core::rational::{int, ratio};

    #[test]
    fn keys_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.key().parse::<IdentityId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.key()));
        }
        assert!("theorem".parse::<IdentityId>().is_err());
    }

    #[test]
    fn report_serializes_with_canonical_rationals() {
        let params = IdentityParams {
            lambda: Some(ratio(1, 2)),
            ..IdentityParams::nrk(2, 1, -1)
        };
        let rep = IdentityReport::compare(
            IdentityId::FrobeniusEulerBasis,
            params,
            Polynomial::new(vec![ratio(-3, 4), int(1)]),
            Polynomial::new(vec![ratio(-3, 4), int(1)]),
        );
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            json,
            r#"{"identity":"frobenius_euler_basis","params":{"n":2,"r":1,"k":-1,"lambda":"1/2"},"lhs":{"poly":["-3/4","1"]},"rhs":{"poly":["-3/4","1"]},"equal":true}"#
        );
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }
}
