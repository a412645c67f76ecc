//! Grid harness: runs identities over parameter ranges and collects exact
//! pass/fail/skip outcomes into a deterministic report.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mixed_poly::expansions as ex;
use crate::mixed_poly::identities as id;
use crate::mixed_poly::recurrences as rec;
use crate::mixed_poly::{mixed_oracle_row, IdentityId, IdentityParams, IdentityReport, Value};
use crate::series_core::rational::{self, Rational};

/// Parameter ranges for [`run_suite`].
///
/// `n` runs over `1..=n_max` for every identity except the shift recurrence,
/// which produces `Ã_{n+1}` from `n` in `0..n_max`. The second index `m` of
/// the double evaluation identity and of the log-power identity also runs
/// over `1..=n_max`; tuples outside an identity's domain are skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n_max: usize,
    pub r_set: Vec<usize>,
    pub k_set: Vec<i64>,
    pub s_set: Vec<usize>,
    pub lambda_set: Vec<Rational>,
    pub y_samples: Vec<Rational>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_max: 8,
            r_set: vec![0, 1, 2, 3],
            k_set: vec![-2, -1, 0, 1, 2, 3],
            s_set: vec![1, 2, 3],
            lambda_set: vec![rational::int(-1), rational::int(2), rational::ratio(1, 2)],
            y_samples: vec![
                rational::int(0),
                rational::int(1),
                rational::int(-2),
                rational::ratio(1, 2),
            ],
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(Error::Config("n_max must be at least 1".into()));
        }
        let empty = [
            ("r", self.r_set.is_empty()),
            ("k", self.k_set.is_empty()),
            ("s", self.s_set.is_empty()),
            ("lambda", self.lambda_set.is_empty()),
            ("y", self.y_samples.is_empty()),
        ];
        if let Some((name, _)) = empty.iter().find(|(_, e)| *e) {
            return Err(Error::Config(format!("{name} range is empty")));
        }
        if self.lambda_set.iter().any(|l| *l == rational::one()) {
            return Err(Error::Config("lambda = 1 is not allowed".into()));
        }
        Ok(())
    }

    /// Truncation order used for the shared oracle rows.
    pub fn truncation(&self) -> usize {
        self.n_max + 2
    }
}

/// One enumerated parameter tuple and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub identity: IdentityId,
    pub params: IdentityParams,
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SuiteEntry {
    fn from_report(rep: IdentityReport) -> Self {
        Self {
            identity: rep.identity,
            params: rep.params,
            equal: rep.equal,
            lhs: Some(rep.lhs),
            rhs: Some(rep.rhs),
            skipped: false,
            note: None,
        }
    }

    fn without_values(
        identity: IdentityId,
        params: IdentityParams,
        skipped: bool,
        note: String,
    ) -> Self {
        Self {
            identity,
            params,
            equal: false,
            lhs: None,
            rhs: None,
            skipped,
            note: Some(note),
        }
    }

    pub fn passed(&self) -> bool {
        !self.skipped && self.equal
    }

    pub fn failed(&self) -> bool {
        !self.skipped && !self.equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRef {
    pub identity: IdentityId,
    pub params: IdentityParams,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub identities: Vec<SuiteEntry>,
    pub pass: usize,
    pub fail: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FailureRef>,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

impl SuiteReport {
    /// Sorts entries by `(identity, params)` and recomputes the totals.
    pub fn from_entries(mut entries: Vec<SuiteEntry>) -> Self {
        entries.sort_by(|a, b| (a.identity, &a.params).cmp(&(b.identity, &b.params)));
        let pass = entries.iter().filter(|e| e.passed()).count();
        let fail = entries.iter().filter(|e| e.failed()).count();
        let skipped = entries.iter().filter(|e| e.skipped).count();
        let first_failure = entries.iter().find(|e| e.failed()).map(|e| FailureRef {
            identity: e.identity,
            params: e.params.clone(),
        });
        Self {
            identities: entries,
            pass,
            fail,
            skipped,
            first_failure,
        }
    }

    pub fn total(&self) -> usize {
        self.identities.len()
    }

    pub fn count_for(&self, identity: IdentityId) -> usize {
        self.identities
            .iter()
            .filter(|e| e.identity == identity)
            .count()
    }
}

pub fn report_to_json(report: &SuiteReport) -> String {
    serde_json::to_string(report).expect("report is always serializable")
}

pub fn report_from_json(text: &str) -> Result<SuiteReport> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid report: {e}")))
}

/// Every parameter tuple enumerated for `identity` on `grid`.
pub fn enumerate(grid: &GridSpec, identity: IdentityId) -> Vec<IdentityParams> {
    use IdentityId::*;
    let ns = 1..=grid.n_max;
    let nrk = |n_range: std::ops::RangeInclusive<usize>| {
        let mut out = Vec::new();
        for n in n_range {
            for &r in &grid.r_set {
                for &k in &grid.k_set {
                    out.push(IdentityParams::nrk(n, r, k));
                }
            }
        }
        out
    };
    let with = |base: Vec<IdentityParams>, f: &dyn Fn(&IdentityParams) -> Vec<IdentityParams>| {
        base.iter().flat_map(f).collect::<Vec<_>>()
    };
    match identity {
        ConjugateOracle | ClosedForm | NumberExpansion | ShiftedBernoulli | BernoulliProducts
        | DeltaAction | OperatorInverse | GenericRecurrence | OrderRaising | Derivative
        | ConnectionMatrix | FallingBasis | Biorthogonality => nrk(ns),
        ShiftRecurrence => nrk(0..=grid.n_max - 1),
        Addition => with(nrk(ns), &|p| {
            grid.y_samples
                .iter()
                .map(|y| IdentityParams {
                    y: Some(y.clone()),
                    ..p.clone()
                })
                .collect()
        }),
        DoubleEvaluation => with(nrk(ns), &|p| {
            (1..=grid.n_max)
                .map(|m| IdentityParams {
                    m: Some(m),
                    ..p.clone()
                })
                .collect()
        }),
        BernoulliBasis => with(nrk(ns), &|p| {
            grid.s_set
                .iter()
                .map(|&s| IdentityParams {
                    s: Some(s),
                    ..p.clone()
                })
                .collect()
        }),
        FrobeniusEulerBasis => with(nrk(ns), &|p| {
            grid.s_set
                .iter()
                .flat_map(|&s| {
                    grid.lambda_set.iter().map(move |l| IdentityParams {
                        s: Some(s),
                        lambda: Some(l.clone()),
                        ..p.clone()
                    })
                })
                .collect()
        }),
        LifDerivative => {
            let mut out = Vec::new();
            for n in 1..=grid.n_max {
                for &k in &grid.k_set {
                    out.push(IdentityParams {
                        n,
                        k: Some(k),
                        ..Default::default()
                    });
                }
            }
            out
        }
        LogPowerBernoulli => {
            let mut out = Vec::new();
            for n in 1..=grid.n_max {
                for m in 1..=grid.n_max {
                    out.push(IdentityParams {
                        n,
                        m: Some(m),
                        ..Default::default()
                    });
                }
            }
            out
        }
        CauchyBernoulli => {
            let mut out = Vec::new();
            for n in 1..=grid.n_max {
                for &r in &grid.r_set {
                    out.push(IdentityParams {
                        n,
                        r: Some(r),
                        ..Default::default()
                    });
                }
            }
            out
        }
        CauchyDiagonal => (1..=grid.n_max)
            .map(|n| IdentityParams {
                n,
                ..Default::default()
            })
            .collect(),
    }
}

fn against_oracle(
    identity: IdentityId,
    p: &IdentityParams,
    computed: Result<crate::series_core::Polynomial>,
) -> Result<IdentityReport> {
    let (n, r, k) = (p.n, p.r.unwrap_or(0), p.k.unwrap_or(0));
    Ok(IdentityReport::compare(
        identity,
        p.clone(),
        mixed_oracle_row(n, r, k)[n].clone(),
        computed?,
    ))
}

/// Evaluates one tuple. Domain violations come back as `Err(ParamDomain)`.
pub fn evaluate(identity: IdentityId, p: &IdentityParams) -> Result<IdentityReport> {
    use IdentityId::*;
    let (n, r, k) = (p.n, p.r.unwrap_or(0), p.k.unwrap_or(0));
    let m = p.m.unwrap_or(0);
    let s = p.s.unwrap_or(0);
    match identity {
        ConjugateOracle => id::conjugate_identity(n, r, k),
        ClosedForm => against_oracle(identity, p, Ok(ex::closed_form_triple_sum(n, r, k))),
        NumberExpansion => against_oracle(identity, p, Ok(ex::number_expansion(n, r, k))),
        ShiftedBernoulli => {
            against_oracle(identity, p, Ok(ex::shifted_bernoulli_expansion(n, r, k)))
        }
        BernoulliProducts => against_oracle(identity, p, ex::bernoulli_products_expansion(n, r, k)),
        FallingBasis => against_oracle(identity, p, Ok(ex::falling_factorial_expansion(n, r, k))),
        BernoulliBasis => against_oracle(identity, p, ex::bernoulli_basis_expansion(n, r, k, s)),
        FrobeniusEulerBasis => {
            let lambda = p
                .lambda
                .clone()
                .ok_or_else(|| Error::Config("lambda missing".into()))?;
            against_oracle(
                identity,
                p,
                ex::frobenius_euler_basis_expansion(n, r, k, s, &lambda),
            )
        }
        OrderRaising => against_oracle(identity, p, rec::order_raising_recurrence(n, r, k)),
        ShiftRecurrence => Ok(IdentityReport::compare(
            identity,
            p.clone(),
            mixed_oracle_row(n + 1, r, k)[n + 1].clone(),
            rec::shift_recurrence(n, r, k),
        )),
        Addition => {
            let y =
                p.y.clone()
                    .ok_or_else(|| Error::Config("y missing".into()))?;
            Ok(id::addition_identity(n, r, k, &y))
        }
        DeltaAction => id::delta_action_identity(n, r, k),
        OperatorInverse => id::operator_identity(n, r, k),
        GenericRecurrence => id::generic_recurrence_identity(n, r, k),
        DoubleEvaluation => id::double_evaluation_identity(n, m, r, k),
        LifDerivative => id::lif_derivative_identity(k, n),
        Derivative => id::derivative_identity(n, r, k),
        ConnectionMatrix => id::connection_identity(n, r, k),
        Biorthogonality => id::biorthogonality_identity(n, n + 1, r, k),
        LogPowerBernoulli => Ok(id::log_power_bernoulli_identity(n, m)),
        CauchyBernoulli => Ok(id::cauchy_bernoulli_identity(n, r)),
        CauchyDiagonal => Ok(id::cauchy_diagonal_identity(n)),
    }
}

/// Runs every selected identity over its sub-grid. Tuples violating an
/// identity's preconditions are recorded as skipped.
pub fn run_suite(grid: &GridSpec, identities: &[IdentityId]) -> Result<SuiteReport> {
    grid.validate()?;
    if identities.is_empty() {
        return Err(Error::Config("no identities selected".into()));
    }
    let mut selected = identities.to_vec();
    selected.sort();
    selected.dedup();

    // Warm the shared oracle rows, including the neighbours (r+1, k-1) used
    // by the recurrences and the double evaluation identity.
    let mut keys: Vec<(usize, i64)> = Vec::new();
    for &r in &grid.r_set {
        for &k in &grid.k_set {
            for key in [(r, k), (r + 1, k), (r + 1, k - 1)] {
                if !keys.contains(&key) {
                    keys.push(key);
                }
            }
        }
    }
    let order = grid.truncation();
    keys.par_iter().for_each(|&(r, k)| {
        mixed_oracle_row(order, r, k);
    });

    let tasks: Vec<(IdentityId, IdentityParams)> = selected
        .iter()
        .flat_map(|&ident| enumerate(grid, ident).into_iter().map(move |p| (ident, p)))
        .collect();
    let entries = tasks
        .into_par_iter()
        .map(|(ident, p)| match evaluate(ident, &p) {
            Ok(rep) => SuiteEntry::from_report(rep),
            Err(e @ (Error::ParamDomain(_) | Error::RequiresPositiveR)) => {
                SuiteEntry::without_values(ident, p, true, e.to_string())
            }
            Err(e) => SuiteEntry::without_values(ident, p, false, e.to_string()),
        })
        .collect();
    Ok(SuiteReport::from_entries(entries))
}
