//! Acceptance gate. Runs each criterion in sequence, prints one PASS/FAIL
//! line per criterion and fails if any criterion fails.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use polycauchy::mixed_poly::identities as id;
use polycauchy::mixed_poly::{self, IdentityId, IdentityReport};
use polycauchy::sequences;
use polycauchy::series_core::rational::{self, int, ratio, Rational};
use polycauchy::series_core::{Polynomial, TruncatedSeries};
use polycauchy::sheffer::{self, pairing};
use polycauchy::verify::{run_suite, GridSpec, SuiteReport};

type Outcome = Result<(), String>;
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn all_equal(reports: impl IntoIterator<Item = IdentityReport>) -> Outcome {
    let mut count = 0;
    for rep in reports {
        count += 1;
        if !rep.equal {
            return Err(format!("{} failed at {}", rep.identity, rep.params));
        }
    }
    if count == 0 {
        return Err("nothing was checked".into());
    }
    Ok(())
}

fn suite_clean(grid: &GridSpec, ids: &[IdentityId]) -> Outcome {
    let rep: SuiteReport = run_suite(grid, ids).map_err(|e| e.to_string())?;
    if rep.fail > 0 {
        let f = rep.first_failure.unwrap();
        return Err(format!(
            "{} failures, first {} at {}",
            rep.fail, f.identity, f.params
        ));
    }
    for &ident in ids {
        if !rep
            .identities
            .iter()
            .any(|e| e.identity == ident && e.passed())
        {
            return Err(format!("{ident} had no passing tuple"));
        }
    }
    Ok(())
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn oracle_self_consistency() -> Outcome {
    for r in 0..=3 {
        for k in -2..=3 {
            let direct = mixed_poly::mixed_generating_series(r, k, 8).egf_polys();
            let pair = mixed_poly::mixed_pair(r, k, 8);
            for (n, expected) in direct.iter().enumerate() {
                let conj = sheffer::conjugate_expansion(&pair, n).map_err(|e| e.to_string())?;
                check(&conj == expected, || format!("n={n} r={r} k={k}"))?;
            }
        }
    }
    Ok(())
}

fn closed_forms() -> Outcome {
    use IdentityId::*;
    suite_clean(
        &GridSpec::default(),
        &[
            ClosedForm,
            NumberExpansion,
            ShiftedBernoulli,
            BernoulliProducts,
            FallingBasis,
        ],
    )
}

fn recurrences() -> Outcome {
    use IdentityId::*;
    suite_clean(
        &GridSpec::default(),
        &[OrderRaising, ShiftRecurrence, GenericRecurrence],
    )
}

fn basis_connections() -> Outcome {
    use IdentityId::*;
    suite_clean(
        &GridSpec::default(),
        &[BernoulliBasis, FrobeniusEulerBasis, ConnectionMatrix],
    )
}

fn double_evaluation() -> Outcome {
    let mut reports = Vec::new();
    for n in 2..=8 {
        for m in 1..n {
            for r in 1..=3 {
                for k in -1..=2 {
                    reports.push(
                        id::double_evaluation_identity(n, m, r, k).map_err(|e| e.to_string())?,
                    );
                }
            }
        }
    }
    all_equal(reports)
}

fn umbral_laws() -> Outcome {
    let xs = [int(0), int(1), int(-2), ratio(1, 2)];
    for n in 0..=8 {
        for kk in 0..=8 {
            let expected = if n == kk {
                rational::factorial(n)
            } else {
                Rational::from_integer(0.into())
            };
            let got = pairing(
                &TruncatedSeries::monomial(kk, int(1), 8),
                &Polynomial::monomial(n, int(1)),
            )
            .map_err(|e| e.to_string())?;
            check(got == expected, || format!("<t^{kk}|x^{n}>"))?;
        }
    }
    let p = Polynomial::new(vec![ratio(3, 2), int(-2), int(0), ratio(1, 3), int(5)]);
    let q = Polynomial::new(vec![int(1), ratio(-1, 7), int(2)]);
    let f = mixed_poly::mixed_pair_g(2, -1, 8);
    let h = sequences::lif_of_neglog(2, 8);
    let lin = |a: &Polynomial, b: &Polynomial| {
        pairing(&f, &(a + b)).unwrap() == pairing(&f, a).unwrap() + pairing(&f, b).unwrap()
    };
    check(lin(&p, &q), || "pairing is not additive".into())?;
    for n in 0..=8 {
        let xn = Polynomial::monomial(n, int(1));
        let split: Rational = (0..=n)
            .map(|j| {
                sequences::binomial(n, j as i64)
                    * pairing(&f, &Polynomial::monomial(j, int(1))).unwrap()
                    * pairing(&h, &Polynomial::monomial(n - j, int(1))).unwrap()
            })
            .sum();
        check(pairing(&(&f * &h), &xn).unwrap() == split, || {
            format!("product rule at x^{n}")
        })?;
    }
    for y in &xs {
        let e = TruncatedSeries::exp(8).dilate(y);
        check(pairing(&e, &p).unwrap() == p.eval(y), || {
            format!("<e^(yt)|p> at y={y}")
        })?;
    }
    let xp = &Polynomial::x() * &p;
    check(
        pairing(&f, &xp).unwrap() == pairing(&f.derivative(), &p).unwrap(),
        || "adjoint rule".into(),
    )?;

    let mut reports = Vec::new();
    for r in 0..=3 {
        for k in -2..=3 {
            for n in 0..=8 {
                reports.push(id::biorthogonality_identity(n, 8, r, k).map_err(|e| e.to_string())?);
                reports.push(id::delta_action_identity(n, r, k).map_err(|e| e.to_string())?);
                for y in &xs {
                    reports.push(id::addition_identity(n, r, k, y));
                }
            }
        }
    }
    all_equal(reports)
}

fn auxiliary_series() -> Outcome {
    let mut reports = Vec::new();
    for n in 0..=8 {
        for m in 0..=4 {
            reports.push(id::log_power_bernoulli_identity(n, m));
        }
    }
    for n in 0..=10 {
        for r in 0..=4 {
            reports.push(id::cauchy_bernoulli_identity(n, r));
        }
        reports.push(id::cauchy_diagonal_identity(n));
    }
    for k in -2..=3 {
        reports.push(id::lif_derivative_identity(k, 8).map_err(|e| e.to_string())?);
    }
    all_equal(reports)
}

fn derivative_formula() -> Outcome {
    suite_clean(&GridSpec::default(), &[IdentityId::Derivative])
}

fn known_values() -> Outcome {
    for r in 0..=3usize {
        for k in -2..=3i64 {
            check(
                mixed_poly::mixed_oracle(0, r, k) == Polynomial::one(),
                || format!("Ã_0 r={r} k={k}"),
            )?;
            let pinned = -ratio(r as i64, 2) - rational::pow_int(&int(2), -k).unwrap();
            check(mixed_poly::mixed_numbers(1, r, k)[1] == pinned, || {
                format!("Ã_1 r={r} k={k}")
            })?;
        }
    }
    let c = sequences::cauchy2_numbers(3, 1);
    check(
        c == [int(1), ratio(-1, 2), ratio(5, 6), ratio(-9, 4)],
        || format!("Cauchy numbers {c:?}"),
    )
}

fn end_to_end() -> Outcome {
    let mut outputs = Vec::new();
    for _ in 0..2 {
        let start = Instant::now();
        let o = Command::new(env!("CARGO_BIN_EXE_polycauchy"))
            .args(["verify", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        check(o.status.code() == Some(0), || {
            format!("exit status {:?}", o.status.code())
        })?;
        check(elapsed < Duration::from_secs(60), || {
            format!("took {elapsed:?}")
        })?;
        outputs.push(o.stdout);
    }
    check(outputs[0] == outputs[1], || {
        "reports differ between runs".into()
    })
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "oracle self-consistency",
            Some(10),
            oracle_self_consistency,
        ),
        (2, "closed forms and expansions", Some(30), closed_forms),
        (3, "recurrences", Some(20), recurrences),
        (4, "basis connections", None, basis_connections),
        (5, "double evaluation identity", None, double_evaluation),
        (6, "umbral laws", None, umbral_laws),
        (7, "auxiliary series identities", None, auxiliary_series),
        (8, "derivative formula", None, derivative_formula),
        (9, "known small values", None, known_values),
        (10, "end-to-end verify", None, end_to_end),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (num, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("over the {secs} s limit"))
            }
            (o, _) => o,
        };
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let detail = outcome
            .as_ref()
            .err()
            .map(|e| format!(": {e}"))
            .unwrap_or_default();
        writeln!(
            out,
            "criterion {num:>2} {status} {name} ({:.2} s){detail}",
            elapsed.as_secs_f64()
        )
        .unwrap();
        if outcome.is_err() {
            failed.push(num);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
