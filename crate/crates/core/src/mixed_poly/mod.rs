//! Higher-order Cauchy of the second kind and poly-Cauchy of the second
//! kind mixed type polynomials `Ã_n^{(r,k)}(x)`.
//!
//! The ground truth is the generating function
//!
//! ```text
//! (t / ((1+t) log(1+t)))^r  Lif_k(-log(1+t))  (1+t)^x  =  sum_n Ã_n^{(r,k)}(x) t^n / n!
//! ```
//!
//! evaluated exactly by [`mixed_oracle`]. Every closed form, recurrence and
//! basis expansion in [`expansions`], [`recurrences`] and [`identities`] is
//! computed by its own route and compared against this oracle; none of them
//! is trusted on its own.
//!
//! The same sequence is the Sheffer sequence for
//! `((t e^t / (e^t - 1))^r / Lif_k(-t), e^t - 1)`, see [`mixed_pair`]. The
//! numbers `Ã_n^{(r,k)} = Ã_n^{(r,k)}(0)` appear in the literature as
//! `T~_{r+1}^{(k)}(n)` as well.

pub mod expansions;
pub mod identities;
pub mod recurrences;
mod report;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub use report::{IdentityId, IdentityParams, IdentityReport, Value};

use crate::sequences;
use crate::series_core::rational::Rational;
use crate::series_core::{PolySeries, Polynomial, TruncatedSeries};
use crate::sheffer::ShefferPair;

/// `(t/((1+t)log(1+t)))^r Lif_k(-log(1+t))`, the `x`-free part of the
/// generating function.
pub fn mixed_prefactor(r: usize, k: i64, order: usize) -> TruncatedSeries {
    &sequences::cauchy2_prefactor(r as i64, order) * &sequences::lif_of_neglog(k, order)
}

/// The full generating function as a series with polynomial coefficients.
pub fn mixed_generating_series(r: usize, k: i64, order: usize) -> PolySeries {
    PolySeries::from_exp(
        &TruncatedSeries::log1p(order),
        &mixed_prefactor(r, k, order),
    )
    .expect("log(1+t) has no constant term")
}

type RowCache = RwLock<HashMap<(usize, i64), Arc<Vec<Polynomial>>>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Ã_0^{(r,k)}(x), ..., Ã_{n_max}^{(r,k)}(x)`, possibly with extra entries
/// beyond `n_max`.
///
/// Rows are memoized per `(r, k)`; a longer row serves every shorter request
/// because truncating a series commutes with every operation used here.
pub fn mixed_oracle_row(n_max: usize, r: usize, k: i64) -> Arc<Vec<Polynomial>> {
    if let Some(row) = row_cache().read().unwrap().get(&(r, k)) {
        if row.len() > n_max {
            return Arc::clone(row);
        }
    }
    let row = Arc::new(mixed_generating_series(r, k, n_max).egf_polys());
    let mut cache = row_cache().write().unwrap();
    let entry = cache.entry((r, k)).or_insert_with(|| Arc::clone(&row));
    if entry.len() < row.len() {
        *entry = Arc::clone(&row);
    }
    row
}

/// `Ã_n^{(r,k)}(x)`.
pub fn mixed_oracle(n: usize, r: usize, k: i64) -> Polynomial {
    mixed_oracle_row(n, r, k)[n].clone()
}

/// `Ã_n^{(r,k)}(x0)`.
pub fn mixed_value(n: usize, r: usize, k: i64, x0: &Rational) -> Rational {
    mixed_oracle_row(n, r, k)[n].eval(x0)
}

/// The numbers `Ã_0^{(r,k)}, ..., Ã_{n_max}^{(r,k)}`.
pub fn mixed_numbers(n_max: usize, r: usize, k: i64) -> Vec<Rational> {
    mixed_oracle_row(n_max, r, k)[..=n_max]
        .iter()
        .map(|p| p.coeff(0))
        .collect()
}

/// Values `Ã_0^{(r,k)}(x0), ..., Ã_{n_max}^{(r,k)}(x0)`.
pub fn mixed_values(n_max: usize, r: usize, k: i64, x0: &Rational) -> Vec<Rational> {
    mixed_oracle_row(n_max, r, k)[..=n_max]
        .iter()
        .map(|p| p.eval(x0))
        .collect()
}

/// `(t e^t / (e^t - 1))^r / Lif_k(-t)`.
pub fn mixed_pair_g(r: usize, k: i64, order: usize) -> TruncatedSeries {
    let n = order + 1;
    let em1 = &TruncatedSeries::exp(n) - &TruncatedSeries::one(n);
    let t_exp = &TruncatedSeries::t(n) * &TruncatedSeries::exp(n);
    let base = t_exp.div_cancel(&em1).expect("e^t - 1 has valuation 1");
    let lif_neg = sequences::lif_series(k, order).dilate(&-crate::series_core::rational::one());
    base.pow(r as i64)
        .and_then(|p| p.div(&lif_neg))
        .expect("Lif_k(-t) has constant term 1")
}

/// The Sheffer pair `((t e^t/(e^t-1))^r / Lif_k(-t), e^t - 1)`, truncated
/// at `order` (at least 1).
pub fn mixed_pair(r: usize, k: i64, order: usize) -> ShefferPair {
    let order = order.max(1);
    let f = &TruncatedSeries::exp(order) - &TruncatedSeries::one(order);
    ShefferPair::new(mixed_pair_g(r, k, order), f).expect("valid Sheffer pair")
}
