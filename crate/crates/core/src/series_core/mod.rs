//! Exact arithmetic substrate: rationals, truncated power series,
//! polynomials, and polynomial-coefficient series.

pub mod poly;
pub mod polyseries;
pub mod rational;
pub mod series;

pub use poly::Polynomial;
pub use polyseries::PolySeries;
pub use rational::Rational;
pub use series::TruncatedSeries;
