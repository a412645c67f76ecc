//! Explicit expansions of `Ã_n^{(r,k)}(x)`: a closed triple sum, expansions
//! through auxiliary number families, and expansions in the Bernoulli,
//! Frobenius-Euler and falling-factorial bases.
//!
//! Each function assembles its polynomial from the named ingredients only.
//! Agreement with [`super::mixed_oracle`] is checked in tests and by the
//! verification harness, never assumed.

use num_traits::Zero;

use super::{mixed_numbers, mixed_values};
use crate::error::{Error, Result};
use crate::sequences::{self, binomial, s1, s2, Lambda};
use crate::series_core::rational::{self, Rational};
use crate::series_core::Polynomial;

fn bin(a: usize, b: usize) -> Rational {
    binomial(a, b as i64)
}

/// Triple sum in Stirling numbers of both kinds:
///
/// ```text
/// sum_j { sum_{m=j}^{n} sum_{l=0}^{m-j} (-1)^m C(m,l) C(m-l,j)
///         / (C(m-l-j+r, r) (l+1)^k) S1(n,m) S2(m-l-j+r, r) } (-x)^j
/// ```
pub fn closed_form_triple_sum(n: usize, r: usize, k: i64) -> Polynomial {
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = Rational::zero();
            for m in j..=n {
                let s1_nm = s1(n, m);
                if s1_nm.is_zero() {
                    continue;
                }
                for l in 0..=m - j {
                    let a = m - l - j;
                    let weight =
                        rational::pow_int(&rational::int(l as i64 + 1), -k).expect("l + 1 > 0");
                    c += rational::sign(m as i64) * bin(m, l) * bin(m - l, j) / bin(a + r, r)
                        * weight
                        * &s1_nm
                        * s2(a + r, r);
                }
            }
            // (-x)^j
            c * rational::sign(j as i64)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `sum_j { sum_{l=0}^{n-j} C(n,l) S1(n-l, j) Ã_l^{(r,k)} } x^j`, built
/// from the numbers `Ã_l^{(r,k)}`.
pub fn number_expansion(n: usize, r: usize, k: i64) -> Polynomial {
    let numbers = mixed_numbers(n, r, k);
    let coeffs = (0..=n)
        .map(|j| {
            (0..=n - j)
                .map(|l| bin(n, l) * s1(n - l, j) * &numbers[l])
                .sum()
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Shared shape of the two Bernoulli-based expansions:
/// `sum_j { sum_l sum_a C(n,l+j) C(n-j-l,a) S1(l+j,j) weights[a] C~_{n-j-l-a}^{(k)} } x^j`.
fn cauchy_weighted_expansion(n: usize, k: i64, weights: &[Rational]) -> Polynomial {
    let poly_cauchy = sequences::poly_cauchy2_numbers(n, k);
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = Rational::zero();
            for l in 0..=n - j {
                let outer = bin(n, l + j) * s1(l + j, j);
                for a in 0..=n - j - l {
                    c += &outer * bin(n - j - l, a) * &weights[a] * &poly_cauchy[n - j - l - a];
                }
            }
            c
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Expansion through `B_a^{(a-r+1)}(1-r)` and the poly-Cauchy numbers of
/// the second kind.
pub fn shifted_bernoulli_expansion(n: usize, r: usize, k: i64) -> Polynomial {
    let x0 = rational::int(1 - r as i64);
    let weights: Vec<Rational> = (0..=n)
        .map(|a| sequences::bernoulli_value(a, a as i64 - r as i64 + 1, &x0))
        .collect();
    cauchy_weighted_expansion(n, k, &weights)
}

/// Calls `visit` on every weak composition of `total` into `parts` parts,
/// in lexicographic order.
pub fn for_each_weak_composition(total: usize, parts: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(rest: usize, slots: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if slots == 1 {
            acc.push(rest);
            visit(acc);
            acc.pop();
            return;
        }
        for first in 0..=rest {
            acc.push(first);
            rec(rest - first, slots - 1, acc, visit);
            acc.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut visit);
}

/// Expansion through multinomially weighted products of `B_{a_i}^{(a_i)}`
/// over weak compositions `a_1 + ... + a_r = a`. Needs `r >= 1`.
pub fn bernoulli_products_expansion(n: usize, r: usize, k: i64) -> Result<Polynomial> {
    if r == 0 {
        return Err(Error::RequiresPositiveR);
    }
    let zero = Rational::zero();
    let diagonal: Vec<Rational> = (0..=n)
        .map(|a| sequences::bernoulli_value(a, a as i64, &zero))
        .collect();
    let weights: Vec<Rational> = (0..=n)
        .map(|a| {
            let mut total = Rational::zero();
            for_each_weak_composition(a, r, |parts| {
                let product: Rational = parts.iter().map(|&p| diagonal[p].clone()).product();
                total += sequences::multinomial(a, parts).expect("parts sum to a") * product;
            });
            total
        })
        .collect();
    Ok(cauchy_weighted_expansion(n, k, &weights))
}

/// Expansion in the Bernoulli polynomials `B_m^{(s)}(x)` with coefficients
/// `sum_{l=0}^{n-m} C(n,l) S1(n-l,m) Ã_l^{(r+s,k)}(s)`. Needs `r, s >= 1`.
pub fn bernoulli_basis_expansion(n: usize, r: usize, k: i64, s: usize) -> Result<Polynomial> {
    if r == 0 || s == 0 {
        return Err(Error::ParamDomain(format!(
            "need r, s >= 1, got r = {r}, s = {s}"
        )));
    }
    let at_s = mixed_values(n, r + s, k, &rational::int(s as i64));
    let basis = sequences::bernoulli_polys(n, s as i64);
    Ok((0..=n)
        .map(|m| {
            let c: Rational = (0..=n - m)
                .map(|l| bin(n, l) * s1(n - l, m) * &at_s[l])
                .sum();
            basis[m].scale(&c)
        })
        .sum())
}

/// Expansion in the Frobenius-Euler polynomials `H_m^{(s)}(x|lambda)` with
/// coefficients
/// `sum_{l=0}^{n-m} sum_{a=0}^{l} C(n,l) C(s,a) C(l,a) a! / (1-lambda)^a S1(n-l,m) Ã_{l-a}^{(r,k)}`.
/// Needs `r, s >= 1` and `lambda != 1`.
pub fn frobenius_euler_basis_expansion(
    n: usize,
    r: usize,
    k: i64,
    s: usize,
    lambda: &Rational,
) -> Result<Polynomial> {
    let lambda = Lambda::new(lambda.clone())?;
    if r == 0 || s == 0 {
        return Err(Error::ParamDomain(format!(
            "need r, s >= 1, got r = {r}, s = {s}"
        )));
    }
    let numbers = mixed_numbers(n, r, k);
    let inv = (rational::one() - lambda.value()).recip();
    // inner[l] = sum_a C(s,a) C(l,a) a! (1-lambda)^{-a} Ã_{l-a}
    let inner: Vec<Rational> = (0..=n)
        .map(|l| {
            let mut pw = rational::one();
            let mut acc = Rational::zero();
            for a in 0..=l {
                acc += bin(s, a) * bin(l, a) * rational::factorial(a) * &pw * &numbers[l - a];
                pw *= &inv;
            }
            acc
        })
        .collect();
    let basis = sequences::frobenius_euler_polys(n, s, &lambda);
    Ok((0..=n)
        .map(|m| {
            let c: Rational = (0..=n - m)
                .map(|l| bin(n, l) * s1(n - l, m) * &inner[l])
                .sum();
            basis[m].scale(&c)
        })
        .sum())
}

/// `sum_m C(n,m) Ã_{n-m}^{(r,k)} (x)_m`.
pub fn falling_factorial_expansion(n: usize, r: usize, k: i64) -> Polynomial {
    let numbers = mixed_numbers(n, r, k);
    (0..=n)
        .map(|m| sequences::falling_factorial(m).scale(&(bin(n, m) * &numbers[n - m])))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed_poly::mixed_oracle;
    use crate::series_core::rational::{int, ratio};

    const KS: [i64; 4] = [-1, 0, 1, 2];

    #[test]
    fn degenerate_index_zero() {
        for r in 0..=3 {
            for k in KS {
                assert_eq!(closed_form_triple_sum(0, r, k), Polynomial::one());
                assert_eq!(number_expansion(0, r, k), Polynomial::one());
                assert_eq!(shifted_bernoulli_expansion(0, r, k), Polynomial::one());
                assert_eq!(falling_factorial_expansion(0, r, k), Polynomial::one());
                if r > 0 {
                    assert_eq!(
                        bernoulli_products_expansion(0, r, k).unwrap(),
                        Polynomial::one()
                    );
                    assert_eq!(
                        bernoulli_basis_expansion(0, r, k, 2).unwrap(),
                        Polynomial::one()
                    );
                    assert_eq!(
                        frobenius_euler_basis_expansion(0, r, k, 1, &int(-1)).unwrap(),
                        Polynomial::one()
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle() {
        // n = 1, r = 1, k = 1: x - 1
        assert_eq!(
            closed_form_triple_sum(1, 1, 1),
            Polynomial::new(vec![int(-1), int(1)])
        );
        for n in 0..=8 {
            for r in 0..=3 {
                for k in KS {
                    assert_eq!(
                        closed_form_triple_sum(n, r, k),
                        mixed_oracle(n, r, k),
                        "n={n} r={r} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn number_and_bernoulli_expansions_match_oracle() {
        for n in 0..=8 {
            for r in 0..=3 {
                for k in KS {
                    let oracle = mixed_oracle(n, r, k);
                    assert_eq!(number_expansion(n, r, k), oracle);
                    assert_eq!(shifted_bernoulli_expansion(n, r, k), oracle);
                    assert_eq!(falling_factorial_expansion(n, r, k), oracle);
                    if r > 0 && n <= 6 {
                        assert_eq!(bernoulli_products_expansion(n, r, k).unwrap(), oracle);
                    }
                }
            }
        }
    }

    #[test]
    fn falling_expansion_first_index() {
        // Ã_1 + x
        let a1 = mixed_numbers(1, 2, 1)[1].clone();
        assert_eq!(
            falling_factorial_expansion(1, 2, 1),
            Polynomial::new(vec![a1, int(1)])
        );
    }

    #[test]
    fn products_require_positive_r() {
        assert_eq!(
            bernoulli_products_expansion(3, 0, 1),
            Err(Error::RequiresPositiveR)
        );
    }

    #[test]
    fn compositions_enumerated_lexicographically() {
        let mut seen = Vec::new();
        for_each_weak_composition(2, 2, |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let mut count = 0;
        for_each_weak_composition(4, 3, |_| count += 1);
        assert_eq!(count, 15);
        let mut empty = 0;
        for_each_weak_composition(0, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn basis_expansions_match_oracle() {
        for n in 0..=7 {
            for r in 1..=2 {
                for k in KS {
                    let oracle = mixed_oracle(n, r, k);
                    for s in 1..=3 {
                        assert_eq!(bernoulli_basis_expansion(n, r, k, s).unwrap(), oracle);
                    }
                    for lam in [int(-1), int(2), ratio(1, 2)] {
                        assert_eq!(
                            frobenius_euler_basis_expansion(n, r, k, 2, &lam).unwrap(),
                            oracle
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_expansion_domains() {
        assert!(matches!(
            bernoulli_basis_expansion(3, 0, 1, 1),
            Err(Error::ParamDomain(_))
        ));
        assert!(matches!(
            bernoulli_basis_expansion(3, 1, 1, 0),
            Err(Error::ParamDomain(_))
        ));
        assert_eq!(
            frobenius_euler_basis_expansion(3, 1, 1, 1, &int(1)),
            Err(Error::LambdaUnit)
        );
        assert!(matches!(
            frobenius_euler_basis_expansion(3, 0, 1, 1, &int(2)),
            Err(Error::ParamDomain(_))
        ));
    }
}
