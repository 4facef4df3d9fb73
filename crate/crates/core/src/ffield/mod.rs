//! Brute-force point counts over prime fields.
//!
//! For the varieties here, the virtual Poincaré polynomial evaluated at
//! `x^2 = q` is the number of points over the field with `q` elements. This
//! module counts those points by exhaustive enumeration and never consults a
//! counting formula.
//!
//! * Ordered: `n`-tuples of pairwise-distinct field elements avoiding the
//!   punctures `{0, ..., k-1}`.
//! * Unordered: a point of `C_n(A^1 \ k)` over `F_q` is a Galois-stable
//!   `n`-element subset of the algebraic closure, not just a set of rational
//!   points. Those correspond to monic squarefree degree-`n` polynomials with
//!   no root at a puncture, i.e. coprime to `prod_{a<k} (t - a)`.

mod poly;

pub use poly::{monic_from_index, FieldPoly, PrimeField, MAX_MODULUS};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::ring::LaurentPoly;
use crate::virtual_poincare::virtual_poly;
use crate::{Error, Result, Space};

/// Upper bound on `q^n` for a single enumeration.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

/// `q^n`, or `TooLarge` if it exceeds [`ENUMERATION_BUDGET`].
pub fn enumeration_size(q: u32, n: u32) -> Result<u64> {
    let too_large = Error::TooLarge { q, n, budget: ENUMERATION_BUDGET };
    let size = (q as u64).checked_pow(n).ok_or_else(|| too_large.clone())?;
    if size > ENUMERATION_BUDGET {
        return Err(too_large);
    }
    Ok(size)
}

fn setup(q: u32, k: u32) -> Result<PrimeField> {
    let field = PrimeField::new(q)?;
    if k >= q {
        return Err(Error::TooManyPunctures { q, k });
    }
    Ok(field)
}

/// Number of `n`-tuples of distinct elements of `F_q` avoiding `{0..k-1}`.
pub fn count_ordered_configs(q: u32, k: u32, n: u32) -> Result<BigInt> {
    setup(q, k)?;
    let total = enumeration_size(q, n)?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let block = total / q as u64;
    // One block per value of the first coordinate.
    let count: u64 = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut tuple = vec![0u32; n as usize];
            (0..block)
                .filter(|&rest| {
                    tuple[0] = first;
                    let mut r = rest;
                    for slot in tuple[1..].iter_mut() {
                        *slot = (r % q as u64) as u32;
                        r /= q as u64;
                    }
                    is_valid_tuple(&tuple, k)
                })
                .count() as u64
        })
        .sum();
    Ok(BigInt::from(count))
}

fn is_valid_tuple(tuple: &[u32], k: u32) -> bool {
    tuple.iter().enumerate().all(|(i, &a)| a >= k && !tuple[..i].contains(&a))
}

/// `prod_{a=0}^{k-1} (t - a)`.
pub fn puncture_divisor(field: &PrimeField, k: u32) -> FieldPoly {
    (0..k).fold(FieldPoly::one(), |acc, a| acc.mul(field, &FieldPoly::linear(field, a)))
}

/// `gcd(f, f')` is constant.
pub fn is_squarefree_gcd(field: &PrimeField, f: &FieldPoly) -> bool {
    f.gcd(field, &f.derivative(field)).degree() == Some(0)
}

/// No monic `g` with `1 <= deg g <= deg f / 2` has `g^2 | f`.
pub fn is_squarefree_trial(field: &PrimeField, f: &FieldPoly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    is_squarefree_trial_with(field, f, &monic_squares(field, n / 2))
}

fn is_squarefree_trial_with(field: &PrimeField, f: &FieldPoly, squares: &[FieldPoly]) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    squares.iter().take_while(|s| s.degree().unwrap_or(0) <= n).all(|s| !s.divides(field, f))
}

/// `g^2` for every monic `g` of degree `1..=max_degree`, by increasing degree.
fn monic_squares(field: &PrimeField, max_degree: usize) -> Vec<FieldPoly> {
    let q = field.modulus() as u64;
    (1..=max_degree)
        .flat_map(|d| (0..q.pow(d as u32)).map(move |index| (d, index)))
        .map(|(d, index)| {
            let g = monic_from_index(field, d, index);
            g.mul(field, &g)
        })
        .collect()
}

/// Which squarefreeness test the unordered enumeration uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquarefreeTest {
    /// `gcd(f, f') = 1`.
    Gcd,
    /// Trial division by squares of monic polynomials.
    TrialDivision,
}

/// Number of monic squarefree degree-`n` polynomials over `F_q` coprime to
/// the puncture divisor, using the gcd test.
pub fn count_squarefree_coprime(q: u32, k: u32, n: u32) -> Result<BigInt> {
    count_squarefree_coprime_by(q, k, n, SquarefreeTest::Gcd)
}

pub fn count_squarefree_coprime_by(q: u32, k: u32, n: u32, test: SquarefreeTest) -> Result<BigInt> {
    let field = setup(q, k)?;
    let total = enumeration_size(q, n)?;
    let punctures = puncture_divisor(&field, k);
    let squares = match test {
        SquarefreeTest::Gcd => Vec::new(),
        SquarefreeTest::TrialDivision => monic_squares(&field, n as usize / 2),
    };
    let count = (0..total)
        .into_par_iter()
        .filter(|&index| {
            let f = monic_from_index(&field, n as usize, index);
            let squarefree = match test {
                SquarefreeTest::Gcd => is_squarefree_gcd(&field, &f),
                SquarefreeTest::TrialDivision => is_squarefree_trial_with(&field, &f, &squares),
            };
            squarefree && f.gcd(&field, &punctures).degree() == Some(0)
        })
        .count();
    Ok(BigInt::from(count))
}

/// Enumeration count against the virtual polynomial at `x^2 = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub q: u32,
    pub k: u32,
    pub n: u32,
    pub space: Space,
    pub oracle_count: BigInt,
    pub formula_value: BigInt,
    pub agree: bool,
}

/// Reports for `n = 0..=max_n` and both spaces, against the virtual
/// polynomials of [`crate::virtual_poincare`].
pub fn oracle_check(q: u32, k: u32, max_n: u32) -> Result<Vec<OracleReport>> {
    oracle_check_with(q, k, max_n, |space, n| virtual_poly(space, k, n as usize).poly)
}

/// [`oracle_check`] against caller-supplied virtual polynomials.
pub fn oracle_check_with(
    q: u32,
    k: u32,
    max_n: u32,
    formula: impl Fn(Space, u32) -> LaurentPoly,
) -> Result<Vec<OracleReport>> {
    setup(q, k)?;
    enumeration_size(q, max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for space in Space::BOTH {
            let oracle_count = match space {
                Space::Ordered => count_ordered_configs(q, k, n)?,
                Space::Unordered => count_squarefree_coprime(q, k, n)?,
            };
            // Odd exponents cannot come from a correct formula; treat them as disagreement.
            let formula_value = formula(space, n)
                .eval_at_x_squared(&BigInt::from(q))
                .unwrap_or_else(|_| BigInt::from(-1) - &oracle_count);
            let agree = oracle_count == formula_value;
            out.push(OracleReport { q, k, n, space, oracle_count, formula_value, agree });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ordered_counts() {
        assert_eq!(count_ordered_configs(5, 2, 3).unwrap(), big(6));
        assert_eq!(count_ordered_configs(7, 0, 0).unwrap(), big(1));
        assert_eq!(count_ordered_configs(7, 1, 3).unwrap(), big(120));
        assert_eq!(count_ordered_configs(3, 1, 3).unwrap(), big(0));
    }

    #[test]
    fn squarefree_counts() {
        assert_eq!(count_squarefree_coprime(3, 0, 2).unwrap(), big(6));
        assert_eq!(count_squarefree_coprime(5, 2, 3).unwrap(), big(71));
        assert_eq!(count_squarefree_coprime(2, 0, 0).unwrap(), big(1));
    }

    #[test]
    fn two_squarefree_tests_agree() {
        for q in [2, 3, 5] {
            let field = PrimeField::new(q).unwrap();
            for n in 0..=4usize {
                for index in 0..(q as u64).pow(n as u32) {
                    let f = monic_from_index(&field, n, index);
                    assert_eq!(is_squarefree_gcd(&field, &f), is_squarefree_trial(&field, &f), "{f:?} over F_{q}");
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert_eq!(oracle_check(3, 3, 1), Err(Error::TooManyPunctures { q: 3, k: 3 }));
        assert_eq!(count_ordered_configs(4, 0, 1), Err(Error::NotPrime(4)));
        assert_eq!(
            count_ordered_configs(97, 0, 5),
            Err(Error::TooLarge { q: 97, n: 5, budget: ENUMERATION_BUDGET })
        );
        assert!(enumeration_size(2, 200).is_err());
        assert!(matches!(oracle_check(97, 0, 5), Err(Error::TooLarge { .. })));
        assert_eq!(enumeration_size(10, 8).unwrap(), 100_000_000);
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_check(5, 2, 3).unwrap().iter().all(|r| r.agree));
        let reports = oracle_check(2, 1, 3).unwrap();
        assert!(reports.iter().all(|r| r.agree));
        for r in reports.iter().filter(|r| r.space == Space::Ordered && r.n > 1) {
            assert_eq!(r.oracle_count, big(0));
        }
    }

    #[test]
    fn oracle_detects_wrong_formula() {
        let reports = oracle_check_with(5, 2, 3, |space, n| {
            let p = virtual_poly(space, 2, n as usize).poly;
            if space == Space::Unordered && n == 3 {
                &p + &LaurentPoly::one()
            } else {
                p
            }
        })
        .unwrap();
        let bad: Vec<_> = reports.iter().filter(|r| !r.agree).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!((bad[0].n, bad[0].space), (3, Space::Unordered));
    }
}
