//! Standard Poincaré polynomials.
//!
//! Unordered: `rk H^i(C_n(C \ k)) = P(k-1, i) + P(k-1, i-1)` for `i < n`,
//! `P(k-1, n)` for `i = n`, zero above, with generating series
//! `Q_k = (1 + x y^2) / ((1 - y)(1 - x y)^k)` and `Q_{k+1} = Q_k / (1 - x y)`.
//! Ordered: `P(F_n(C \ k)) = (1 + k x)(1 + (k+1) x) ... (1 + (n+k-1) x)`.
//!
//! Ranks are free ranks; no torsion information is computed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::PyramidalTable;
use crate::ring::{one_minus, LaurentPoly, TruncSeries};
use crate::Space;

/// `rk H^i(C_n(C \ k))` for `i = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiRow {
    pub k: u32,
    pub n: usize,
    pub ranks: Vec<BigInt>,
}

impl BettiRow {
    /// `sum_i ranks[i] x^i`.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.ranks.iter().cloned())
    }
}

/// Betti numbers of `C_n(C \ k)` from the pyramidal closed form.
pub fn betti_unordered(k: u32, n: usize) -> BettiRow {
    let table = PyramidalTable::new(k as i64 - 1, n).expect("k - 1 >= -1");
    let p = |i: usize| table.get(k as i64 - 1, i as i64);
    let ranks = (0..=n)
        .map(|i| if i == n { p(i) } else { p(i) + table.get(k as i64 - 1, i as i64 - 1) })
        .collect();
    BettiRow { k, n, ranks }
}

/// `Q_k` expanded to order `order`; the `y^n` coefficient is `P(C_n(C \ k))`.
pub fn unordered_series(k: u32, order: usize) -> TruncSeries {
    let numerator = TruncSeries::from_monomials(order, &[(0, 0, 1), (2, 1, 1)]);
    let denominator = one_minus(1, 0, 1, order)
        .mul(&one_minus(1, 1, 1, order).pow(k))
        .expect("same order");
    numerator.div(&denominator).expect("denominator has constant term 1")
}

/// `Q_0` written out from the braid-group cohomology: `H^0 = Z` for every
/// `n`, `H^1 = Z` for `n >= 2`, nothing higher.
pub fn arnold_base_series(order: usize) -> TruncSeries {
    let coeffs = (0..=order).map(|n| {
        if n >= 2 {
            LaurentPoly::from_coeffs([1, 1])
        } else {
            LaurentPoly::one()
        }
    });
    TruncSeries::new(order, coeffs)
}

/// Adds one puncture: `Q -> Q / (1 - x y)`, same order.
pub fn napolitano_step(q: &TruncSeries) -> TruncSeries {
    let step = one_minus(1, 1, 1, q.order()).inv().expect("unit constant term");
    q.mul(&step).expect("same order")
}

/// `Q_k` obtained by `k` applications of [`napolitano_step`] to
/// [`arnold_base_series`].
pub fn iterated_series(k: u32, order: usize) -> TruncSeries {
    (0..k).fold(arnold_base_series(order), |q, _| napolitano_step(&q))
}

/// Stable Betti number `rk H^j(C_n(C \ k))` for `n > j`:
/// `P(k-1, j) + P(k-1, j-1)`.
pub fn stable_betti(k: u32, j: usize) -> BigInt {
    let table = PyramidalTable::new(k as i64 - 1, j).expect("k - 1 >= -1");
    table.get(k as i64 - 1, j as i64) + table.get(k as i64 - 1, j as i64 - 1)
}

/// Coefficients `0..=max_j` of the stable Poincaré series `(1 + x) / (1 - x)^k`.
pub fn stable_series(k: u32, max_j: usize) -> Vec<BigInt> {
    // The variable of the truncated series plays the role of x here.
    let numerator = TruncSeries::from_monomials(max_j, &[(0, 0, 1), (1, 0, 1)]);
    let series = numerator
        .div(&one_minus(1, 0, 1, max_j).pow(k))
        .expect("unit constant term");
    series.coeffs().iter().map(|c| c.coeff(0)).collect()
}

/// `P(F_n(C \ k)) = prod_{j=0}^{n-1} (1 + (k + j) x)`.
pub fn poincare_ordered(k: u32, n: usize) -> LaurentPoly {
    (0..n as u64).fold(LaurentPoly::one(), |acc, j| {
        let factor = LaurentPoly::from_coeffs([BigInt::one(), BigInt::from(k as u64 + j)]);
        &acc * &factor
    })
}

/// `sum_n P(F_n(C \ k)) y^n` truncated at `order`.
pub fn ordered_series(k: u32, order: usize) -> TruncSeries {
    TruncSeries::new(order, (0..=order).map(|n| poincare_ordered(k, n)))
}

/// `P(F_n(C \ k))` or `P(C_n(C \ k))`.
pub fn standard_poly(space: Space, k: u32, n: usize) -> LaurentPoly {
    match space {
        Space::Ordered => poincare_ordered(k, n),
        Space::Unordered => betti_unordered(k, n).to_poly(),
    }
}

/// True if every coefficient is nonnegative.
pub fn is_nonnegative(p: &LaurentPoly) -> bool {
    p.terms().all(|(_, c)| c >= &BigInt::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_unordered(2, 3).ranks, ranks(&[1, 3, 5, 4]));
        assert_eq!(betti_unordered(2, 3).to_poly().to_string(), "4x^3+5x^2+3x+1");
        assert_eq!(betti_unordered(0, 3).ranks, ranks(&[1, 1, 0, 0]));
        assert_eq!(betti_unordered(1, 1).ranks, ranks(&[1, 1]));
        assert_eq!(betti_unordered(4, 0).ranks, ranks(&[1]));
        // C_1(C \ k) = C \ k
        assert_eq!(betti_unordered(7, 1).ranks, ranks(&[1, 7]));
    }

    #[test]
    fn series_examples() {
        let q0 = unordered_series(0, 3);
        let expected: Vec<LaurentPoly> = ["1", "1", "x+1", "x+1"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(q0.coeffs(), &expected[..]);
        assert_eq!(unordered_series(2, 3).coeff(3), &"4x^3+5x^2+3x+1".parse().unwrap());
        assert_eq!(unordered_series(5, 0), TruncSeries::one(0));
        assert_eq!(arnold_base_series(3), q0);
    }

    #[test]
    fn napolitano_examples() {
        assert_eq!(napolitano_step(&unordered_series(0, 8)), unordered_series(1, 8));
        let three = (0..3).fold(unordered_series(0, 8), |q, _| napolitano_step(&q));
        assert_eq!(three, unordered_series(3, 8));
        let g = napolitano_step(&TruncSeries::one(2));
        assert_eq!(g, TruncSeries::from_monomials(2, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]));
    }

    #[test]
    fn stable_examples() {
        assert_eq!(stable_betti(2, 2), BigInt::from(5));
        for n in 3..=8 {
            assert_eq!(betti_unordered(2, n).ranks[2], BigInt::from(5));
        }
        assert_eq!(stable_betti(0, 0), BigInt::from(1));
        assert_eq!(stable_series(3, 1)[1], BigInt::from(4));
        assert_eq!(stable_betti(3, 1), BigInt::from(4));
    }

    #[test]
    fn ordered_examples() {
        assert_eq!(poincare_ordered(2, 3).to_string(), "24x^3+26x^2+9x+1");
        assert_eq!(poincare_ordered(0, 2).to_string(), "x+1");
        assert_eq!(poincare_ordered(3, 0), LaurentPoly::one());
    }
}
