//! The substitution `x -> -1/x^2, y -> y x^2` relating standard and virtual
//! Poincaré series.
//!
//! Applied per coefficient: the `y^n` coefficient `p` of a standard series
//! becomes `x^{2n} p(-x^{-2})`. Under it `sum P(C_n) y^n` maps to
//! `sum S(C_n) y^n` and `sum P(F_n) y^n` maps to `sum S(F_n) y^n`.

use num_bigint::BigInt;

use crate::poincare::standard_poly;
use crate::ring::{LaurentPoly, TruncSeries};
use crate::virtual_poincare::virtual_poly;
use crate::{Error, Result, Space};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    /// Transformed standard polynomial.
    pub lhs: LaurentPoly,
    /// Virtual polynomial.
    pub rhs: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub k: u32,
    pub max_n: usize,
    pub space: Space,
    pub matches: Vec<bool>,
    pub first_mismatch: Option<Mismatch>,
}

impl DualityReport {
    pub fn all_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Transforms every coefficient of `s`; each `y^n` coefficient must be a
/// polynomial of degree at most `n`.
pub fn dualize_series(s: &TruncSeries) -> Result<TruncSeries> {
    for (n, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let low = c.min_exponent()?;
        if low < 0 {
            return Err(Error::NegativeExponent(low));
        }
        let degree = c.degree()?;
        if degree > n as i64 {
            return Err(Error::DegreeTooHigh { n, degree });
        }
    }
    Ok(s.map_coeffs(|n, c| c.substitute_duality(n)))
}

/// Inverse of [`dualize_series`].
pub fn undualize_series(s: &TruncSeries) -> Result<TruncSeries> {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.invert_duality(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(s.order(), coeffs))
}

/// Compares the transformed standard polynomials with the virtual ones for
/// `n = 0..=max_n`.
pub fn check_duality(k: u32, max_n: usize, space: Space) -> DualityReport {
    check_duality_with(k, max_n, space, |n| standard_poly(space, k, n), |n| virtual_poly(space, k, n).poly)
}

/// [`check_duality`] over caller-supplied polynomial sources.
pub fn check_duality_with(
    k: u32,
    max_n: usize,
    space: Space,
    standard: impl Fn(usize) -> LaurentPoly,
    virtual_: impl Fn(usize) -> LaurentPoly,
) -> DualityReport {
    let mut matches = Vec::with_capacity(max_n + 1);
    let mut first_mismatch = None;
    for n in 0..=max_n {
        let lhs = standard(n).substitute_duality(n);
        let rhs = virtual_(n);
        let ok = lhs == rhs;
        if !ok && first_mismatch.is_none() {
            first_mismatch = Some(Mismatch { n, lhs, rhs });
        }
        matches.push(ok);
    }
    DualityReport { k, max_n, space, matches, first_mismatch }
}

/// `(P_n(-1), S_n(1))` for `n = 0..=max_n`.
pub fn euler_characteristics(k: u32, max_n: usize, space: Space) -> Vec<(BigInt, BigInt)> {
    (0..=max_n)
        .map(|n| euler_pair(&standard_poly(space, k, n), &virtual_poly(space, k, n).poly))
        .collect()
}

/// `(standard(-1), virtual(1))`.
pub fn euler_pair(standard: &LaurentPoly, virtual_: &LaurentPoly) -> (BigInt, BigInt) {
    let lhs = standard.eval_int(&BigInt::from(-1)).expect("polynomial");
    let rhs = virtual_.eval_int(&BigInt::from(1)).expect("polynomial");
    (lhs, rhs)
}

/// Entry `n` is true iff `P_n(-1) = S_n(1)`.
pub fn euler_consistency(k: u32, max_n: usize, space: Space) -> Vec<bool> {
    euler_characteristics(k, max_n, space).into_iter().map(|(a, b)| a == b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::{ordered_series, unordered_series};
    use crate::virtual_poincare::virtual_ordered;

    #[test]
    fn dualize_examples() {
        let d = dualize_series(&unordered_series(2, 3)).unwrap();
        assert_eq!(d.coeff(3).to_string(), "x^6-3x^4+5x^2-4");
        assert_eq!(dualize_series(&TruncSeries::one(4)).unwrap(), TruncSeries::one(4));
        let d = dualize_series(&ordered_series(2, 3)).unwrap();
        assert_eq!(d.coeff(3).to_string(), "x^6-9x^4+26x^2-24");
        assert_eq!(d.coeff(3), &virtual_ordered(2, 3).poly);
    }

    #[test]
    fn dualize_rejects_high_degree() {
        let s = TruncSeries::from_monomials(2, &[(0, 0, 1), (1, 2, 1)]);
        assert_eq!(dualize_series(&s), Err(Error::DegreeTooHigh { n: 1, degree: 2 }));
        let s = TruncSeries::from_monomials(2, &[(1, -1, 1)]);
        assert_eq!(dualize_series(&s), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn undualize_recovers_standard_series() {
        let s = unordered_series(3, 6);
        assert_eq!(undualize_series(&dualize_series(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn check_duality_examples() {
        assert!(check_duality(2, 8, Space::Unordered).matches.iter().all(|&m| m));
        assert!(check_duality(0, 8, Space::Ordered).matches.iter().all(|&m| m));
        for space in Space::BOTH {
            assert_eq!(check_duality(3, 0, space).matches, vec![true]);
        }
    }

    #[test]
    fn check_duality_reports_mismatch() {
        let report = check_duality_with(
            2,
            4,
            Space::Ordered,
            |n| standard_poly(Space::Ordered, 2, n),
            |n| {
                let p = virtual_ordered(2, n).poly;
                if n == 3 {
                    "x^4-9x^4+26x^2-24".parse().unwrap()
                } else {
                    p
                }
            },
        );
        assert_eq!(report.matches, vec![true, true, true, false, true]);
        let m = report.first_mismatch.unwrap();
        assert_eq!(m.n, 3);
        assert_eq!(m.lhs.to_string(), "x^6-9x^4+26x^2-24");
    }

    #[test]
    fn euler_examples() {
        let u = euler_characteristics(2, 3, Space::Unordered);
        assert_eq!(u[3], (BigInt::from(-1), BigInt::from(-1)));
        let o = euler_characteristics(2, 3, Space::Ordered);
        assert_eq!(o[3], (BigInt::from(-6), BigInt::from(-6)));
        assert_eq!(euler_characteristics(0, 0, Space::Unordered), vec![(BigInt::from(1), BigInt::from(1))]);
        assert!(euler_consistency(2, 3, Space::Ordered).iter().all(|&b| b));
    }
}
