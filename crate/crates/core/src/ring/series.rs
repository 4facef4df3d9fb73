use std::fmt;

use num_bigint::BigInt;

use super::LaurentPoly;
use crate::{Error, Result};

/// Power series in `y` truncated modulo `y^{order+1}`, with Laurent
/// polynomial coefficients in `x`.
///
/// Binary operations require equal orders; nothing is silently re-truncated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncSeries {
    /// Series with the given leading coefficients, zero-padded or truncated
    /// to `order + 1` entries.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = LaurentPoly>) -> Self {
        let mut coeffs: Vec<_> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, LaurentPoly::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        Self::new(order, [c])
    }

    /// `c * y^j` (zero if `j > order`).
    pub fn monomial(c: LaurentPoly, j: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if j <= order {
            s.coeffs[j] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `y^n`; panics when `n > order`.
    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    /// Applies `f(n, c_n)` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &LaurentPoly) -> LaurentPoly) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect() }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    /// Product modulo `y^{order+1}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![LaurentPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies every coefficient by the polynomial `p` in `x`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        self.map_coeffs(|_, c| c * p)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        acc
    }

    /// Multiplicative inverse modulo `y^{order+1}`.
    ///
    /// The `y^0` coefficient must be a unit of `Z[x, 1/x]`, i.e. `±x^e`.
    /// Uses `b_0 = a_0^{-1}`, `b_n = -a_0^{-1} * sum_{i=1..n} a_i b_{n-i}`.
    pub fn inv(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].unit_inverse().ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out: Vec<LaurentPoly> = Vec::with_capacity(n + 1);
        out.push(a0_inv.clone());
        for m in 1..=n {
            let mut acc = LaurentPoly::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = &acc + &(a * &out[m - i]);
                }
            }
            out.push(-&(&acc * &a0_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// `self / other`, via [`inv`](Self::inv).
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Builds `sum_j c_j y^j` from coefficients given as
    /// `(y-power, x-exponent, integer)` triples.
    pub fn from_monomials(order: usize, terms: &[(usize, i64, i64)]) -> Self {
        let mut s = Self::zero(order);
        for &(j, e, c) in terms {
            if j <= order {
                s.coeffs[j] = &s.coeffs[j] + &LaurentPoly::monomial(BigInt::from(c), e);
            }
        }
        s
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{}](", self.order())?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "y^{n}: {c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, terms: &[(usize, i64, i64)]) -> TruncSeries {
        TruncSeries::from_monomials(order, terms)
    }

    #[test]
    fn geometric_series_times_its_inverse() {
        let one_minus_y = s(3, &[(0, 0, 1), (1, 0, -1)]);
        let geo = s(3, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1)]);
        assert_eq!(geo.mul(&one_minus_y).unwrap(), TruncSeries::one(3));
    }

    #[test]
    fn square_of_one_plus_xy() {
        let a = s(2, &[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(a.mul(&a).unwrap(), s(2, &[(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    #[test]
    fn binomial_simplification_k3() {
        let one_minus_y = s(8, &[(0, 0, 1), (1, 0, -1)]);
        let one_plus_y = s(8, &[(0, 0, 1), (1, 0, 1)]);
        let one_minus_y2 = s(8, &[(0, 0, 1), (2, 0, -1)]);
        let lhs = one_minus_y.pow(3).mul(&one_plus_y.pow(3)).unwrap();
        assert_eq!(lhs, one_minus_y2.pow(3));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = TruncSeries::one(2);
        let b = TruncSeries::one(3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(2, 3)));
        assert_eq!(a.add(&b), Err(Error::OrderMismatch(2, 3)));
    }

    #[test]
    fn inverse_examples() {
        let inv = s(4, &[(0, 0, 1), (1, 0, -1)]).inv().unwrap();
        assert_eq!(inv, s(4, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1)]));

        let inv = s(3, &[(0, 0, 1), (1, 1, -1)]).inv().unwrap();
        assert_eq!(inv, s(3, &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)]));

        let one_plus_y_sq = s(3, &[(0, 0, 1), (1, 0, 2), (2, 0, 1)]);
        assert_eq!(one_plus_y_sq.inv().unwrap(), s(3, &[(0, 0, 1), (1, 0, -2), (2, 0, 3), (3, 0, -4)]));
    }

    #[test]
    fn inverse_of_monomial_constant_term() {
        let a = s(5, &[(0, 3, -1), (1, 1, 2), (4, -1, 7)]);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), TruncSeries::one(5));
        assert_eq!(inv.mul(&a).unwrap(), TruncSeries::one(5));
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert_eq!(s(2, &[(0, 0, 2)]).inv(), Err(Error::NonUnitConstantTerm));
        assert_eq!(s(2, &[(1, 0, 1)]).inv(), Err(Error::NonUnitConstantTerm));
        assert_eq!(s(2, &[(0, 0, 1), (0, 1, 1)]).inv(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn new_pads_and_truncates() {
        let a = TruncSeries::new(2, [LaurentPoly::one()]);
        assert_eq!(a.coeffs().len(), 3);
        let b = TruncSeries::new(0, [LaurentPoly::one(), LaurentPoly::x()]);
        assert_eq!(b, TruncSeries::one(0));
        assert_eq!(TruncSeries::monomial(LaurentPoly::x(), 5, 2), TruncSeries::zero(2));
    }
}
