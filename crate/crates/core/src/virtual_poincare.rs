//! Virtual Poincaré polynomials.
//!
//! `S(C \ k) = x^2 - k`. Ordered: `S(F_n) = (x^2 - k)(x^2 - k - 1)...(x^2 - k - n + 1)`.
//! Unordered: the `y^n` coefficient of
//! `(1 - x^2 y^2) / ((1 - x^2 y)(1 + y)^k)`, which is also computed from the
//! unsimplified form `(1 - x^2 y^2)(1 - y)^k / ((1 - x^2 y)(1 - y^2)^k)`.
//!
//! Polynomials are kept in `x` (even exponents only) rather than in `x^2`.

use num_bigint::BigInt;
use num_traits::One;

use crate::ring::{one_minus, LaurentPoly, TruncSeries};
use crate::Space;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualPoly {
    pub poly: LaurentPoly,
    pub k: u32,
    pub n: usize,
    pub space: Space,
}

impl VirtualPoly {
    /// Monic of degree `2n` with only even exponents.
    pub fn has_expected_shape(&self) -> bool {
        is_monic_even(&self.poly, self.n)
    }

    /// Value at `x^2 = q`.
    pub fn eval_at(&self, q: u64) -> BigInt {
        self.poly.eval_at_x_squared(&BigInt::from(q)).expect("even nonnegative exponents")
    }
}

/// Monic, degree `2n`, even exponents only.
pub fn is_monic_even(p: &LaurentPoly, n: usize) -> bool {
    p.degree().ok() == Some(2 * n as i64)
        && p.leading_coeff().is_ok_and(|c| c.is_one())
        && p.terms().all(|(e, _)| e >= 0 && e % 2 == 0)
}

/// `S(F_n(C \ k))`.
pub fn virtual_ordered(k: u32, n: usize) -> VirtualPoly {
    let poly = (0..n as i64).fold(LaurentPoly::one(), |acc, j| {
        let factor = LaurentPoly::from_terms([(2, BigInt::one()), (0, BigInt::from(-(k as i64) - j))]);
        &acc * &factor
    });
    VirtualPoly { poly, k, n, space: Space::Ordered }
}

/// `sum_n S(F_n(C \ k)) y^n` truncated at `order`.
pub fn virtual_ordered_series(k: u32, order: usize) -> TruncSeries {
    TruncSeries::new(order, (0..=order).map(|n| virtual_ordered(k, n).poly))
}

/// `(1 - x^2 y^2) / ((1 - x^2 y)(1 + y)^k)` to order `order`.
pub fn virtual_unordered_series(k: u32, order: usize) -> TruncSeries {
    let numerator = one_minus(1, 2, 2, order);
    let one_plus_y = one_minus(-1, 0, 1, order);
    let denominator = one_minus(1, 2, 1, order).mul(&one_plus_y.pow(k)).expect("same order");
    numerator.div(&denominator).expect("unit constant term")
}

/// `(1 - x^2 y^2)(1 - y)^k / ((1 - x^2 y)(1 - y^2)^k)` to order `order`.
pub fn getzler_series_raw(k: u32, order: usize) -> TruncSeries {
    let numerator = one_minus(1, 2, 2, order)
        .mul(&one_minus(1, 0, 1, order).pow(k))
        .expect("same order");
    let denominator = one_minus(1, 2, 1, order)
        .mul(&one_minus(1, 0, 2, order).pow(k))
        .expect("same order");
    numerator.div(&denominator).expect("unit constant term")
}

/// `S(C_n(C \ k))`, the `y^n` coefficient of [`virtual_unordered_series`].
pub fn virtual_unordered(k: u32, n: usize) -> VirtualPoly {
    let poly = virtual_unordered_series(k, n).coeff(n).clone();
    VirtualPoly { poly, k, n, space: Space::Unordered }
}

pub fn virtual_poly(space: Space, k: u32, n: usize) -> VirtualPoly {
    match space {
        Space::Ordered => virtual_ordered(k, n),
        Space::Unordered => virtual_unordered(k, n),
    }
}
