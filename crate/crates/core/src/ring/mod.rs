//! Exact arithmetic kernel: Laurent polynomials in `x` over big integers and
//! truncated power series in `y` with Laurent polynomial coefficients.
//!
//! Negative exponents of `x` only appear transiently, inside the duality
//! substitution `x -> -1/x^2`.

mod laurent;
mod series;

pub use laurent::LaurentPoly;
pub use series::TruncSeries;

/// `1 - c * x^e * y^j` as a series of the given order; the building block of
/// every rational generating function in this crate.
pub fn one_minus(c: i64, e: i64, j: usize, order: usize) -> TruncSeries {
    TruncSeries::from_monomials(order, &[(0, 0, 1), (j, e, -c)])
}
