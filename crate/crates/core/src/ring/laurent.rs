use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A Laurent polynomial in `x` with integer coefficients.
///
/// Stored sparsely as exponent -> coefficient. Zero coefficients are never
/// stored, so the zero polynomial is the empty map and equality is
/// structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial from dense coefficients, index = exponent.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `x^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Result<i64> {
        self.terms.keys().next_back().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn min_exponent(&self) -> Result<i64> {
        self.terms.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<&BigInt> {
        self.terms.values().next_back().ok_or(Error::ZeroPolynomial)
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().next().is_none_or(|&e| e >= 0)
    }

    /// Dense coefficients `c_0, ..., c_deg`. Errors on negative exponents.
    pub fn to_dense(&self) -> Result<Vec<BigInt>> {
        if let Some(&e) = self.terms.keys().next() {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
        }
        let len = self.terms.keys().next_back().map_or(0, |&d| d as usize + 1);
        let mut out = vec![BigInt::zero(); len];
        for (&e, c) in &self.terms {
            out[e as usize] = c.clone();
        }
        Ok(out)
    }

    /// Exact value at an integer point. Only defined for genuine polynomials.
    pub fn eval_int(&self, v: &BigInt) -> Result<BigInt> {
        if let Some(&e) = self.terms.keys().next() {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
        }
        // Horner over the sparse support, descending.
        let mut acc = BigInt::zero();
        let mut prev: Option<i64> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= num_traits::pow(v.clone(), (p - e) as usize);
            }
            acc += c;
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc *= num_traits::pow(v.clone(), p as usize);
        }
        Ok(acc)
    }

    /// Value after substituting `x^2 = q`; every exponent must be even and
    /// nonnegative.
    pub fn eval_at_x_squared(&self, q: &BigInt) -> Result<BigInt> {
        let mut halved = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e < 0 {
                return Err(Error::NegativeExponent(e));
            }
            if e % 2 != 0 {
                return Err(Error::OddExponent(e));
            }
            halved.insert(e / 2, c.clone());
        }
        LaurentPoly { terms: halved }.eval_int(q)
    }

    /// `x^{2n} * p(-x^{-2})`: each term `c x^e` becomes `(-1)^e c x^{2n-2e}`.
    pub fn substitute_duality(&self, n: usize) -> LaurentPoly {
        let n = n as i64;
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let c = if e.rem_euclid(2) == 1 { -c } else { c.clone() };
                (2 * n - 2 * e, c)
            })
            .collect();
        LaurentPoly { terms }
    }

    /// Inverse of [`substitute_duality`](Self::substitute_duality) for the
    /// same weight `n`: `c x^{2m}` becomes `(-1)^{n-m} c x^{n-m}`. The input
    /// must only carry even exponents.
    pub fn invert_duality(&self, n: usize) -> Result<LaurentPoly> {
        let n = n as i64;
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e.rem_euclid(2) != 0 {
                return Err(Error::OddExponent(e));
            }
            let d = n - e / 2;
            let c = if d.rem_euclid(2) == 1 { -c } else { c.clone() };
            terms.insert(d, c);
        }
        Ok(LaurentPoly { terms })
    }

    /// `x^s * self`.
    pub fn shift(&self, s: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    pub fn pow(&self, mut exp: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// If `self` is `±x^e`, its inverse `±x^{-e}`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

/// Canonical rendering: descending exponents, `x^e`, `x` for `e = 1`, bare
/// constant for `e = 0`, unit coefficients elided. Zero renders as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses the canonical form (and any ordering of such terms).
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let bad = || Error::Parse(s.clone());
        let mut out = LaurentPoly::zero();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            match bytes[pos] {
                b'+' if pos > 0 => pos += 1,
                b'-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if pos == 0 => {}
                _ => return Err(bad()),
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &s[start..pos];
            let coeff: BigInt = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let exp = if pos < bytes.len() && bytes[pos] == b'x' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let start = pos;
                    if pos < bytes.len() && bytes[pos] == b'-' {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    s[start..pos].parse::<i64>().map_err(|_| bad())?
                } else {
                    1
                }
            } else if digits.is_empty() {
                return Err(bad());
            } else {
                0
            };
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}
