use crate::{Error, Result};

/// Largest modulus accepted by [`PrimeField::new`].
pub const MAX_MODULUS: u32 = 100;

/// The prime field `Z/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(q, MAX_MODULUS));
        }
        if q < 2 || (2..q).take_while(|d| d * d <= q).any(|d| q.is_multiple_of(d)) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q })
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.q - b) % self.q
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.q
    }

    /// Multiplicative inverse by Fermat; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        let mut acc = 1;
        let mut base = a % self.q;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Dense polynomial over a prime field, lowest degree first. The leading
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPoly {
    coeffs: Vec<u32>,
}

impl FieldPoly {
    pub fn new(field: &PrimeField, coeffs: impl IntoIterator<Item = u32>) -> Self {
        let q = field.modulus();
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % q).collect();
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `t - a`.
    pub fn linear(field: &PrimeField, a: u32) -> Self {
        Self::new(field, [field.sub(0, a % field.modulus()), 1])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, field: &PrimeField, t: u32) -> u32 {
        self.coeffs.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, t), c))
    }

    /// Formal derivative.
    pub fn derivative(&self, field: &PrimeField) -> Self {
        let q = field.modulus();
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| field.mul(c, i as u32 % q));
        Self::new(field, coeffs)
    }

    pub fn mul(&self, field: &PrimeField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::new(field, out)
    }

    /// Remainder of division by a nonzero divisor.
    pub fn rem(&self, field: &PrimeField, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = field.inv(divisor.coeffs[d]);
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let factor = field.mul(r[top], lead_inv);
            if factor != 0 {
                for (j, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - d + j;
                    r[idx] = field.sub(r[idx], field.mul(factor, c));
                }
            }
            r.pop();
            trim(&mut r);
        }
        Self { coeffs: r }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, field: &PrimeField, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.make_monic(field)
    }

    pub fn make_monic(&self, field: &PrimeField) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(&lead) => {
                let inv = field.inv(lead);
                Self::new(field, self.coeffs.iter().map(|&c| field.mul(c, inv)))
            }
        }
    }

    pub fn divides(&self, field: &PrimeField, other: &Self) -> bool {
        other.rem(field, self).is_zero()
    }
}

fn trim(coeffs: &mut Vec<u32>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

/// The monic polynomial of degree `n` whose lower coefficients are the
/// base-`q` digits of `index`.
pub fn monic_from_index(field: &PrimeField, n: usize, mut index: u64) -> FieldPoly {
    let q = field.modulus() as u64;
    let mut coeffs = Vec::with_capacity(n + 1);
    for _ in 0..n {
        coeffs.push((index % q) as u32);
        index /= q;
    }
    coeffs.push(1);
    FieldPoly { coeffs }
}
