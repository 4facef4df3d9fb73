//! Pyramidal numbers, binomial coefficients and unsigned Stirling numbers of
//! the first kind.
//!
//! The pyramidal number `P(k, i)` (`k >= -1`) is defined by `P(-1, i) = [i = 0]`
//! and `P(k+1, i) = sum_{j <= i} P(k, j)`; equivalently `P(k, 0) = 1` and
//! `P(k+1, i+1) = P(k, i+1) + P(k+1, i)`. For `k >= 0` it equals
//! `binom(i + k, i)`. It is zero for `i < 0`.
//!
//! The running-sum and Pascal-style recursions and the closed form are kept
//! as separate code paths so that they can be checked against each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `P(k, i)` for `-1 <= k <= max_k`, `0 <= i <= max_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidalTable {
    max_k: i64,
    max_i: usize,
    // rows[k + 1][i]
    rows: Vec<Vec<BigInt>>,
}

impl PyramidalTable {
    /// Builds the table from the running-sum recursion.
    pub fn new(max_k: i64, max_i: usize) -> Result<Self> {
        if max_k < -1 {
            return Err(Error::KOutOfRange(max_k));
        }
        let mut rows = Vec::with_capacity((max_k + 2) as usize);
        let mut base = vec![BigInt::zero(); max_i + 1];
        base[0] = BigInt::one();
        rows.push(base);
        for _ in 0..=max_k {
            let prev = rows.last().expect("nonempty");
            let mut acc = BigInt::zero();
            let row = prev
                .iter()
                .map(|v| {
                    acc += v;
                    acc.clone()
                })
                .collect();
            rows.push(row);
        }
        Ok(Self { max_k, max_i, rows })
    }

    /// Builds the table from `P(k, 0) = 1`, `P(k+1, i+1) = P(k, i+1) + P(k+1, i)`
    /// on top of the `k = -1` row.
    pub fn by_pascal(max_k: i64, max_i: usize) -> Result<Self> {
        if max_k < -1 {
            return Err(Error::KOutOfRange(max_k));
        }
        let mut base = vec![BigInt::zero(); max_i + 1];
        base[0] = BigInt::one();
        let mut rows = vec![base];
        for _ in 0..=max_k {
            let prev = rows.last().expect("nonempty");
            let mut row = Vec::with_capacity(max_i + 1);
            row.push(BigInt::one());
            for i in 0..max_i {
                let v = &prev[i + 1] + &row[i];
                row.push(v);
            }
            rows.push(row);
        }
        Ok(Self { max_k, max_i, rows })
    }

    pub fn max_k(&self) -> i64 {
        self.max_k
    }

    pub fn max_i(&self) -> usize {
        self.max_i
    }

    /// `P(k, i)`; zero for `i < 0`. Panics outside the table's range.
    pub fn get(&self, k: i64, i: i64) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        assert!((-1..=self.max_k).contains(&k) && i as usize <= self.max_i, "({k}, {i}) outside table");
        self.rows[(k + 1) as usize][i as usize].clone()
    }

    /// Row `k`, indices `0..=max_i`.
    pub fn row(&self, k: i64) -> &[BigInt] {
        &self.rows[(k + 1) as usize]
    }
}

/// `P(k, i)` by the running-sum recursion.
pub fn pyramidal(k: i64, i: i64) -> Result<BigInt> {
    if k < -1 {
        return Err(Error::KOutOfRange(k));
    }
    if i < 0 {
        return Ok(BigInt::zero());
    }
    Ok(PyramidalTable::new(k, i as usize)?.get(k, i))
}

/// `P(k, i)` from the closed form `binom(i + k, i)`; the `k = -1` row is the
/// indicator of `i = 0`.
pub fn pyramidal_closed(k: i64, i: i64) -> Result<BigInt> {
    if k < -1 {
        return Err(Error::KOutOfRange(k));
    }
    if i < 0 {
        return Ok(BigInt::zero());
    }
    if k == -1 {
        return Ok(if i == 0 { BigInt::one() } else { BigInt::zero() });
    }
    Ok(binomial((i + k) as u64, i))
}

/// Binomial coefficient; zero when `r` lies outside `0..=n`.
pub fn binomial(n: u64, r: i64) -> BigInt {
    if r < 0 || r as u64 > n {
        return BigInt::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = BigInt::one();
    for j in 0..r {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Unsigned Stirling numbers of the first kind `c(n, r)`, from
/// `c(n+1, r) = c(n, r-1) + n c(n, r)`, `c(0, 0) = 1`.
pub fn stirling_first_unsigned(n: usize, r: i64) -> BigInt {
    if r < 0 || r as usize > n {
        return BigInt::zero();
    }
    stirling_row(n).swap_remove(r as usize)
}

/// `c(n, 0), ..., c(n, n)`.
pub fn stirling_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (r, v) in row.iter().enumerate() {
            next[r + 1] += v;
            next[r] += v * m;
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn printed_table() {
        let expected: [[i64; 5]; 5] = [
            [1, 0, 0, 0, 0],
            [1, 1, 1, 1, 1],
            [1, 2, 3, 4, 5],
            [1, 3, 6, 10, 15],
            [1, 4, 10, 20, 35],
        ];
        let table = PyramidalTable::new(3, 4).unwrap();
        for (row, k) in expected.iter().zip(-1..) {
            let want: Vec<BigInt> = row.iter().map(|&v| big(v)).collect();
            assert_eq!(table.row(k), &want[..], "row {k}");
        }
    }

    #[test]
    fn pyramidal_examples() {
        assert_eq!(pyramidal(2, 3).unwrap(), big(10));
        assert_eq!(pyramidal(-1, 0).unwrap(), big(1));
        assert_eq!(pyramidal(3, 4).unwrap(), big(35));
        assert_eq!(pyramidal(4, -1).unwrap(), big(0));
        assert_eq!(pyramidal(-2, 0), Err(Error::KOutOfRange(-2)));
        assert_eq!(pyramidal_closed(-3, 1), Err(Error::KOutOfRange(-3)));
    }

    #[test]
    fn recursions_and_closed_form_agree() {
        let sums = PyramidalTable::new(8, 12).unwrap();
        let pascal = PyramidalTable::by_pascal(8, 12).unwrap();
        assert_eq!(sums, pascal);
        for k in -1..=8 {
            for i in -2..=12 {
                assert_eq!(sums.get(k, i), pyramidal_closed(k, i).unwrap(), "P({k},{i})");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(7, 0), big(1));
        assert_eq!(binomial(6, 4), big(15));
        assert_eq!(binomial(6, 4), pyramidal(2, 4).unwrap());
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first_unsigned(3, 2), big(3));
        assert_eq!(stirling_first_unsigned(0, 0), big(1));
        assert_eq!(stirling_first_unsigned(3, 1), big(2));
        assert_eq!(stirling_first_unsigned(3, 4), big(0));
        // total over r is n!
        let total: BigInt = stirling_row(6).iter().sum();
        assert_eq!(total, big(720));
    }
}
