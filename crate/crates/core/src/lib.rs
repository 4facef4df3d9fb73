//! Exact standard and virtual Poincaré polynomials of the configuration
//! spaces `F_n(C \ k)` (ordered) and `C_n(C \ k)` (unordered) of the plane
//! with `k` punctures.
//!
//! Every quantity is computed with arbitrary-precision integers, by several
//! independent routes:
//!
//! * [`poincare`]: Betti numbers from pyramidal numbers, from the generating
//!   series `(1 + x y^2) / ((1 - y)(1 - x y)^k)`, and by iterating the
//!   puncture-adding step `Q -> Q / (1 - x y)` from the braid-group base case;
//!   the ordered product `(1 + k x)(1 + (k+1) x)...`.
//! * [`virtual_poincare`]: virtual Poincaré polynomials of both spaces, the
//!   unordered one from two equivalent rational series.
//! * [`duality`]: the substitution `x -> -1/x^2, y -> y x^2` that carries the
//!   standard series to the virtual ones.
//! * [`ffield`]: brute-force point counts over prime fields, independent of
//!   every formula above.
//! * [`cli`]: table rendering and the verification suites behind the binary.

pub mod cli;
pub mod combinatorics;
pub mod duality;
mod error;
pub mod ffield;
pub mod poincare;
pub mod ring;
pub mod virtual_poincare;

pub use error::{Error, Result};
pub use ring::{LaurentPoly, TruncSeries};

use std::fmt;

/// Which configuration space: ordered tuples `F_n` or unordered sets `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Ordered,
    Unordered,
}

impl Space {
    pub const BOTH: [Space; 2] = [Space::Ordered, Space::Unordered];
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Ordered => "ordered",
            Space::Unordered => "unordered",
        })
    }
}
