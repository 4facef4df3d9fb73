//! Verification suites.
//!
//! Every check reads its polynomials through a [`Formulas`] source so that a
//! deliberately corrupted source ([`MutatedFormulas`]) can be run through the
//! same suites; a single wrong coefficient must surface as a failure naming
//! the offending `(space, k, n)`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{pyramidal_closed, stirling_row, PyramidalTable};
use crate::duality::{check_duality_with, euler_pair};
use crate::ffield::{count_squarefree_coprime_by, enumeration_size, oracle_check_with, SquarefreeTest};
use crate::poincare::{self, is_nonnegative, iterated_series, stable_betti, stable_series};
use crate::ring::{LaurentPoly, TruncSeries};
use crate::virtual_poincare::{self, is_monic_even};
use crate::{Result, Space};

/// Source of every polynomial the suites compare.
pub trait Formulas: Sync {
    /// `P(C_n(C \ k))` from the pyramidal closed form.
    fn standard_unordered(&self, k: u32, n: usize) -> LaurentPoly;
    /// `(1 + x y^2) / ((1 - y)(1 - x y)^k)`.
    fn unordered_series(&self, k: u32, order: usize) -> TruncSeries;
    /// `P(F_n(C \ k))`.
    fn standard_ordered(&self, k: u32, n: usize) -> LaurentPoly;
    /// `S(F_n(C \ k))`.
    fn virtual_ordered(&self, k: u32, n: usize) -> LaurentPoly;
    /// `(1 - x^2 y^2) / ((1 - x^2 y)(1 + y)^k)`.
    fn virtual_unordered_series(&self, k: u32, order: usize) -> TruncSeries;
    /// The unsimplified form of the same series.
    fn virtual_unordered_raw(&self, k: u32, order: usize) -> TruncSeries;

    fn virtual_unordered(&self, k: u32, n: usize) -> LaurentPoly {
        self.virtual_unordered_series(k, n).coeff(n).clone()
    }

    fn standard(&self, space: Space, k: u32, n: usize) -> LaurentPoly {
        match space {
            Space::Ordered => self.standard_ordered(k, n),
            Space::Unordered => self.standard_unordered(k, n),
        }
    }

    fn virtual_(&self, space: Space, k: u32, n: usize) -> LaurentPoly {
        match space {
            Space::Ordered => self.virtual_ordered(k, n),
            Space::Unordered => self.virtual_unordered(k, n),
        }
    }
}

/// The library's own formulas.
#[derive(Clone, Copy, Debug, Default)]
pub struct LibraryFormulas;

impl Formulas for LibraryFormulas {
    fn standard_unordered(&self, k: u32, n: usize) -> LaurentPoly {
        poincare::betti_unordered(k, n).to_poly()
    }

    fn unordered_series(&self, k: u32, order: usize) -> TruncSeries {
        poincare::unordered_series(k, order)
    }

    fn standard_ordered(&self, k: u32, n: usize) -> LaurentPoly {
        poincare::poincare_ordered(k, n)
    }

    fn virtual_ordered(&self, k: u32, n: usize) -> LaurentPoly {
        virtual_poincare::virtual_ordered(k, n).poly
    }

    fn virtual_unordered_series(&self, k: u32, order: usize) -> TruncSeries {
        virtual_poincare::virtual_unordered_series(k, order)
    }

    fn virtual_unordered_raw(&self, k: u32, order: usize) -> TruncSeries {
        virtual_poincare::getzler_series_raw(k, order)
    }
}

/// A formula path that can be corrupted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    StandardUnordered,
    UnorderedSeries,
    StandardOrdered,
    VirtualOrdered,
    VirtualUnordered,
    VirtualUnorderedRaw,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::StandardUnordered,
        Family::UnorderedSeries,
        Family::StandardOrdered,
        Family::VirtualOrdered,
        Family::VirtualUnordered,
        Family::VirtualUnorderedRaw,
    ];

    pub fn space(self) -> Space {
        match self {
            Family::StandardOrdered | Family::VirtualOrdered => Space::Ordered,
            _ => Space::Unordered,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::StandardUnordered => "standard-unordered",
            Family::UnorderedSeries => "unordered-series",
            Family::StandardOrdered => "standard-ordered",
            Family::VirtualOrdered => "virtual-ordered",
            Family::VirtualUnordered => "virtual-unordered",
            Family::VirtualUnorderedRaw => "virtual-unordered-raw",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Adds `delta` to the coefficient of `x^exponent` in the `(k, n)` entry of
/// one family. For series families the entry is the `y^n` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub family: Family,
    pub k: u32,
    pub n: usize,
    pub exponent: i64,
    pub delta: BigInt,
}

impl Mutation {
    fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        p + &LaurentPoly::monomial(self.delta.clone(), self.exponent)
    }

    fn hits(&self, family: Family, k: u32, n: usize) -> bool {
        self.family == family && self.k == k && self.n == n
    }

    fn apply_series(&self, family: Family, k: u32, s: TruncSeries) -> TruncSeries {
        if self.family != family || self.k != k || self.n > s.order() {
            return s;
        }
        s.map_coeffs(|n, c| if n == self.n { self.apply(c) } else { c.clone() })
    }
}

/// `family:k:n:exponent:delta`, e.g. `virtual-ordered:2:3:6:-1`.
impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [family, k, n, exponent, delta] = parts[..] else {
            return Err(format!("expected family:k:n:exponent:delta, got `{s}`"));
        };
        let num = |v: &str, what: &str| format!("invalid {what} `{v}`");
        Ok(Mutation {
            family: family.parse()?,
            k: k.parse().map_err(|_| num(k, "k"))?,
            n: n.parse().map_err(|_| num(n, "n"))?,
            exponent: exponent.parse().map_err(|_| num(exponent, "exponent"))?,
            delta: delta.parse().map_err(|_| num(delta, "delta"))?,
        })
    }
}

/// `inner` with one coefficient corrupted.
#[derive(Clone, Debug)]
pub struct MutatedFormulas<F> {
    pub inner: F,
    pub mutation: Mutation,
}

impl<F: Formulas> Formulas for MutatedFormulas<F> {
    fn standard_unordered(&self, k: u32, n: usize) -> LaurentPoly {
        let p = self.inner.standard_unordered(k, n);
        if self.mutation.hits(Family::StandardUnordered, k, n) {
            self.mutation.apply(&p)
        } else {
            p
        }
    }

    fn unordered_series(&self, k: u32, order: usize) -> TruncSeries {
        self.mutation.apply_series(Family::UnorderedSeries, k, self.inner.unordered_series(k, order))
    }

    fn standard_ordered(&self, k: u32, n: usize) -> LaurentPoly {
        let p = self.inner.standard_ordered(k, n);
        if self.mutation.hits(Family::StandardOrdered, k, n) {
            self.mutation.apply(&p)
        } else {
            p
        }
    }

    fn virtual_ordered(&self, k: u32, n: usize) -> LaurentPoly {
        let p = self.inner.virtual_ordered(k, n);
        if self.mutation.hits(Family::VirtualOrdered, k, n) {
            self.mutation.apply(&p)
        } else {
            p
        }
    }

    fn virtual_unordered_series(&self, k: u32, order: usize) -> TruncSeries {
        self.mutation.apply_series(Family::VirtualUnordered, k, self.inner.virtual_unordered_series(k, order))
    }

    fn virtual_unordered_raw(&self, k: u32, order: usize) -> TruncSeries {
        self.mutation.apply_series(Family::VirtualUnorderedRaw, k, self.inner.virtual_unordered_raw(k, order))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Recursions,
    Series,
    Duality,
    Euler,
    Pointcount,
}

impl Suite {
    /// Suites run by `all`, in order.
    pub const EACH: [Suite; 5] = [Suite::Recursions, Suite::Series, Suite::Duality, Suite::Euler, Suite::Pointcount];

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Recursions => "recursions",
            Suite::Series => "series",
            Suite::Duality => "duality",
            Suite::Euler => "euler",
            Suite::Pointcount => "pointcount",
        })
    }
}

/// Ranges for the suites. `None` means the suite's own default.
#[derive(Clone, Debug, Default)]
pub struct Ranges {
    /// Restrict to this single puncture count.
    pub k: Option<u32>,
    pub max_k: Option<u32>,
    pub max_n: Option<usize>,
    pub spaces: Option<Vec<Space>>,
    pub primes: Option<Vec<u32>>,
}

pub const DEFAULT_MAX_K: u32 = 6;
pub const DEFAULT_MAX_N: usize = 12;
pub const DEFAULT_EULER_MAX_N: usize = 10;
pub const DEFAULT_POINTCOUNT_MAX_K: u32 = 3;
pub const DEFAULT_POINTCOUNT_MAX_N: usize = 5;
pub const DEFAULT_PRIMES: [u32; 4] = [2, 3, 5, 7];
pub const PYRAMIDAL_MAX_K: i64 = 8;
pub const PYRAMIDAL_MAX_I: usize = 12;

impl Ranges {
    fn ks(&self, default_max: u32) -> Vec<u32> {
        match self.k {
            Some(k) => vec![k],
            None => (0..=self.max_k.unwrap_or(default_max)).collect(),
        }
    }

    fn max_n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn spaces(&self) -> Vec<Space> {
        self.spaces.clone().unwrap_or_else(|| Space::BOTH.to_vec())
    }

    fn primes(&self) -> Vec<u32> {
        self.primes.clone().unwrap_or_else(|| DEFAULT_PRIMES.to_vec())
    }
}

/// Where and how a single check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub suite: Suite,
    pub check: &'static str,
    pub space: Option<Space>,
    pub k: i64,
    pub n: i64,
    pub detail: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite={} check={}", self.suite, self.check)?;
        if let Some(space) = self.space {
            write!(f, " space={space}")?;
        }
        write!(f, " k={} n={}: {}", self.k, self.n, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<CheckFailure>,
    /// Per-item lines (duality and point-count tables).
    pub lines: Vec<String>,
}

impl SuiteResult {
    fn new(suite: Suite) -> Self {
        Self { suite, checks: 0, failures: Vec::new(), lines: Vec::new() }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> (&'static str, Option<Space>, i64, i64, String)) {
        self.checks += 1;
        if !ok {
            let (check, space, k, n, detail) = failure();
            self.failures.push(CheckFailure { suite: self.suite, check, space, k, n, detail });
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, check: &'static str, space: Option<Space>, k: u32, n: usize, lhs: &T, rhs: &T) {
        self.check(lhs == rhs, || (check, space, k as i64, n as i64, format!("{lhs} != {rhs}")));
    }
}

#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub suites: Vec<SuiteResult>,
    pub duration: Duration,
}

impl VerifySummary {
    pub fn checks(&self) -> usize {
        self.suites.iter().map(|s| s.checks).sum()
    }

    pub fn failures(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn first_failure(&self) -> Option<&CheckFailure> {
        self.suites.iter().flat_map(|s| &s.failures).next()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// Runs `suite` (expanding `all`) against `formulas`.
pub fn run_verify(suite: Suite, ranges: &Ranges, formulas: &dyn Formulas) -> Result<VerifySummary> {
    let start = Instant::now();
    let suites = suite
        .expand()
        .into_iter()
        .map(|s| match s {
            Suite::Recursions => Ok(recursions(ranges, formulas)),
            Suite::Series => Ok(series(ranges, formulas)),
            Suite::Duality => Ok(duality(ranges, formulas)),
            Suite::Euler => Ok(euler(ranges, formulas)),
            Suite::Pointcount => pointcount(ranges, formulas),
            Suite::All => unreachable!("expanded"),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifySummary { suites, duration: start.elapsed() })
}

fn recursions(ranges: &Ranges, f: &dyn Formulas) -> SuiteResult {
    let mut r = SuiteResult::new(Suite::Recursions);
    let max_n = ranges.max_n(DEFAULT_MAX_N);
    let ks = ranges.ks(DEFAULT_MAX_K);
    let unordered = Some(Space::Unordered);
    let ordered = Some(Space::Ordered);

    // Both pyramidal recursions and the binomial closed form.
    let sums = PyramidalTable::new(PYRAMIDAL_MAX_K, PYRAMIDAL_MAX_I).expect("valid range");
    let pascal = PyramidalTable::by_pascal(PYRAMIDAL_MAX_K, PYRAMIDAL_MAX_I).expect("valid range");
    for k in -1..=PYRAMIDAL_MAX_K {
        for i in 0..=PYRAMIDAL_MAX_I as i64 {
            let (a, b, c) = (sums.get(k, i), pascal.get(k, i), pyramidal_closed(k, i).expect("k >= -1"));
            r.check(a == b && b == c, || ("pyramidal", None, k, i, format!("{a}, {b}, {c}")));
        }
    }

    // Closed form, series expansion and Napolitano iteration from Arnold's Q_0.
    for &k in &ks {
        let series = f.unordered_series(k, max_n);
        let iterated = iterated_series(k, max_n);
        for n in 0..=max_n {
            let closed = f.standard_unordered(k, n);
            r.expect_eq("closed-vs-series", unordered, k, n, &closed, series.coeff(n));
            r.expect_eq("series-vs-napolitano", unordered, k, n, series.coeff(n), iterated.coeff(n));
        }
    }

    for &k in &ks {
        let stepped = poincare::napolitano_step(&f.unordered_series(k, max_n));
        let next = f.unordered_series(k + 1, max_n);
        for n in 0..=max_n {
            r.expect_eq("napolitano-step", unordered, k + 1, n, stepped.coeff(n), next.coeff(n));
        }
    }

    // Stability in n, and the top-degree offset at n = j.
    for &k in &ks {
        for n in 0..=max_n {
            let p = f.standard_unordered(k, n);
            for j in 0..=n.min(8) {
                let stable = stable_betti(k, j);
                let rank = p.coeff(j as i64);
                if j < n {
                    r.expect_eq("stability", unordered, k, n, &rank, &stable);
                } else {
                    let offset = pyramidal_closed(k as i64 - 1, j as i64 - 1).expect("k >= -1");
                    r.expect_eq("top-degree-offset", unordered, k, n, &(&stable - &rank), &offset);
                }
            }
        }
    }

    // Coefficients of prod_{j<n-1}(1 + (j+1) x) are Stirling numbers c(n, n - i).
    for m in 1..=8 {
        let p = f.standard_ordered(1, m - 1);
        let row = stirling_row(m);
        for i in 0..m {
            r.expect_eq("stirling", ordered, 1, m - 1, &p.coeff(i as i64), &row[m - i]);
        }
    }

    for &k in &ks {
        for n in 0..=max_n {
            let p = f.standard_ordered(k, n);
            let expected_degree = if k == 0 { n.saturating_sub(1) } else { n } as i64;
            let leading: BigInt = (0..n as u64).map(|j| BigInt::from(k as u64 + j)).product();
            let ok = p.degree().ok() == Some(expected_degree)
                && (k == 0 || p.leading_coeff().ok() == Some(&leading))
                && p.coeff(0).is_one()
                && is_nonnegative(&p);
            r.check(ok, || ("ordered-shape", ordered, k as i64, n as i64, format!("{p}")));
        }
    }

    // S(F_0) = 1 and S(F_n) = S(F_{n-1}) (x^2 - k - n + 1).
    for &k in &ks {
        r.expect_eq("virtual-fiber-step", ordered, k, 0, &f.virtual_ordered(k, 0), &LaurentPoly::one());
        for n in 1..=max_n {
            let factor = LaurentPoly::from_terms([(2, BigInt::one()), (0, BigInt::from(-(k as i64) - n as i64 + 1))]);
            let stepped = &f.virtual_ordered(k, n - 1) * &factor;
            r.expect_eq("virtual-fiber-step", ordered, k, n, &f.virtual_ordered(k, n), &stepped);
        }
    }
    r
}

fn series(ranges: &Ranges, f: &dyn Formulas) -> SuiteResult {
    let mut r = SuiteResult::new(Suite::Series);
    let max_n = ranges.max_n(DEFAULT_MAX_N);
    let ks = ranges.ks(DEFAULT_MAX_K);
    let unordered = Some(Space::Unordered);

    for &k in &ks {
        let raw = f.virtual_unordered_raw(k, max_n);
        let simplified = f.virtual_unordered_series(k, max_n);
        for n in 0..=max_n {
            r.expect_eq("raw-vs-simplified", unordered, k, n, raw.coeff(n), simplified.coeff(n));
        }
    }

    for &k in &ks {
        for n in 0..=max_n {
            for space in Space::BOTH {
                let p = f.virtual_(space, k, n);
                let ok = is_monic_even(&p, n);
                r.check(ok, || ("virtual-shape", Some(space), k as i64, n as i64, format!("{p}")));
            }
        }
    }

    // Stable series (1 + x)/(1 - x)^k against stable_betti.
    for &k in &ks {
        let stable = stable_series(k, 8);
        for (j, v) in stable.iter().enumerate() {
            r.expect_eq("stable-series", unordered, k, j, v, &stable_betti(k, j));
        }
    }
    r
}

fn duality(ranges: &Ranges, f: &dyn Formulas) -> SuiteResult {
    let mut r = SuiteResult::new(Suite::Duality);
    let max_n = ranges.max_n(DEFAULT_MAX_N);
    for space in ranges.spaces() {
        for k in ranges.ks(DEFAULT_MAX_K) {
            let report = check_duality_with(k, max_n, space, |n| f.standard(space, k, n), |n| f.virtual_(space, k, n));
            for (n, &ok) in report.matches.iter().enumerate() {
                let status = if ok { "PASS" } else { "FAIL" };
                r.lines.push(format!("{status} space={space} k={k} n={n}"));
                r.check(ok, || {
                    let m = report.first_mismatch.as_ref().filter(|m| m.n == n);
                    let detail = m.map_or_else(String::new, |m| format!("transformed {} != virtual {}", m.lhs, m.rhs));
                    ("duality", Some(space), k as i64, n as i64, detail)
                });
            }
            if let Some(m) = &report.first_mismatch {
                r.lines.push(format!("first mismatch space={space} k={k} n={}: {} vs {}", m.n, m.lhs, m.rhs));
            }
        }
    }
    r
}

fn euler(ranges: &Ranges, f: &dyn Formulas) -> SuiteResult {
    let mut r = SuiteResult::new(Suite::Euler);
    let max_n = ranges.max_n(DEFAULT_EULER_MAX_N);
    for space in ranges.spaces() {
        for k in ranges.ks(DEFAULT_MAX_K) {
            for n in 0..=max_n {
                let (lhs, rhs) = euler_pair(&f.standard(space, k, n), &f.virtual_(space, k, n));
                r.expect_eq("euler", Some(space), k, n, &lhs, &rhs);
            }
        }
    }
    r
}

fn pointcount(ranges: &Ranges, f: &dyn Formulas) -> Result<SuiteResult> {
    let mut r = SuiteResult::new(Suite::Pointcount);
    let max_n = ranges.max_n(DEFAULT_POINTCOUNT_MAX_N) as u32;
    let spaces = ranges.spaces();
    for &q in &ranges.primes() {
        enumeration_size(q, max_n)?;
    }
    r.lines.push(format!("{:>3} {:>3} {:>3} {:<9} {:>12} {:>12} agree", "q", "k", "n", "space", "count", "formula"));
    for q in ranges.primes() {
        let ks: Vec<u32> = ranges.ks(DEFAULT_POINTCOUNT_MAX_K).into_iter().filter(|&k| k < q).collect();
        for k in ks {
            let reports = oracle_check_with(q, k, max_n, |space, n| f.virtual_(space, k, n as usize))?;
            for rep in reports.iter().filter(|rep| spaces.contains(&rep.space)) {
                r.lines.push(format!(
                    "{:>3} {:>3} {:>3} {:<9} {:>12} {:>12} {}",
                    rep.q, rep.k, rep.n, rep.space, rep.oracle_count, rep.formula_value, rep.agree
                ));
                r.check(rep.agree, || {
                    let detail = format!("q={q}: count {} != formula {}", rep.oracle_count, rep.formula_value);
                    ("pointcount", Some(rep.space), k as i64, rep.n as i64, detail)
                });
            }
            // The gcd-based counts above must agree with trial division by squares.
            for rep in reports.iter().filter(|rep| rep.space == Space::Unordered && spaces.contains(&rep.space)) {
                let trial = count_squarefree_coprime_by(q, k, rep.n, SquarefreeTest::TrialDivision)?;
                r.check(trial == rep.oracle_count, || {
                    let detail = format!("q={q}: gcd {} != trial {trial}", rep.oracle_count);
                    ("squarefree-tests", Some(Space::Unordered), k as i64, rep.n as i64, detail)
                });
            }
        }
    }
    Ok(r)
}

/// Human-readable summary: per-suite lines, then totals and the first failure.
pub fn render_summary(summary: &VerifySummary, verbose: bool) -> String {
    let mut out = String::new();
    for s in &summary.suites {
        if verbose {
            for line in &s.lines {
                out.push_str(line);
                out.push('\n');
            }
        }
        let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} suite={} checks={} failures={}\n", s.suite, s.checks, s.failures.len()));
    }
    out.push_str(&format!("total checks={} failures={}\n", summary.checks(), summary.failures()));
    match summary.first_failure() {
        Some(f) => out.push_str(&format!("FAIL first failure: {f}\n")),
        None => out.push_str("PASS\n"),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Ranges {
        Ranges { max_k: Some(3), max_n: Some(5), ..Default::default() }
    }

    #[test]
    fn library_passes_small_ranges() {
        for suite in Suite::EACH {
            let summary = run_verify(suite, &small(), &LibraryFormulas).unwrap();
            assert!(summary.passed(), "{}", render_summary(&summary, false));
            assert!(summary.checks() > 0);
        }
    }

    /// Returns the misprinted `x^4-9x^4+26x^2-24` for `S(F_3(C \ 2))`.
    struct PrintedTypo;

    impl Formulas for PrintedTypo {
        fn standard_unordered(&self, k: u32, n: usize) -> LaurentPoly {
            LibraryFormulas.standard_unordered(k, n)
        }
        fn unordered_series(&self, k: u32, order: usize) -> TruncSeries {
            LibraryFormulas.unordered_series(k, order)
        }
        fn standard_ordered(&self, k: u32, n: usize) -> LaurentPoly {
            LibraryFormulas.standard_ordered(k, n)
        }
        fn virtual_ordered(&self, k: u32, n: usize) -> LaurentPoly {
            if (k, n) == (2, 3) {
                "x^4-9x^4+26x^2-24".parse().unwrap()
            } else {
                LibraryFormulas.virtual_ordered(k, n)
            }
        }
        fn virtual_unordered_series(&self, k: u32, order: usize) -> TruncSeries {
            LibraryFormulas.virtual_unordered_series(k, order)
        }
        fn virtual_unordered_raw(&self, k: u32, order: usize) -> TruncSeries {
            LibraryFormulas.virtual_unordered_raw(k, order)
        }
    }

    #[test]
    fn printed_typo_is_caught() {
        let summary = run_verify(Suite::All, &small(), &PrintedTypo).unwrap();
        assert!(!summary.passed());
        let first = summary.first_failure().unwrap();
        assert_eq!((first.space, first.k, first.n), (Some(Space::Ordered), 2, 3));
    }

    #[test]
    fn mutation_parsing() {
        let m: Mutation = "unordered-series:1:4:2:7".parse().unwrap();
        assert_eq!(m.family, Family::UnorderedSeries);
        assert_eq!((m.k, m.n, m.exponent), (1, 4, 2));
        assert_eq!(m.delta, BigInt::from(7));
        assert!("bogus:1:2:3:4".parse::<Mutation>().is_err());
        assert!("virtual-ordered:1:2:3".parse::<Mutation>().is_err());
        assert!("virtual-ordered:a:2:3:1".parse::<Mutation>().is_err());
    }

    #[test]
    fn zero_delta_is_harmless() {
        let m = MutatedFormulas {
            inner: LibraryFormulas,
            mutation: Mutation { family: Family::StandardOrdered, k: 1, n: 1, exponent: 0, delta: BigInt::from(0) },
        };
        assert!(run_verify(Suite::Duality, &small(), &m).unwrap().passed());
    }
}
