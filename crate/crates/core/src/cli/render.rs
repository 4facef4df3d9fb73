//! Text rendering of tables and series: CSV, JSON and LaTeX.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::PyramidalTable;
use crate::ring::{LaurentPoly, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Latex,
}

/// One row of a polynomial table. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRow {
    pub k: u32,
    pub n: usize,
    /// Betti numbers `rk H^0..` (standard polynomials only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<String>>,
    /// Dense coefficients, index = exponent of `x` (virtual polynomials only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<String>>,
    /// Canonical rendering.
    pub poly: String,
}

impl PolyRow {
    pub fn new(k: u32, n: usize, poly: &LaurentPoly, as_ranks: bool) -> Self {
        let dense: Vec<String> = poly.to_dense().expect("polynomial").iter().map(BigInt::to_string).collect();
        let (ranks, coeffs) = if as_ranks {
            // Pad to n + 1 entries: ranks above the top nonzero one are zero.
            let mut dense = dense;
            if dense.len() < n + 1 {
                dense.resize(n + 1, "0".to_string());
            }
            (Some(dense), None)
        } else {
            (None, Some(dense))
        };
        Self { k, n, ranks, coeffs, poly: poly.to_string() }
    }

    /// Rebuilds the polynomial from the dense coefficient list.
    pub fn to_poly(&self) -> Result<LaurentPoly, String> {
        let dense = self.ranks.as_ref().or(self.coeffs.as_ref()).ok_or("row has no coefficients")?;
        let values = dense
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("{s}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(values))
    }
}

/// The pyramidal table: rows `k = -1..=max_k`, columns `i = 0..=max_i`.
pub fn render_pyramidal(table: &PyramidalTable, format: OutputFormat) -> String {
    let cols = 0..=table.max_i();
    let rows = -1..=table.max_k();
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push('k');
            for i in cols.clone() {
                write!(out, ",{i}").unwrap();
            }
            out.push('\n');
            for k in rows {
                write!(out, "{k}").unwrap();
                for v in table.row(k) {
                    write!(out, ",{v}").unwrap();
                }
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            let json: Vec<serde_json::Value> = rows
                .map(|k| {
                    let values: Vec<String> = table.row(k).iter().map(BigInt::to_string).collect();
                    serde_json::json!({ "k": k, "values": values })
                })
                .collect();
            out = serde_json::to_string_pretty(&json).expect("serializable");
            out.push('\n');
        }
        OutputFormat::Latex => {
            writeln!(out, "\\begin{{tabular}}{{c|{}}}", "c".repeat(table.max_i() + 1)).unwrap();
            out.push_str("\\diagbox{k}{i}");
            for i in cols {
                write!(out, " & {i}").unwrap();
            }
            out.push_str(" \\\\\n\\midrule\n");
            for k in rows {
                write!(out, "{k}").unwrap();
                for v in table.row(k) {
                    write!(out, " & {v}").unwrap();
                }
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

/// A table of polynomials, one row per `(k, n)`.
pub fn render_poly_rows(rows: &[PolyRow], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            let width = rows
                .iter()
                .map(|r| r.ranks.as_ref().or(r.coeffs.as_ref()).map_or(0, Vec::len))
                .max()
                .unwrap_or(0);
            out.push_str("k,n,poly");
            for e in 0..width {
                write!(out, ",c{e}").unwrap();
            }
            out.push('\n');
            for r in rows {
                write!(out, "{},{},{}", r.k, r.n, r.poly).unwrap();
                let dense = r.ranks.as_ref().or(r.coeffs.as_ref()).map_or(&[][..], Vec::as_slice);
                for e in 0..width {
                    write!(out, ",{}", dense.get(e).map_or("0", String::as_str)).unwrap();
                }
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            out = serde_json::to_string_pretty(rows).expect("serializable");
            out.push('\n');
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{tabular}{cc|l}\nk & n & polynomial \\\\\n\\midrule\n");
            for r in rows {
                let poly: LaurentPoly = r.poly.parse().expect("canonical form parses");
                writeln!(out, "{} & {} & ${}$ \\\\", r.k, r.n, latex_poly(&poly)).unwrap();
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

/// Canonical form with braced exponents, e.g. `x^{12}-3x^{2}+1`.
pub fn latex_poly(p: &LaurentPoly) -> String {
    let plain = p.to_string();
    let mut out = String::with_capacity(plain.len() + 8);
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            if chars.peek() == Some(&'-') {
                out.push(chars.next().unwrap());
            }
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

/// One canonical polynomial per line, `y^0` first.
pub fn render_series(series: &TruncSeries) -> String {
    let mut out = String::new();
    for c in series.coeffs() {
        writeln!(out, "{c}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pyramidal_csv_matches_printed_table() {
        let table = PyramidalTable::new(3, 4).unwrap();
        let csv = render_pyramidal(&table, OutputFormat::Csv);
        let expected = "k,0,1,2,3,4\n-1,1,0,0,0,0\n0,1,1,1,1,1\n1,1,2,3,4,5\n2,1,3,6,10,15\n3,1,4,10,20,35\n";
        assert_eq!(csv, expected);
    }

    #[test]
    fn pyramidal_latex_layout() {
        let table = PyramidalTable::new(0, 2).unwrap();
        let tex = render_pyramidal(&table, OutputFormat::Latex);
        assert_eq!(
            tex,
            "\\begin{tabular}{c|ccc}\n\\diagbox{k}{i} & 0 & 1 & 2 \\\\\n\\midrule\n-1 & 1 & 0 & 0 \\\\\n0 & 1 & 1 & 1 \\\\\n\\end{tabular}\n"
        );
    }

    #[test]
    fn latex_exponents_are_braced() {
        let p: LaurentPoly = "x^12-3x^2+x-1".parse().unwrap();
        assert_eq!(latex_poly(&p), "x^{12}-3x^{2}+x-1");
    }

    #[test]
    fn rows_pad_ranks() {
        let p: LaurentPoly = "x+1".parse().unwrap();
        let row = PolyRow::new(0, 3, &p, true);
        assert_eq!(row.ranks.as_ref().unwrap(), &["1", "1", "0", "0"]);
        assert_eq!(row.to_poly().unwrap(), p);
    }
}
