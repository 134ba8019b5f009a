//! Exponents `N(ϖ_i, ϖ_j)` for all pairs of fundamental weights.

use rayon::prelude::*;
use serde::Serialize;

use prymcorr_core::correspondence::{composite_exponent, exponent_data};
use prymcorr_core::linalg::fmt_pq;
use prymcorr_core::tabulated::tabulated_exponent;
use prymcorr_core::{Rational, RootDatum, Weight};

use crate::error::RunResult;
use crate::output::csv_line;

pub const CSV_HEADER: [&str; 11] =
    ["i", "j", "scale", "stab_i", "stab_j", "norm_i", "norm_j", "n_formula", "n_brute", "paper_value", "flag"];

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub i: usize,
    pub j: usize,
    pub scale: String,
    pub stab_i: String,
    pub stab_j: String,
    /// `(ϖ_i, ϖ_i)` under the scaled form.
    pub norm_i: String,
    pub norm_j: String,
    pub n_formula: String,
    pub n_brute: Option<String>,
    pub paper_value: Option<String>,
    /// `match`, `divergent` (differs from the printed value), `brute-mismatch`
    /// (formula and brute force disagree) or `none` (nothing printed).
    pub flag: &'static str,
}

impl TableRow {
    pub fn brute_ok(&self) -> bool {
        self.flag != "brute-mismatch"
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.i.to_string(),
            self.j.to_string(),
            self.scale.clone(),
            self.stab_i.clone(),
            self.stab_j.clone(),
            self.norm_i.clone(),
            self.norm_j.clone(),
            self.n_formula.clone(),
            self.n_brute.clone().unwrap_or_default(),
            self.paper_value.clone().unwrap_or_default(),
            self.flag.to_string(),
        ]
    }
}

fn int_or_pq(q: &Rational) -> String {
    if q.is_integer() { q.to_integer().to_string() } else { fmt_pq(q) }
}

pub fn row(datum: &RootDatum, i: usize, j: usize, brute: bool) -> RunResult<TableRow> {
    let n = datum.rank();
    let wi = Weight::fundamental(i, n)?;
    let wj = Weight::fundamental(j, n)?;
    let d = exponent_data(&wi, &wj, datum)?;
    let n_brute = if brute { Some(composite_exponent(&wi, &wj, datum)?) } else { None };
    let printed = tabulated_exponent(datum.lie_type(), i, j).map(Rational::from_integer);
    let flag = match (&n_brute, &printed) {
        (Some(b), _) if *b != d.n => "brute-mismatch",
        (_, Some(p)) if *p == d.n => "match",
        (_, Some(_)) => "divergent",
        (_, None) => "none",
    };
    Ok(TableRow {
        i,
        j,
        scale: d.scale.to_string(),
        stab_i: d.stab1.to_string(),
        stab_j: d.stab2.to_string(),
        norm_i: fmt_pq(&d.norm1),
        norm_j: fmt_pq(&d.norm2),
        n_formula: int_or_pq(&d.n),
        n_brute: n_brute.as_ref().map(int_or_pq),
        paper_value: printed.as_ref().map(int_or_pq),
        flag,
    })
}

/// Every pair `i ≤ j`, in order; brute-force composition when `brute`.
pub fn exponent_table(datum: &RootDatum, brute: bool) -> RunResult<Vec<TableRow>> {
    let n = datum.rank();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    pairs.par_iter().map(|&(i, j)| row(datum, i, j, brute)).collect()
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = csv_line(&CSV_HEADER.map(String::from));
    for r in rows {
        out.push_str(&csv_line(&r.fields()));
    }
    out
}

pub fn to_text(datum: &RootDatum, rows: &[TableRow]) -> String {
    let mut cells: Vec<Vec<String>> = vec![CSV_HEADER.map(String::from).to_vec()];
    cells.extend(rows.iter().map(|r| r.fields()));
    let widths: Vec<usize> =
        (0..CSV_HEADER.len()).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = format!("exponents N(w_i, w_j) for {}\n", datum.lie_type());
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
