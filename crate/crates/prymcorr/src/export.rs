//! JSON schemas for exported artifacts. Rationals are always `"p/q"`
//! strings; integers that fit in an `i64` are JSON numbers, larger ones are
//! decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use prymcorr_core::correspondence::CorrespondenceMatrix;
use prymcorr_core::lattice::{IntMatrix, SnfResult};
use prymcorr_core::linalg::fmt_pq;
use prymcorr_core::weyl::WeightOrbit;
use prymcorr_core::{Rational, Report, RootDatum, Weight, NORMALIZATION};

pub fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(n.to_string()),
    }
}

fn int_matrix(m: &IntMatrix) -> Vec<Vec<Value>> {
    (0..m.nrows()).map(|r| m.row(r).iter().map(int_value).collect()).collect()
}

fn weight_pq(w: &Weight) -> Vec<String> {
    w.coords().iter().map(fmt_pq).collect()
}

#[derive(Debug, Serialize)]
pub struct DatumExport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub normalization: &'static str,
    pub weyl_order: Value,
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)`.
    pub root_lengths: Vec<String>,
    /// `(ϖ_i, ϖ_j)`.
    pub gram: Vec<Vec<String>>,
}

impl DatumExport {
    pub fn new(d: &RootDatum) -> Self {
        let n = d.rank();
        DatumExport {
            lie_type: d.lie_type().to_string(),
            rank: n,
            normalization: NORMALIZATION,
            weyl_order: int_value(&BigInt::from(d.weyl_order())),
            cartan: d.cartan().to_vec(),
            root_lengths: d.symmetrizer().iter().map(|s| fmt_pq(&(s * Rational::from_integer(BigInt::from(2))))).collect(),
            gram: (0..n).map(|i| (0..n).map(|j| fmt_pq(d.gram().get(i, j))).collect()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OrbitExport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub weight: Vec<String>,
    pub size: usize,
    pub stabilizer_order: Value,
    pub labels: Vec<String>,
    pub points: Vec<Vec<String>>,
    /// Simple-reflection word `a₁…a_k` (1-based) with `λ·s_{a₁}⋯s_{a_k} = point`.
    pub witnesses: Vec<Vec<u8>>,
}

impl OrbitExport {
    pub fn new(d: &RootDatum, o: &WeightOrbit) -> Self {
        let pts = o.points();
        OrbitExport {
            lie_type: d.lie_type().to_string(),
            weight: weight_pq(o.seed()),
            size: o.len(),
            stabilizer_order: int_value(&(BigInt::from(d.weyl_order()) / BigInt::from(o.len()))),
            labels: pts.iter().map(|p| p.to_string()).collect(),
            points: pts.iter().map(weight_pq).collect(),
            witnesses: (0..o.len()).map(|i| o.witness_word(i).iter().map(|a| a + 1).collect()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MatrixExport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub normalization: &'static str,
    pub kind: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Row-major.
    pub entries: Vec<Vec<String>>,
    pub scale: Value,
    pub shift: String,
}

impl MatrixExport {
    pub fn new(d: &RootDatum, m: &CorrespondenceMatrix) -> Self {
        let e = m.entries();
        MatrixExport {
            lie_type: d.lie_type().to_string(),
            normalization: NORMALIZATION,
            kind: m.kind().as_str(),
            rows: e.nrows(),
            cols: e.ncols(),
            row_labels: m.rows().points().iter().map(|p| p.to_string()).collect(),
            col_labels: m.cols().points().iter().map(|p| p.to_string()).collect(),
            entries: (0..e.nrows()).map(|r| e.row(r).iter().map(fmt_pq).collect()).collect(),
            scale: int_value(m.scale()),
            shift: fmt_pq(m.shift()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SnfExport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub weight: Vec<String>,
    pub generators: Vec<Vec<Value>>,
    pub factors: Vec<Value>,
    pub exponent: Value,
    #[serde(rename = "U")]
    pub u: Vec<Vec<Value>>,
    #[serde(rename = "V")]
    pub v: Vec<Vec<Value>>,
    pub verified: bool,
}

impl SnfExport {
    pub fn new(d: &RootDatum, w: &Weight, gens: &IntMatrix, snf: &SnfResult, exponent: &BigInt) -> Self {
        SnfExport {
            lie_type: d.lie_type().to_string(),
            weight: weight_pq(w),
            generators: int_matrix(gens),
            factors: snf.factors.iter().map(int_value).collect(),
            exponent: int_value(exponent),
            u: int_matrix(&snf.u),
            v: int_matrix(&snf.v),
            verified: snf.verify(gens),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckExport {
    pub report: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub paper_value: Option<String>,
    pub verdict: &'static str,
}

#[derive(Debug, Serialize)]
pub struct VerifyExport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub suites: Vec<String>,
    pub normalization: &'static str,
    pub passed: bool,
    pub total: usize,
    pub failures: usize,
    pub checks: Vec<CheckExport>,
    /// Checks whose computed value differs from a printed literature value.
    pub errata: Vec<CheckExport>,
}

fn check_rows(reports: &[Report], only_divergent: bool) -> Vec<CheckExport> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(move |c| !only_divergent || c.verdict == prymcorr_core::Verdict::Divergent)
                .map(move |c| CheckExport {
                    report: r.name.clone(),
                    claim: c.claim.clone(),
                    computed: c.computed.clone(),
                    expected: c.expected.clone(),
                    paper_value: c.published.clone(),
                    verdict: c.verdict.as_str(),
                })
        })
        .collect()
}

impl VerifyExport {
    pub fn new(d: &RootDatum, suites: &[String], reports: &[Report]) -> Self {
        let checks = check_rows(reports, false);
        let failures = checks.iter().filter(|c| c.verdict == "fail").count();
        VerifyExport {
            lie_type: d.lie_type().to_string(),
            suites: suites.to_vec(),
            normalization: NORMALIZATION,
            passed: failures == 0,
            total: checks.len(),
            failures,
            checks,
            errata: check_rows(reports, true),
        }
    }
}
