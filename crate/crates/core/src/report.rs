//! Structured verification results.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{fmt_pq, Rational};

/// Outcome of one claim.
///
/// `Divergent` means the computed value matches the expected one but differs
/// from the value printed in the literature; it does not fail a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    Divergent,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Divergent => "divergent",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub computed: String,
    pub expected: String,
    /// Literature value, when one is printed and differs in form or value.
    pub published: Option<String>,
    pub verdict: Verdict,
}

impl Check {
    /// A boolean claim; `computed` is free-form evidence.
    pub fn equal(claim: impl Into<String>, computed: impl ToString, ok: bool) -> Self {
        Check {
            claim: claim.into(),
            computed: computed.to_string(),
            expected: "holds".into(),
            published: None,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }

    /// Exact comparison of two rationals.
    pub fn expect(claim: impl Into<String>, computed: Rational, expected: Rational) -> Self {
        let verdict = if computed == expected { Verdict::Pass } else { Verdict::Fail };
        Check { claim: claim.into(), computed: fmt_pq(&computed), expected: fmt_pq(&expected), published: None, verdict }
    }

    /// Like [`Check::expect`], additionally comparing against a published
    /// value. A pass that disagrees with the published value is `Divergent`.
    pub fn expect_with_published(
        claim: impl Into<String>,
        computed: Rational,
        expected: Rational,
        published: Option<Rational>,
    ) -> Self {
        let mut c = Check::expect(claim, computed.clone(), expected);
        if let Some(p) = published {
            if c.verdict == Verdict::Pass && p != computed {
                c.verdict = Verdict::Divergent;
            }
            c.published = Some(fmt_pq(&p));
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.verdict.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict.is_failure())
    }

    pub fn divergences(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Divergent)
    }
}
