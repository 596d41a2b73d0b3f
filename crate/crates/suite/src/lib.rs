//! The acceptance suite: exhaustive property checks of `cwfkit-core` at
//! small bounds, each paired with an independent oracle where one exists.
//!
//! Every runner is deterministic. Reports carry counts and failure
//! descriptions but no timings, so two runs render byte-identically.

pub mod criteria;
pub mod mutation;
pub mod oracle;

use std::collections::BTreeMap;

use cwfkit_core::catalog;
use cwfkit_core::FinCat;
use serde::Serialize;

pub use criteria::{run_all, run_criterion, CRITERIA};

/// Failure descriptions kept per criterion; the total is always counted.
const FAILURE_SAMPLE: usize = 20;

/// The outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub counts: BTreeMap<String, usize>,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub(crate) fn new(id: u8, title: &'static str) -> Self {
        CriterionReport {
            id,
            title,
            passed: false,
            counts: BTreeMap::new(),
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn add(&mut self, key: impl Into<String>, n: usize) {
        *self.counts.entry(key.into()).or_default() += n;
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.failure_count += 1;
        if self.failures.len() < FAILURE_SAMPLE {
            self.failures.push(msg.into());
        }
    }

    /// Records `msg` as a failure unless `ok`.
    pub(crate) fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        self.passed = self.failure_count == 0;
        self
    }

    /// `PASS [3] title`.
    pub fn line(&self) -> String {
        format!("{} [{}] {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.title)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub bounds: usize,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.criteria {
            s.push_str(&c.line());
            s.push('\n');
            for (k, v) in &c.counts {
                s.push_str(&format!("    {k}: {v}\n"));
            }
            for n in &c.notes {
                s.push_str(&format!("    note: {n}\n"));
            }
            for f in &c.failures {
                s.push_str(&format!("    failure: {f}\n"));
            }
            if c.failure_count > c.failures.len() {
                s.push_str(&format!("    ... {} failures in total\n", c.failure_count));
            }
        }
        s.push_str(if self.passed { "suite passed\n" } else { "suite failed\n" });
        s
    }
}

fn named(list: Vec<(&'static str, FinCat)>) -> Vec<(String, FinCat)> {
    list.into_iter().map(|(n, c)| (n.to_string(), c)).collect()
}

/// Catalog categories with at most three objects.
pub fn small_categories() -> Vec<(String, FinCat)> {
    let mut out = named(catalog::suite_categories());
    out.push(("three-iso".into(), catalog::three_with_iso_pair()));
    out.push(("discrete(2)".into(), catalog::discrete(2)));
    out.push((
        "idempotent".into(),
        catalog::monoid(&[vec![0, 1], vec![1, 1]]).expect("idempotent monoid"),
    ));
    out.push((
        "parallel".into(),
        catalog::free_category(2, &[(0, 1), (0, 1)]).expect("acyclic"),
    ));
    out
}

/// Catalog categories with at most four objects.
pub fn yoneda_categories() -> Vec<(String, FinCat)> {
    let mut out = small_categories();
    out.push(("chain(3)".into(), catalog::chain(3)));
    out.push((
        "free-square".into(),
        catalog::free_category(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("acyclic"),
    ));
    out
}
