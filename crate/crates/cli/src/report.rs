use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;

/// One verified (or falsified) check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub inputs: String,
    #[serde(rename = "verdict", serialize_with = "verdict")]
    pub passed: bool,
    /// Canonical renderings of the values compared, keyed by role.
    pub values: BTreeMap<String, String>,
    pub elapsed_ms: f64,
}

fn verdict<S: serde::Serializer>(passed: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *passed { "PASS" } else { "FAIL" })
}

impl CheckRecord {
    /// Runs `f`, which returns the verdict and the values, and times it.
    pub fn timed(
        check: &str,
        inputs: impl Into<String>,
        f: impl FnOnce() -> (bool, Vec<(&'static str, String)>),
    ) -> Self {
        let start = Instant::now();
        let (passed, values) = f();
        CheckRecord {
            check: check.to_string(),
            inputs: inputs.into(),
            passed,
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn human(&self) -> String {
        let mut line = format!(
            "{} {} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.inputs
        );
        if !self.passed {
            for (k, v) in &self.values {
                line.push_str(&format!("\n    {k}: {v}"));
            }
        }
        line
    }
}

/// A named sequence of checks in a fixed order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub records: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    overall: &'static str,
    checks: usize,
    failed: usize,
}

#[derive(Serialize)]
struct Line<'a> {
    suite: &'a str,
    #[serde(flatten)]
    record: &'a CheckRecord,
}

impl Report {
    pub fn new(suite: &str, records: Vec<CheckRecord>) -> Self {
        Report {
            suite: suite.to_string(),
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    fn failed(&self) -> usize {
        self.failures().count()
    }

    /// One JSON object per check, then a summary object.
    pub fn write_json_lines(&self, out: &mut dyn Write) -> io::Result<()> {
        for record in &self.records {
            let line = Line {
                suite: &self.suite,
                record,
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
        let summary = Summary {
            suite: &self.suite,
            overall: if self.passed() { "PASS" } else { "FAIL" },
            checks: self.records.len(),
            failed: self.failed(),
        };
        writeln!(out, "{}", serde_json::to_string(&summary)?)
    }

    pub fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        for record in &self.records {
            writeln!(out, "{}", record.human())?;
        }
        let n = self.records.len();
        if self.passed() {
            writeln!(out, "{}: verified {n} of {n} checks", self.suite)
        } else {
            writeln!(
                out,
                "{}: FALSIFIED, {} of {n} checks failed",
                self.suite,
                self.failed()
            )
        }
    }
}
