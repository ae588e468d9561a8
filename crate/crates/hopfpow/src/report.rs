//! Structured pass/fail reports for verification runs.

use serde::Serialize;
use std::fmt;

/// Outcome of one named check, with free-form supporting detail lines.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            details: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            details: vec![detail.into()],
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.details.push(detail.into());
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}", self.name)?;
        for d in &self.details {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

/// A batch of check reports with an aggregate verdict.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReportSet {
    pub reports: Vec<CheckReport>,
}

impl ReportSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: CheckReport) {
        self.reports.push(r);
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> Vec<&CheckReport> {
        self.reports.iter().filter(|r| !r.passed).collect()
    }
}

impl fmt::Display for ReportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        let failed = self.reports.iter().filter(|r| !r.passed).count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.reports.len(),
            self.reports.len() - failed,
            failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregates_and_formats() {
        let mut set = ReportSet::new();
        set.push(CheckReport::pass("alpha"));
        set.push(CheckReport::fail("beta", "expected 1, got 2").with_detail("context"));
        assert!(!set.all_passed());
        assert_eq!(set.failures().len(), 1);
        let text = set.to_string();
        assert!(text.contains("[PASS] alpha"));
        assert!(text.contains("[FAIL] beta"));
        assert!(text.contains("expected 1, got 2"));
        assert!(text.contains("2 checks, 1 passed, 1 failed"));
    }
}
