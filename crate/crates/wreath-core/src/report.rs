//! Structured check reports.
//!
//! Every verification routine in this crate returns a [`Report`]: a list of
//! named checks, each with an expected value, an observed value, and a
//! [`Status`]. Rendering (text tables, JSON) lives in the CLI crate; this
//! module only defines the data and the status lattice.

use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of a single check.
///
/// `Fail` is reserved for internal errors: the tool claimed something about
/// its own computation and the computation disagreed. When a computed value
/// contradicts a published claim the check is a `Discrepancy`, not a failure;
/// the computation itself is trusted. `Warn` marks degenerate parameters or
/// ambiguous readings that were resolved by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Warn,
    Discrepancy,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
            Status::Discrepancy => "discrepancy",
            Status::Fail => "fail",
        }
    }

    /// Combine two statuses, keeping the more severe one.
    pub fn worst(self, other: Status) -> Status {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One line of a report: a named comparison between an expected and an
/// observed value, with the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        status: Status,
    ) -> Self {
        Check {
            name: name.into(),
            expected: expected.into(),
            observed: observed.into(),
            status,
        }
    }

    /// A check that passes iff `expected == observed`, failing with the
    /// given severity otherwise.
    pub fn compare<T: PartialEq + core::fmt::Display>(
        name: impl Into<String>,
        expected: T,
        observed: T,
        on_mismatch: Status,
    ) -> Self {
        let status = if expected == observed {
            Status::Pass
        } else {
            on_mismatch
        };
        Check {
            name: name.into(),
            expected: alloc::format!("{expected}"),
            observed: alloc::format!("{observed}"),
            status,
        }
    }
}

/// A full report: what was verified, for which product, and the outcome of
/// every individual check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// What kind of verification this is, e.g. `"catalog"` or `"monolith"`.
    pub subject: String,
    /// The product description the verification ran against, e.g. `"S3*S3"`.
    pub spec: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>, spec: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            spec: spec.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// The most severe status among all checks; `Pass` for an empty report.
    pub fn worst_status(&self) -> Status {
        self.checks
            .iter()
            .fold(Status::Pass, |acc, c| acc.worst(c.status))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_ordering_is_by_severity() {
        assert!(Status::Pass < Status::Warn);
        assert!(Status::Warn < Status::Discrepancy);
        assert!(Status::Discrepancy < Status::Fail);
        assert_eq!(Status::Pass.worst(Status::Discrepancy), Status::Discrepancy);
        assert_eq!(Status::Fail.worst(Status::Warn), Status::Fail);
    }

    #[test]
    fn worst_status_scans_all_checks() {
        let mut r = Report::new("t", "S3*S3");
        assert_eq!(r.worst_status(), Status::Pass);
        r.push(Check::new("a", "1", "1", Status::Pass));
        r.push(Check::new("b", "2", "3", Status::Warn));
        assert_eq!(r.worst_status(), Status::Warn);
        r.push(Check::new("c", "4", "5", Status::Discrepancy));
        assert_eq!(r.worst_status(), Status::Discrepancy);
    }

    #[test]
    fn compare_builds_pass_and_mismatch_rows() {
        let ok = Check::compare("n", 7, 7, Status::Fail);
        assert_eq!(ok.status, Status::Pass);
        let bad = Check::compare("n", 7, 8, Status::Discrepancy);
        assert_eq!(bad.status, Status::Discrepancy);
        assert_eq!(bad.expected, "7");
        assert_eq!(bad.observed, "8");
    }
}
