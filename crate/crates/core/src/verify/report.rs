use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The stated claim does not hold but a corrected reading does.
    Discrepancy,
    /// Hypotheses not met; nothing to check.
    NotApplicable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
            Status::NotApplicable => "N/A",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// Clause-by-clause outcome of one check. Clauses accumulate; nothing
/// short-circuits on the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub subject: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(check: impl Into<String>, subject: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            subject: subject.into(),
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, status, detail);
    }

    pub fn not_applicable(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::NotApplicable, detail);
    }

    /// No clause failed.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn merge(&mut self, other: Report) {
        for mut c in other.clauses {
            c.name = format!("{} {}: {}", other.check, other.subject, c.name);
            self.clauses.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{} {} [{verdict}]", self.check, self.subject)?;
        for c in &self.clauses {
            write!(f, "  {:<11} {}", c.status.label(), c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
