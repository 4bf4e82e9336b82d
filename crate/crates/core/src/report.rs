use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of an independent verification pass.
///
/// A verifier never aborts on the first problem; it records every violated
/// condition in order, so `failures[0]` is the first one found.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    /// Human-readable label of what was verified.
    pub subject: String,
    /// Number of individual conditions that were checked.
    pub checks: usize,
    /// Violated conditions, in the order they were found.
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerifyReport {
            subject: subject.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.failures.push(msg());
        }
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.checks += 1;
        self.failures.push(msg.into());
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "{}: pass ({} checks)", self.subject, self.checks)
        } else {
            writeln!(
                f,
                "{}: FAIL ({} of {} checks violated)",
                self.subject,
                self.failures.len(),
                self.checks
            )?;
            for failure in &self.failures {
                writeln!(f, "  - {failure}")?;
            }
            Ok(())
        }
    }
}
