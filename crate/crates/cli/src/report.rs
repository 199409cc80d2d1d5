//! Report assembly shared by every subcommand.
//!
//! Reports are deterministic: checks land in a fixed order, JSON keys follow
//! struct declaration order, and timing fields are dropped entirely under
//! `--deterministic` so repeated runs are byte-identical.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// What the check saw: the witness value on failure, a short summary of
    /// the verified identity on success, the reason when skipped.
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub spec: Value,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Plain-text rendering: one aligned row per check.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.command));
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(5);
        for c in &self.checks {
            let time = match c.runtime_ms {
                Some(ms) => format!("  [{ms} ms]"),
                None => String::new(),
            };
            out.push_str(&format!(
                "  {:<name_w$}  {:<7}  {}{}\n",
                c.name,
                c.status.label(),
                c.witness,
                time,
            ));
        }
        let (pass, fail, skip) = self.tally();
        out.push_str(&format!(
            "{pass} passed, {fail} failed, {skip} skipped\n"
        ));
        out
    }

    fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                Status::Pass => t.0 += 1,
                Status::Fail => t.1 += 1,
                Status::Skipped => t.2 += 1,
            }
        }
        t
    }
}

/// Collects check results in execution order and owns the timing policy.
pub struct Runner {
    deterministic: bool,
    checks: Vec<CheckResult>,
}

impl Runner {
    pub fn new(deterministic: bool) -> Runner {
        Runner {
            deterministic,
            checks: Vec::new(),
        }
    }

    /// Run one check. The closure returns `(status, witness)`; library
    /// errors abort the whole suite and surface as an internal failure.
    pub fn check<F>(&mut self, name: &str, f: F) -> Result<(), String>
    where
        F: FnOnce() -> Result<(Status, String), krall_core::error::Error>,
    {
        let start = std::time::Instant::now();
        let (status, witness) =
            f().map_err(|e| format!("{name}: {e}"))?;
        let runtime_ms = if self.deterministic {
            None
        } else {
            Some(start.elapsed().as_millis() as u64)
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            status,
            witness,
            runtime_ms,
        });
        Ok(())
    }

    pub fn passed_so_far(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn skip(&mut self, name: &str, why: &str) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: Status::Skipped,
            witness: why.to_string(),
            runtime_ms: None,
        });
    }

    pub fn finish(self, command: String, spec: Value) -> VerificationReport {
        VerificationReport {
            command,
            spec,
            checks: self.checks,
        }
    }
}

/// Shorthand for the common pass/fail split on a boolean condition.
pub fn verdict(ok: bool, pass_note: String, fail_note: String) -> (Status, String) {
    if ok {
        (Status::Pass, pass_note)
    } else {
        (Status::Fail, fail_note)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_runs_drop_timing() {
        let mut r = Runner::new(true);
        r.check("demo", || Ok((Status::Pass, "ok".into()))).unwrap();
        let report = r.finish("verify x".into(), Value::Null);
        assert!(report.passed());
        assert!(report.checks[0].runtime_ms.is_none());
        assert!(!report.to_json().contains("runtime_ms"));
    }

    #[test]
    fn failed_check_fails_report() {
        let mut r = Runner::new(false);
        r.check("bad", || Ok((Status::Fail, "witness".into())))
            .unwrap();
        r.skip("later", "skipped after failure");
        let report = r.finish("verify y".into(), Value::Null);
        assert!(!report.passed());
        let table = report.to_table();
        assert!(table.contains("1 passed") || table.contains("0 passed"));
        assert!(table.contains("1 failed, 1 skipped"));
    }
}
