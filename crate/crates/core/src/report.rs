//! Running manifests and rendering the results.
//!
//! The JSON form is the machine contract: fields appear in a fixed order and nothing
//! time-dependent is emitted unless timings are requested.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::checks::execute;
use crate::manifest::Manifest;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Matched `expect`.
    Pass,
    /// Did not match `expect`.
    Fail,
    /// No expectation given.
    Computed,
    Error,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: String,
    pub target: String,
    pub inputs: Value,
    pub status: Status,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub computed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timings: bool,
    pub skip_expensive: bool,
}

pub fn run_manifest(manifest: &Manifest, options: RunOptions) -> Report {
    let mut checks = Vec::with_capacity(manifest.checks.len());
    for (index, entry) in manifest.checks.iter().enumerate() {
        let inputs = serde_json::to_value(&entry.spec).unwrap_or(Value::Null);
        let mut record = CheckRecord {
            index,
            name: entry.name.clone(),
            kind: entry.spec.kind().to_string(),
            target: entry.target().to_string(),
            inputs,
            status: Status::Skipped,
            value: Value::Null,
            expected: entry.expect.clone(),
            witness: None,
            detail: None,
            error: None,
            millis: None,
        };
        if entry.expensive && options.skip_expensive {
            record.detail = Some("skipped: flagged expensive".into());
            checks.push(record);
            continue;
        }
        let start = Instant::now();
        let result = execute(manifest, entry);
        if options.timings {
            record.millis = Some(start.elapsed().as_millis() as u64);
        }
        match result {
            Ok(out) => {
                record.status = match &entry.expect {
                    None => Status::Computed,
                    Some(e) if *e == out.value => Status::Pass,
                    Some(_) => Status::Fail,
                };
                record.value = out.value;
                record.witness = out.witness;
                record.detail = out.detail;
            }
            Err(e) => {
                record.status = Status::Error;
                record.error = Some(e.to_string());
            }
        }
        checks.push(record);
    }
    Report::new(None, checks)
}

impl Report {
    pub fn new(title: Option<String>, checks: Vec<CheckRecord>) -> Self {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Computed => summary.computed += 1,
                Status::Error => summary.errors += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { title, checks, summary }
    }

    pub fn merge(title: Option<String>, reports: Vec<Report>) -> Self {
        let mut checks = Vec::new();
        for r in reports {
            for mut c in r.checks {
                c.index = checks.len();
                checks.push(c);
            }
        }
        Report::new(title, checks)
    }

    pub fn all_ok(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    /// 0 when nothing failed or errored, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(t) = &self.title {
            let _ = writeln!(out, "{t}");
        }
        let _ = writeln!(out, "{:>4}  {:<15} {:<12} {:<9} value", "#", "kind", "target", "status");
        for c in &self.checks {
            let status = serde_json::to_value(c.status).unwrap();
            let mut value = match (&c.error, &c.value) {
                (Some(e), _) => e.clone(),
                (None, v) => v.to_string(),
            };
            if value.chars().count() > 60 {
                value = value.chars().take(57).collect::<String>() + "...";
            }
            let kind = c.name.as_deref().unwrap_or(&c.kind);
            let _ = writeln!(
                out,
                "{:>4}  {:<15} {:<12} {:<9} {}",
                c.index,
                truncate(kind, 15),
                truncate(&c.target, 12),
                status.as_str().unwrap(),
                value
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} errors, {} computed, {} skipped",
            s.total, s.passed, s.failed, s.errors, s.computed, s.skipped
        );
        out
    }
}

fn truncate(s: &str, n: usize) -> String {
    if s.chars().count() <= n {
        s.to_string()
    } else {
        s.chars().take(n - 1).collect::<String>() + "~"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_check_passes() {
        let text = r#"
p = 2
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]

[[check]]
kind = "member"
element = "x^2"
ideal = ["y^2", "z^2"]
expect = true

[[check]]
kind = "ainv"
expect = 0
"#;
        let m = Manifest::parse(text).unwrap();
        let r = run_manifest(&m, RunOptions::default());
        assert_eq!(r.checks[0].status, Status::Pass);
        assert_eq!(r.checks[1].status, Status::Fail);
        assert_eq!(r.checks[1].value, Value::from(-1));
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.to_json(), run_manifest(&m, RunOptions::default()).to_json());
        assert!(!r.to_json().contains("millis"));
    }

    #[test]
    fn empty_report() {
        let r = run_manifest(&Manifest::parse("").unwrap(), RunOptions::default());
        assert_eq!(r.summary.total, 0);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn errors_do_not_abort_the_run() {
        let text = r#"
p = 3
vars = ["x", "y"]

[[check]]
kind = "member"
element = "x^"
ideal = ["y"]

[[check]]
kind = "member"
element = "x*y"
ideal = ["y"]
expect = true
"#;
        let r = run_manifest(&Manifest::parse(text).unwrap(), RunOptions::default());
        assert_eq!(r.checks[0].status, Status::Error);
        assert_eq!(r.checks[1].status, Status::Pass);
    }
}
