//! Machine-readable findings: one JSON object per line, summary last.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub suite: String,
    #[serde(rename = "item-id")]
    pub item_id: String,
    pub status: Status,
    pub detail: Value,
    pub anchor: String,
}

impl Finding {
    pub fn new(suite: &str, item_id: impl Into<String>, ok: bool, detail: Value, anchor: &str) -> Self {
        Finding {
            suite: suite.to_string(),
            item_id: item_id.into(),
            status: Status::from_bool(ok),
            detail,
            anchor: anchor.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, f: Finding) {
        self.findings.push(f);
    }

    pub fn extend(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }

    pub fn all_pass(&self) -> bool {
        self.findings.iter().all(Finding::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.passed())
    }

    pub fn get(&self, item_id: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.item_id == item_id)
    }

    pub fn summary(&self) -> Value {
        let passed = self.findings.iter().filter(|f| f.passed()).count();
        json!({
            "summary": true,
            "total": self.findings.len(),
            "passed": passed,
            "failed": self.findings.len() - passed,
            "status": if self.all_pass() { "pass" } else { "fail" },
        })
    }

    /// Findings as JSON lines followed by the summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            out.push_str(&serde_json::to_string(f).expect("finding serializes"));
            out.push('\n');
        }
        out.push_str(&self.summary().to_string());
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_is_last_and_keys_are_stable() {
        let mut r = Report::new();
        r.push(Finding::new("s", "a", true, json!({}), "x"));
        r.push(Finding::new("s", "b", false, json!({"n": 3}), "y"));
        let text = r.to_json_lines();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        let first: Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["item-id"], "a");
        assert_eq!(first["status"], "pass");
        let last: Value = serde_json::from_str(lines[2]).unwrap();
        assert_eq!(last["failed"], 1);
        assert!(!r.all_pass());
    }
}
