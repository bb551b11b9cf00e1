//! Check results and reports in JSON and Markdown.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        CheckResult { id: id.into(), status, detail: detail.into(), witness: None }
    }

    pub fn check(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult::new(id, Status::from_bool(ok), detail)
    }

    pub fn info(id: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult::new(id, Status::Info, detail)
    }

    pub fn with_witness(mut self, w: serde_json::Value) -> Self {
        self.witness = Some(w);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub max_closure: usize,
    pub max_cosets: usize,
    pub precision_bits: u32,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_closure: 1000, max_cosets: 100_000, precision_bits: 64, seed: 20_240_101 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Config, checks: Vec<CheckResult>) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Info => summary.info += 1,
            }
        }
        Report { version: env!("CARGO_PKG_VERSION").to_string(), config, checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Verification report (v{})\n", self.version);
        let _ = writeln!(
            s,
            "pass {} / fail {} / skipped {} / info {}\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.info
        );
        let _ = writeln!(s, "| id | status | detail |");
        let _ = writeln!(s, "|---|---|---|");
        for c in &self.checks {
            let _ = writeln!(s, "| `{}` | {} | {} |", c.id, c.status.as_str(), c.detail.replace('|', "\\|"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_matches_tallies_and_round_trips() {
        let r = Report::new(
            Config::default(),
            vec![
                CheckResult::check("a", true, "ok"),
                CheckResult::check("b", false, "bad").with_witness(serde_json::json!({"x": 1})),
                CheckResult::info("c", "note"),
            ],
        );
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 0, info: 1 });
        assert!(!r.passed());
        let text = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["checks"][0].get("witness").is_none());
        assert!(r.to_markdown().contains("| `b` | fail | bad |"));
    }
}
