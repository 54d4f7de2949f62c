//! Check results and the run report.

use std::fmt::{self, Write as _};

use serde::Serialize;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub suite: String,
    /// Acceptance criterion this check contributes to.
    pub criterion: u8,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Only recorded with `--timings`, so default reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Warn => summary.warn += 1,
                Status::Info => summary.info += 1,
            }
        }
        Report { version: REPORT_VERSION.into(), checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Checks contributing to `criterion`.
    pub fn criterion(&self, criterion: u8) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(move |c| c.criterion == criterion)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(s, "{}  {:width$}  expected {}; actual {}", c.status, c.id, c.expected, c.actual);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(s, " ({ms} ms)");
            }
            s.push('\n');
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} checks: {} pass, {} fail, {} warn, {} info",
            m.total, m.pass, m.fail, m.warn, m.info
        );
        s
    }
}
