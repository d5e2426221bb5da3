//! JSON reports.

use serde::Serialize;
use serde_json::Value;

pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub measured: Value,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Check {
    pub fn new(id: impl Into<String>, pass: bool, measured: Value, expected: Value) -> Self {
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            measured,
            expected,
            note: None,
            runtime_ms: None,
        }
    }

    pub fn skip(id: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Skip,
            measured: Value::Null,
            expected: Value::Null,
            note: Some(note.into()),
            runtime_ms: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub format_version: u32,
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteReport { format_version: FORMAT_VERSION, suite: suite.into(), checks }
    }

    /// No executed check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn strip_timing(&mut self) {
        self.checks.iter_mut().for_each(|c| c.runtime_ms = None);
    }
}

/// `{tool_version, command, params, results, runtime_ms}`.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool_version: &'static str,
    pub command: String,
    pub params: Value,
    pub results: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, params: Value, results: T, runtime_ms: Option<u64>) -> Self {
        Envelope { tool_version: TOOL_VERSION, command: command.into(), params, results, runtime_ms }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
