//! Verification records shared by the library suites, the CLI and the
//! browser demo.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity at one parameter tuple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn pass(suite: &str, parameters: &[(&str, String)]) -> Self {
        Report {
            suite: suite.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Runs a check; an error becomes a failed record carrying its message.
    pub fn capture(
        suite: &str,
        parameters: &[(&str, String)],
        check: impl FnOnce() -> Result<Report>,
    ) -> Report {
        match check() {
            Ok(r) => r,
            Err(e) => {
                let mut r = Report::pass(suite, parameters);
                r.status = Status::Fail;
                r.witness = Some(e.to_string());
                r
            }
        }
    }

    /// One line: `pass suite k=v ...`.
    pub fn line(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        let mut s = format!("{status} {} {}", self.suite, params.join(" "));
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness: {w}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" ({n})"));
        }
        s
    }
}
