use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub key: String,
    pub status: Status,
    pub details: Value,
}

/// Machine-readable outcome of a suite. A failing report always carries a
/// counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub instances: Vec<Instance>,
    pub status: Status,
    pub truncated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preamble: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl VerificationReport {
    pub fn new(suite: &str, params: Value) -> Self {
        Self {
            suite: suite.to_string(),
            params,
            instances: vec![],
            status: Status::Pass,
            truncated: false,
            preamble: None,
            counterexample: None,
        }
    }

    /// Records an instance; the first failure becomes the counterexample.
    pub fn push(&mut self, key: impl Into<String>, ok: bool, details: Value) {
        let key = key.into();
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(serde_json::json!({ "instance": key, "details": details }));
        }
        if !ok {
            self.status = Status::Fail;
        }
        self.instances.push(Instance {
            key,
            status: if ok { Status::Pass } else { Status::Fail },
            details,
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {}: {}{}\n",
            self.suite,
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            if self.truncated { " (truncated)" } else { "" }
        );
        if let Some(p) = &self.preamble {
            out.push_str(&format!("note: {p}\n"));
        }
        for i in &self.instances {
            let mark = if i.status == Status::Pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {mark} {}  {}\n", i.key, i.details));
        }
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("counterexample: {c}\n"));
        }
        out
    }
}
