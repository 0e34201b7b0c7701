//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub max_violation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    /// Passes when `violation ≤ tol`; a failure keeps `witness`.
    pub fn bounded(name: impl Into<String>, violation: f64, tol: f64, witness: Option<Value>) -> Self {
        let status = if violation <= tol { Status::Pass } else { Status::Fail };
        Check {
            name: name.into(),
            status,
            max_violation: violation,
            witness: if status == Status::Fail { witness } else { None },
        }
    }

    /// Passes when `ok`; failures must name a witness.
    pub fn boolean(name: impl Into<String>, ok: bool, witness: Value) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            max_violation: if ok { 0.0 } else { 1.0 },
            witness: if ok { None } else { Some(witness) },
        }
    }

    pub fn skipped(name: impl Into<String>, reason: &str) -> Self {
        Check { name: name.into(), status: Status::Skipped, max_violation: 0.0, witness: Some(Value::from(reason)) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<f64>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            seed,
            output: None,
            timing: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.into(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} (seed {})\n", self.command, self.seed);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(s, "{tag} {} (max violation {:.3e})", c.name, c.max_violation);
            if let Some(w) = &c.witness {
                let _ = write!(s, " witness: {w}");
            }
            s.push('\n');
        }
        if let Some(out) = &self.output {
            let _ = writeln!(s, "output: {out}");
        }
        if let Some(t) = self.timing {
            let _ = writeln!(s, "time: {t:.3}s");
        }
        let _ = write!(s, "{}", if self.passed() { "all checks passed" } else { "some checks failed" });
        s
    }
}
