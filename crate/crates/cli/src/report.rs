use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unsupported => "unsupported",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Process exit code for an overall status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 2,
            Status::Unsupported => 3,
        }
    }
}

/// Exit code for configuration and parse errors.
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Debug)]
pub struct Item {
    pub name: String,
    pub status: Status,
    /// Certificate, counterexample, or the structural argument used.
    pub detail: Value,
    pub elapsed_ms: Option<f64>,
}

impl Item {
    pub fn new(name: impl Into<String>, status: Status, detail: Value) -> Self {
        Item {
            name: name.into(),
            status,
            detail,
            elapsed_ms: None,
        }
    }

    /// Skipped for lack of a model capability.
    pub fn unsupported(name: impl Into<String>, capability: &str, reason: impl Into<String>) -> Self {
        Item::new(
            name,
            Status::Unsupported,
            json!({"capability": capability, "reason": reason.into()}),
        )
    }
}

#[derive(Clone, Debug)]
pub struct CheckSuiteResult {
    pub suite: String,
    pub system: Value,
    pub items: Vec<Item>,
}

impl CheckSuiteResult {
    /// Any failure fails the suite; otherwise any unsupported item makes it
    /// unsupported.
    pub fn status(&self) -> Status {
        let any = |st| self.items.iter().any(|i| i.status == st);
        if any(Status::Fail) {
            Status::Fail
        } else if any(Status::Unsupported) {
            Status::Unsupported
        } else {
            Status::Pass
        }
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let items: Vec<Value> = self
            .items
            .iter()
            .map(|i| {
                let mut v = json!({"name": i.name, "status": i.status.as_str(), "detail": i.detail});
                if let (true, Some(ms)) = (timings, i.elapsed_ms) {
                    v["elapsed_ms"] = json!(ms);
                }
                v
            })
            .collect();
        json!({
            "schema_version": 1,
            "suite": self.suite,
            "system": self.system,
            "status": self.status().as_str(),
            "items": items,
        })
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .items
            .iter()
            .map(|i| format!("{:<11} {}", i.status.as_str(), i.name))
            .collect();
        let counts = [Status::Pass, Status::Fail, Status::Unsupported]
            .map(|st| self.items.iter().filter(|i| i.status == st).count());
        lines.push(format!(
            "{}: {} ({} pass, {} fail, {} unsupported)",
            self.suite,
            self.status().as_str(),
            counts[0],
            counts[1],
            counts[2]
        ));
        lines
    }
}
