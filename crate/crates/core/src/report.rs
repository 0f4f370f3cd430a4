//! JSON reports emitted by the command line tool.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const TOOL: &str = "gmdeg";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A value stated in the literature being checked.
    Reference,
    /// Computed independently of the code path under test.
    Derived,
    /// Holds by construction.
    Trivial,
    /// Bookkeeping of the tool itself.
    Plumbing,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub label: String,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub records: Vec<Record>,
    pub data: Value,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            inputs: Map::new(),
            records: Vec::new(),
            data: Value::Object(Map::new()),
            status: Status::Pass,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.to_string(), to_value(value));
    }

    /// Records a check that passes iff `computed == expected`.
    pub fn check(
        &mut self,
        label: &str,
        computed: impl Serialize,
        expected: impl Serialize,
        provenance: Provenance,
    ) {
        let computed = to_value(computed);
        let expected = to_value(expected);
        let ok = computed == expected;
        self.record(label, computed, expected, provenance, ok);
    }

    /// Records a check with an explicit verdict, e.g. a range test.
    pub fn record(
        &mut self,
        label: &str,
        computed: impl Serialize,
        expected: impl Serialize,
        provenance: Provenance,
        ok: bool,
    ) {
        let status = Status::from_bool(ok);
        if status == Status::Fail {
            self.status = Status::Fail;
        }
        self.records.push(Record {
            label: label.to_string(),
            computed: to_value(computed),
            expected: to_value(expected),
            provenance,
            status,
        });
    }

    /// Sets `data[key]`.
    pub fn data(&mut self, key: &str, value: impl Serialize) {
        if let Value::Object(m) = &mut self.data {
            m.insert(key.to_string(), to_value(value));
        }
    }

    /// Appends the records of `other` with `prefix` and stores its data
    /// under `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut r in other.records {
            r.label = format!("{prefix}/{}", r.label);
            if r.status == Status::Fail {
                self.status = Status::Fail;
            }
            self.records.push(r);
        }
        self.data(prefix, other.data);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record, for standard error.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let mark = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            s.push_str(&format!("{mark} {}: {}\n", r.label, compact(&r.computed)));
        }
        let passed = self
            .records
            .iter()
            .filter(|r| r.status == Status::Pass)
            .count();
        s.push_str(&format!(
            "{} {}: {passed}/{} checks passed\n",
            self.tool,
            self.command,
            self.records.len()
        ));
        s
    }
}

fn compact(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 100 {
        let cut: String = s.chars().take(97).collect();
        format!("{cut}...")
    } else {
        s
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("value serializes")
}
