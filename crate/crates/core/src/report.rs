//! Report plumbing shared by the verification routines.
//!
//! Every report serializes through [`serde_json::Value`], whose maps are
//! sorted, so emitted JSON has a canonical key order and re-serializing a
//! parsed report reproduces it byte for byte.

use serde::Serialize;
use serde_json::Value;

/// Outcome of one named family of exact checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<Value>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

/// Failures listed past this count are summarized, not stored.
pub const MAX_FAILURES: usize = 20;

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            checked: 0,
            failures: Vec::new(),
            details: Value::Null,
        }
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, failure: Value) {
        self.passed = false;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(failure);
        }
    }

    /// Records one check: a failure payload is built only when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Value) {
        self.tick();
        if !ok {
            self.fail(failure());
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        for f in other.failures {
            self.fail(f);
        }
        self.passed &= other.passed;
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(x)).expect("value serializes");
    s.push('\n');
    s
}
