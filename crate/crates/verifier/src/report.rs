use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub id: String,
    pub instances: u64,
    pub passed: u64,
    /// First failing instance in generation order, after shrinking.
    pub counterexample: Option<Value>,
    pub elapsed_ms: u64,
    pub seed: u64,
    /// Side counts such as strict inequalities or comparable pairs seen.
    pub observations: BTreeMap<String, u64>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none() && self.passed == self.instances
    }
}

/// A single check: `Err` carries the serialized counterexample.
pub type Check = Result<(), Value>;

#[derive(Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub passed: u64,
    pub counterexample: Option<Value>,
    pub observations: BTreeMap<String, u64>,
}

impl Tally {
    pub fn record(&mut self, check: Check) {
        self.instances += 1;
        match check {
            Ok(()) => self.passed += 1,
            Err(cx) => {
                self.counterexample.get_or_insert(cx);
            }
        }
    }

    pub fn absorb<I: IntoIterator<Item = Check>>(&mut self, checks: I) {
        for c in checks {
            self.record(c);
        }
    }

    pub fn note(&mut self, key: impl Into<String>, count: u64) {
        *self.observations.entry(key.into()).or_default() += count;
    }
}
