use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::io::RhoEntry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// Worst deviation seen; for inequalities the worst violation, for
    /// boolean checks 0 or 1.
    pub max_error: f64,
    pub tolerance: f64,
    /// A supporting quantity such as a least-squares residual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed: Option<f64>,
    /// Inputs of the worst failing trial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseReport {
    pub group: String,
    pub subgroup: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub index: usize,
    pub is_normal: bool,
    pub has_identity: bool,
    pub has_right_identity: bool,
    pub has_left_identity_l1: bool,
    /// `verified`, `obstructed` or `failed`.
    pub involution: String,
    pub rho: Vec<RhoEntry>,
    pub checks: Vec<CheckResult>,
}

impl CaseReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub tolerance: f64,
    pub trials: usize,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(seed: u64, tolerance: f64, trials: usize, cases: Vec<CaseReport>) -> Self {
        let (pass, fail) = cases
            .iter()
            .flat_map(|c| &c.checks)
            .fold((0, 0), |(p, f), c| if c.passed() { (p + 1, f) } else { (p, f + 1) });
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            tolerance,
            trials,
            cases,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Accumulates the worst error over trials and keeps the witness of the
/// worst failing one.
pub(crate) struct Tracker {
    tolerance: f64,
    max_error: f64,
    observed: Option<f64>,
    witness: Option<Value>,
}

impl Tracker {
    pub(crate) fn new(tolerance: f64) -> Self {
        Tracker {
            tolerance,
            max_error: 0.0,
            observed: None,
            witness: None,
        }
    }

    /// NaN counts as a failure.
    pub(crate) fn record(&mut self, error: f64, witness: impl FnOnce() -> Value) {
        let error = if error.is_nan() { f64::INFINITY } else { error };
        if error > self.max_error {
            self.max_error = error;
            if error > self.tolerance {
                self.witness = Some(witness());
            }
        }
    }

    /// A violation of `lhs <= rhs`.
    pub(crate) fn record_le(&mut self, lhs: f64, rhs: f64, witness: impl FnOnce() -> Value) {
        self.record((lhs - rhs).max(0.0), witness);
    }

    pub(crate) fn record_bool(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.record(if ok { 0.0 } else { 1.0 }, witness);
    }

    pub(crate) fn observe(&mut self, value: f64) {
        self.observed = Some(value);
    }

    pub(crate) fn finish(self, id: &str) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: if self.max_error <= self.tolerance { Status::Pass } else { Status::Fail },
            max_error: self.max_error,
            tolerance: self.tolerance,
            observed: self.observed,
            witnesses: self.witness,
            elapsed_ms: None,
        }
    }
}
