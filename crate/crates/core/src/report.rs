//! Machine-readable pass/fail records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    /// A monitored (conjectural) predicate failed; never counted as a failure.
    Discovery,
}

/// One claim evaluated on one instance, with both sides of the comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub instance: String,
    pub status: Status,
    pub detail: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn new(claim_id: &str, instance: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            instance: instance.into(),
            status: Status::Pass,
            detail: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.detail.insert(key.to_string(), value.to_string());
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    /// Pass iff `ok`, recording the verdict in the detail map as well.
    pub fn check(self, ok: bool) -> Self {
        self.with("holds", ok)
            .status(if ok { Status::Pass } else { Status::Fail })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
