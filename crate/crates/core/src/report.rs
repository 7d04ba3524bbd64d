//! Check reports: the persisted record of one theorem-instance check.

use serde::{Deserialize, Serialize};

/// Result of a single check on a single instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The asserted inequality or identity holds strictly.
    Pass,
    /// It holds and an equality case occurred (tracked separately because
    /// several statements carry rigidity clauses for equality).
    Equality,
    /// The assertion failed; for theorem checks this aborts the suite.
    Fail,
    /// A conjecture check found a counterexample candidate. Certificates are
    /// findings to report, never build failures.
    Certificate,
    /// The instance does not meet the check's hypotheses.
    Skipped,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Equality | Verdict::Skipped)
    }
}

/// One line of the verification ledger.
///
/// `witness` holds both sides of every inequality that was evaluated, as
/// decimal strings (values can exceed u64). `seq` is a logical timestamp: the
/// ledger line number. Wall-clock time is deliberately absent so that reruns
/// and resumed runs are byte-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub verdict: Verdict,
    pub witness: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idx: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seq: Option<u64>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, instance: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            p: None,
            verdict: Verdict::Pass,
            witness: serde_json::Value::Null,
            idx: None,
            seq: None,
        }
    }

    pub fn with_p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = witness;
        self
    }
}
