//! Machine-readable campaign reports. Items are a deterministic fold of the
//! campaign's obligations; `pass` is true only when every item passed.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportItem {
    pub kind: String,
    pub subject: String,
    pub outcome: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

impl ReportItem {
    pub fn check(kind: &str, subject: &str, pass: bool, outcome: String) -> ReportItem {
        ReportItem {
            kind: kind.to_string(),
            subject: subject.to_string(),
            outcome: if outcome.is_empty() {
                if pass { "ok".to_string() } else { "failed".to_string() }
            } else {
                outcome
            },
            pass,
            witness: None,
            nodes: None,
        }
    }

    pub fn with_witness(mut self, witness: Vec<String>) -> ReportItem {
        self.witness = Some(witness);
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> ReportItem {
        self.nodes = Some(nodes);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub pass: bool,
    pub items: Vec<ReportItem>,
    /// Wall time; excluded from report comparisons.
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(claim: &str, target: Option<&str>) -> Report {
        Report {
            claim: claim.to_string(),
            target: target.map(|s| s.to_string()),
            pass: true,
            items: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, item: ReportItem) {
        self.pass &= item.pass;
        self.items.push(item);
    }

    /// Recompute the pass flag from the items.
    pub fn finish(&mut self) {
        self.pass = self.items.iter().all(|i| i.pass);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Equality that ignores timing fields.
    pub fn same_content(&self, other: &Report) -> bool {
        self.claim == other.claim
            && self.target == other.target
            && self.pass == other.pass
            && self.items == other.items
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "claim {}{}: {}",
            self.claim,
            self.target
                .as_deref()
                .map(|t| format!(" (target {})", t))
                .unwrap_or_default(),
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        for item in &self.items {
            write!(
                f,
                "  [{}] {:<12} {} -- {}",
                if item.pass { "ok" } else { "XX" },
                item.kind,
                item.subject,
                item.outcome
            )?;
            if let Some(w) = &item.witness {
                write!(f, " [witness: {}]", w.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
