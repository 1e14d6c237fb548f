//! Per-check verdicts with exact witnesses.
//!
//! Every verifier in this crate reports through these types; a failed check
//! carries the nonzero residual (printed in the scalar grammar) so the
//! evidence is machine-checkable.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, id: &str) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: CheckStatus::Pass,
            reason: None,
            witness: None,
        });
    }

    pub fn pass_with(&mut self, id: &str, reason: impl Into<String>) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: CheckStatus::Pass,
            reason: Some(reason.into()),
            witness: None,
        });
    }

    pub fn fail(&mut self, id: &str, reason: impl Into<String>, witness: impl Into<String>) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: CheckStatus::Fail,
            reason: Some(reason.into()),
            witness: Some(witness.into()),
        });
    }

    pub fn skip(&mut self, id: &str, reason: impl Into<String>) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            status: CheckStatus::Skipped,
            reason: Some(reason.into()),

            witness: None,
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == CheckStatus::Fail)
    }

    pub fn find(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// One cell of the K_n-grading dimension table, for report documents.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradingCell {
    pub a: u8,
    pub i: u32,
    pub j: u32,
    pub dim: usize,
}

/// Grading metadata carried alongside the checks in a report document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradingSummary {
    pub index: u32,
    pub x: u32,
    pub cells: Vec<GradingCell>,
}

/// The verification-report document written by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub algebra: String,
    pub dim: usize,
    pub cyclotomic_order: u32,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingSummary>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_roundtrip() {
        let mut r = VerificationReport::new();
        r.pass("axiom-associativity");
        r.fail("lemma-4.3", "sum nonzero at j=1", "z^2 + 1");
        r.skip("lemma-4.4", "algebra is not unimodular");
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        let doc = ReportDocument {
            algebra: "taft(3,1)".into(),
            dim: 9,
            cyclotomic_order: 6,
            checks: r.entries.clone(),
            grading: None,
        };
        let s = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&s).unwrap();
        assert_eq!(back.checks.len(), 3);
        assert_eq!(back.checks[1].witness.as_deref(), Some("z^2 + 1"));
    }
}
