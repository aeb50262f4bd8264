//! Claim reports and their text and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// The worse of two statuses: fail beats inconclusive beats pass.
    pub fn combine(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }
}

/// Evidence attached to a report: basis indices and coordinate vectors
/// (entries 0, 1, 2).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub note: String,
    pub indices: Vec<usize>,
    pub vectors: Vec<Vec<u8>>,
}

/// One named sub-check of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub paper_anchor: String,
    pub n: u32,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witness: Option<Witness>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

pub fn overall_status(reports: &[ClaimReport]) -> Status {
    reports.iter().fold(Status::Pass, |s, r| s.combine(r.status))
}

pub fn to_json(reports: &[ClaimReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<Vec<ClaimReport>> {
    serde_json::from_str(text)
}

pub fn to_text(reports: &[ClaimReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "{} | n={} | {} | {} | seed={} | {} ms",
            r.claim_id,
            r.n,
            r.paper_anchor,
            r.status.as_str().to_uppercase(),
            r.seed,
            r.elapsed_ms
        );
        for c in &r.checks {
            let _ = writeln!(out, "    [{}] {}: {}", c.status.as_str(), c.name, c.detail);
        }
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "    witness: {}", w.note);
            if !w.indices.is_empty() {
                let _ = writeln!(out, "      indices: {:?}", w.indices);
            }
            for v in &w.vectors {
                let _ = writeln!(out, "      vector: {:?}", v);
            }
        }
    }
    let _ = writeln!(out, "overall: {}", overall_status(reports).as_str().to_uppercase());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> ClaimReport {
        ClaimReport {
            claim_id: "c".into(),
            paper_anchor: "a".into(),
            n: 1,
            status,
            checks: vec![Check { name: "x".into(), status, detail: "d".into() }],
            witness: None,
            seed: 0,
            elapsed_ms: 5,
        }
    }

    #[test]
    fn status_order() {
        assert_eq!(Status::Pass.combine(Status::Inconclusive), Status::Inconclusive);
        assert_eq!(Status::Fail.combine(Status::Inconclusive), Status::Fail);
        assert_eq!(overall_status(&[]), Status::Pass);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let reports = vec![sample(Status::Pass), sample(Status::Fail)];
        let text = to_json(&reports);
        assert_eq!(to_json(&from_json(&text).unwrap()), text);
        assert!(text.find("\"claim_id\"").unwrap() < text.find("\"elapsed_ms\"").unwrap());
    }
}
