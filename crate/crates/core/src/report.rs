//! Machine-readable verification reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One checked relation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub kind: String,
    pub paper_anchor: String,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u64,
    /// Constructed objects attached by directives, e.g. representation
    /// matrices as canonical strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Entry {
    pub fn pass(id: impl Into<String>, kind: impl Into<String>, anchor: impl Into<String>) -> Entry {
        Entry {
            id: id.into(),
            kind: kind.into(),
            paper_anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
            ms: 0,
            data: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        kind: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<String>,
    ) -> Entry {
        Entry {
            status: Status::Fail,
            witness: Some(witness.into()),
            ..Entry::pass(id, kind, anchor)
        }
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Entry {
        self.data = Some(data);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<Entry>,
}

#[derive(Serialize)]
struct Wire<'a> {
    status: Status,
    entries: &'a [Entry],
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn status(&self) -> Status {
        if self.entries.iter().all(Entry::passed) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        let wire = Wire {
            status: self.status(),
            entries: &self.entries,
        };
        serde_json::to_string_pretty(&wire).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(out, "{} {} [{}]", e.status.as_str().to_uppercase(), e.id, e.paper_anchor);
            if e.ms > 0 {
                let _ = write!(out, " {}ms", e.ms);
            }
            out.push('\n');
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "    witness: {w}");
            }
            if let Some(d) = &e.data {
                let _ = writeln!(out, "    data: {d}");
            }
        }
        let passed = self.entries.iter().filter(|e| e.passed()).count();
        let _ = writeln!(out, "status: {} ({}/{} passed)", self.status().as_str(), passed, self.entries.len());
        out
    }
}

impl FromIterator<Entry> for Report {
    fn from_iter<I: IntoIterator<Item = Entry>>(iter: I) -> Self {
        Report {
            entries: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = Report::new();
        assert!(r.passed());
        assert!(r.to_json().contains("\"status\": \"pass\""));
    }

    #[test]
    fn failing_entry_carries_anchor() {
        let mut r = Report::new();
        r.push(Entry::pass("a", "identity", "sl2-commutation"));
        r.push(Entry::fail("b", "identity", "quadratic-algebra", "dy: 1 vs 2"));
        assert_eq!(r.status(), Status::Fail);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["entries"][1]["paper_anchor"], "quadratic-algebra");
        assert_eq!(v["entries"][1]["witness"], "dy: 1 vs 2");
        assert!(v["entries"][0]["witness"].is_null());
        assert_eq!(v["entries"][0]["ms"], 0);
    }
}
