use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Matches an exception graph of the checked statement.
    Excluded,
    /// Outside the statement's hypothesis.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Excluded => "excluded",
            Status::Skipped => "skipped",
        }
    }
}

/// One checked graph. Invariants that the suite did not need stay `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub graph6: String,
    pub n: usize,
    pub k: Option<usize>,
    pub connected: bool,
    pub triangle: bool,
    pub grundy: Option<usize>,
    pub zgrundy: Option<usize>,
    pub zero_forcing: Option<usize>,
    /// Exact bound as `p/q` or an integer.
    pub bound: Option<String>,
    pub slack: Option<String>,
    pub extremal: Option<bool>,
    pub catalog_match: Option<String>,
    pub status: Status,
    pub note: String,
}

impl ReportRow {
    pub(crate) fn new(graph6: String, n: usize) -> Self {
        ReportRow {
            graph6,
            n,
            k: None,
            connected: false,
            triangle: false,
            grundy: None,
            zgrundy: None,
            zero_forcing: None,
            bound: None,
            slack: None,
            extremal: None,
            catalog_match: None,
            status: Status::Pass,
            note: String::new(),
        }
    }

    pub(crate) fn with_status(mut self, status: Status, note: impl Into<String>) -> Self {
        self.status = status;
        self.note = note.into();
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub excluded: usize,
    pub skipped: usize,
    pub extremal: usize,
    /// `graph6: note` for every failed row.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts rows by order then graph6 and tallies the summary.
    pub fn new(suite: impl Into<String>, mut rows: Vec<ReportRow>) -> Self {
        rows.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
        let mut summary = Summary {
            total: rows.len(),
            ..Summary::default()
        };
        for r in &rows {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => {
                    summary.failed += 1;
                    summary.failures.push(format!("{}: {}", r.graph6, r.note));
                }
                Status::Excluded => summary.excluded += 1,
                Status::Skipped => summary.skipped += 1,
            }
            if r.extremal == Some(true) {
                summary.extremal += 1;
            }
        }
        VerificationReport {
            suite: suite.into(),
            rows,
            summary,
        }
    }

    pub fn is_success(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn extremal_rows(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.extremal == Some(true))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(r).map_err(|e| Error::Output(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Output(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<8} n={:<3} gr={:<3} zgr={:<3} Z={:<3} bound={:<6} slack={:<6} {}{}{}",
                r.status.as_str(),
                r.n,
                opt(r.grundy),
                opt(r.zgrundy),
                opt(r.zero_forcing),
                r.bound.as_deref().unwrap_or("-"),
                r.slack.as_deref().unwrap_or("-"),
                r.graph6,
                if r.extremal == Some(true) { " extremal" } else { "" },
                r.catalog_match.as_deref().map(|m| format!(" [{m}]")).unwrap_or_default(),
            );
            if !r.note.is_empty() && r.status != Status::Pass {
                let _ = writeln!(out, "         {}", r.note);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} graphs, {} passed, {} failed, {} excluded, {} skipped, {} extremal",
            self.suite, s.total, s.passed, s.failed, s.excluded, s.skipped, s.extremal
        );
        out
    }
}
