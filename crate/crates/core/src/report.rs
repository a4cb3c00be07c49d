//! Verification reports, serialized as JSON Lines by the CLI.
//!
//! Big integers and rationals are carried as decimal strings.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Numeric => f.write_str("numeric"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Numeric mode only: the left-hand side is beyond 2^53.
    SkippedOverflow,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::SkippedOverflow => f.write_str("skipped-overflow"),
        }
    }
}

/// Parameters of a checked tuple; absent ones are omitted from JSON.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReportParams {
    pub k: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
}

/// Verdict on one part of a multi-part identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartVerdict {
    pub part: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: ReportParams,
    pub mode: Mode,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartVerdict>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn from_parts(id: &str, params: ReportParams, parts: Vec<PartVerdict>) -> Self {
        let status = Status::from_bool(parts.iter().all(|p| p.status == Status::Pass));
        let join = |f: fn(&PartVerdict) -> &str| parts.iter().map(f).collect::<Vec<_>>().join("; ");
        let detail = parts
            .iter()
            .map(|p| format!("{}:{}", p.part, p.status))
            .collect::<Vec<_>>()
            .join(" ");
        VerificationReport {
            id: id.to_owned(),
            params,
            mode: Mode::Exact,
            lhs: join(|p| &p.lhs),
            rhs: join(|p| &p.rhs),
            status,
            detail,
            parts,
        }
    }
}

/// Counts by status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_overflow: usize,
}

impl Summary {
    pub fn tally<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedOverflow => s.skipped_overflow += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped_overflow
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total={} pass={} fail={} skipped-overflow={}",
            self.total(),
            self.pass,
            self.fail,
            self.skipped_overflow
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_serializes_kebab() {
        assert_eq!(serde_json::to_string(&Status::SkippedOverflow).unwrap(), "\"skipped-overflow\"");
        assert_eq!(serde_json::to_string(&Mode::Exact).unwrap(), "\"exact\"");
    }

    #[test]
    fn absent_params_are_omitted() {
        let p = ReportParams { k: 2, n: Some(3), ..Default::default() };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"k":2,"n":3}"#);
    }

    #[test]
    fn summary_counts() {
        let mk = |status| VerificationReport {
            id: "x".into(),
            params: ReportParams::default(),
            mode: Mode::Numeric,
            lhs: String::new(),
            rhs: String::new(),
            status,
            detail: String::new(),
            parts: vec![],
        };
        let rs = [mk(Status::Pass), mk(Status::Fail), mk(Status::SkippedOverflow), mk(Status::Pass)];
        let s = Summary::tally(&rs);
        assert_eq!(s, Summary { pass: 2, fail: 1, skipped_overflow: 1 });
        assert_eq!(s.to_string(), "total=4 pass=2 fail=1 skipped-overflow=1");
    }
}
