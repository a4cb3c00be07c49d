//! OEIS b-file parsing and cross-checking against generated terms.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::{sequence_range, Family};

/// How an OEIS sequence lines up with `P(k, n)` or `Q(k, n)`.
///
/// `offset` is the OEIS index that holds the term with `n = 0`, so
/// OEIS index `i` corresponds to `n = i - offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisMapping {
    pub oeis_id: String,
    pub family: Family,
    pub k: u64,
    pub offset: i64,
}

// Offsets: every one of these sequences is listed from index 0 with the
// initial values of the matching family.
const BUNDLED: [(&str, Family, u64, i64); 8] = [
    ("A002605", Family::KPell, 2, 0),
    ("A015518", Family::KPell, 3, 0),
    ("A085449", Family::KPell, 4, 0),
    ("A002532", Family::KPell, 5, 0),
    ("A080040", Family::KPellLucas, 2, 0),
    ("A102345", Family::KPellLucas, 3, 0),
    ("A087131", Family::KPellLucas, 4, 0),
    ("A127226", Family::KPellLucas, 6, 0),
];

impl OeisMapping {
    pub fn new(oeis_id: impl Into<String>, family: Family, k: u64, offset: i64) -> Self {
        OeisMapping { oeis_id: oeis_id.into(), family, k, offset }
    }

    /// The eight identifications shipped with the tool.
    pub fn bundled() -> Vec<OeisMapping> {
        BUNDLED.iter().map(|&(id, family, k, offset)| OeisMapping::new(id, family, k, offset)).collect()
    }

    pub fn lookup(oeis_id: &str) -> Result<OeisMapping> {
        let id = normalize_id(oeis_id);
        Self::bundled()
            .into_iter()
            .find(|m| m.oeis_id == id)
            .ok_or_else(|| Error::UnknownOeisId(oeis_id.to_owned()))
    }

    /// Canonical b-file URL, e.g. `https://oeis.org/A002605/b002605.txt`.
    pub fn bfile_url(&self) -> String {
        bfile_url(&self.oeis_id)
    }
}

impl fmt::Display for OeisMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}(k={}, n) offset {}", self.oeis_id, self.family.symbol(), self.k, self.offset)
    }
}

/// Upper-cases and zero-pads to `Annnnnn`.
pub fn normalize_id(id: &str) -> String {
    let digits = id.trim().trim_start_matches(['A', 'a']);
    match digits.parse::<u32>() {
        Ok(num) => format!("A{num:06}"),
        Err(_) => id.trim().to_owned(),
    }
}

pub fn bfile_url(oeis_id: &str) -> String {
    let id = normalize_id(oeis_id);
    format!("https://oeis.org/{id}/b{}.txt", &id[1..])
}

/// One `index value` entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

/// Parses b-file text: whitespace-separated `index value` pairs, blank lines
/// and `#` comments ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = || Error::BFileSyntax { line: lineno + 1, text: line.to_owned() };
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad());
        };
        let index = index.parse::<i64>().map_err(|_| bad())?;
        let value = value.parse::<BigInt>().map_err(|_| bad())?;
        out.push(BFileEntry { index, value });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum OeisOutcome {
    Match {
        checked: usize,
    },
    Mismatch {
        oeis_index: i64,
        /// `None` when the OEIS index maps to a negative `n`.
        n: Option<u64>,
        oeis_value: String,
        generated: Option<String>,
        possible_offset_shift: bool,
    },
    /// The b-file holds fewer terms than requested.
    Insufficient {
        available: usize,
        requested: usize,
    },
}

impl OeisOutcome {
    pub fn is_match(&self) -> bool {
        matches!(self, OeisOutcome::Match { .. })
    }
}

impl fmt::Display for OeisOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OeisOutcome::Match { checked } => write!(f, "match ({checked} terms)"),
            OeisOutcome::Mismatch { oeis_index, oeis_value, generated, possible_offset_shift, .. } => {
                write!(
                    f,
                    "mismatch at OEIS index {oeis_index}: b-file {oeis_value}, generated {}",
                    generated.as_deref().unwrap_or("none")
                )?;
                if *possible_offset_shift {
                    f.write_str(" (possible offset shift)")?;
                }
                Ok(())
            }
            OeisOutcome::Insufficient { available, requested } => {
                write!(f, "b-file has {available} terms, {requested} requested")
            }
        }
    }
}

/// Compares the first `n_check` entries of a b-file with the mapped
/// sequence. A mismatch on the leading term is flagged as a possible offset
/// shift; offsets are never adjusted automatically.
pub fn cross_check(mapping: &OeisMapping, entries: &[BFileEntry], n_check: usize) -> Result<OeisOutcome> {
    if entries.len() < n_check {
        return Ok(OeisOutcome::Insufficient { available: entries.len(), requested: n_check });
    }
    let entries = &entries[..n_check];
    let max_n = entries.iter().filter_map(|e| u64::try_from(e.index - mapping.offset).ok()).max();
    let generated = match max_n {
        Some(max_n) => sequence_range(mapping.family, mapping.k, 0, max_n)?,
        None => Vec::new(),
    };
    for (pos, entry) in entries.iter().enumerate() {
        let n = u64::try_from(entry.index - mapping.offset).ok();
        let ours = n.map(|n| &generated[n as usize]);
        if ours != Some(&entry.value) {
            return Ok(OeisOutcome::Mismatch {
                oeis_index: entry.index,
                n,
                oeis_value: entry.value.to_string(),
                generated: ours.map(ToString::to_string),
                possible_offset_shift: pos == 0,
            });
        }
    }
    Ok(OeisOutcome::Match { checked: n_check })
}
