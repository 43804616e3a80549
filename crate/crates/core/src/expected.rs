//! Reference lists of irreducible solutions for `N = 2..=7`, shipped as data
//! and compared with the classifier at the level of `~`-classes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::enumerate::{classify, rotation_classes_in_orbit, SearchConfig, DEFAULT_WORK_BOUND};
use crate::error::{Error, Result};
use crate::ring::Zn;
use crate::seq::{canonicalize, format_seq, parse_residues};

/// One listed tuple and its family label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedEntry {
    pub label: String,
    pub seq: Vec<u32>,
}

fn source(modulus: u32) -> Option<&'static str> {
    Some(match modulus {
        2 => include_str!("../data/e2.txt"),
        3 => include_str!("../data/e3.txt"),
        4 => include_str!("../data/e4.txt"),
        5 => include_str!("../data/e5.txt"),
        6 => include_str!("../data/e6.txt"),
        7 => include_str!("../data/e7.txt"),
        _ => return None,
    })
}

/// Lines are `label a_1,…,a_n`; `#` starts a comment.
pub fn parse_expected(ring: &Zn, text: &str) -> Result<Vec<ExpectedEntry>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (label, tuple) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse(format!("line {}: expected `label tuple`", no + 1)))?;
        out.push(ExpectedEntry {
            label: label.to_string(),
            seq: parse_residues(ring, tuple.trim())?,
        });
    }
    Ok(out)
}

pub fn expected_entries(modulus: u32) -> Result<Vec<ExpectedEntry>> {
    let text = source(modulus).ok_or(Error::UnsupportedModulus(modulus, "2..=7"))?;
    parse_expected(&Zn::new(modulus), text)
}

/// The listed classes, canonicalized.
pub fn expected_classes(modulus: u32) -> Result<BTreeSet<Vec<u32>>> {
    Ok(expected_entries(modulus)?
        .iter()
        .map(|e| canonicalize(&e.seq))
        .collect())
}

/// Per-size counts of what was found, next to the number of listed tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCounts {
    pub n: usize,
    pub listed: usize,
    pub classes: usize,
    pub rotation_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub modulus: u32,
    pub sizes_scanned: Vec<usize>,
    pub listed_entries: usize,
    pub expected_classes: usize,
    pub found_classes: usize,
    /// Listed but not found.
    pub missing: Vec<Vec<u32>>,
    /// Found but not listed.
    pub extra: Vec<Vec<u32>>,
    pub per_size: Vec<SizeCounts>,
    pub pass: bool,
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let mut s = format!(
            "modulus {}: {} ({} expected classes, {} found, sizes {}..={})",
            self.modulus,
            if self.pass { "pass" } else { "FAIL" },
            self.expected_classes,
            self.found_classes,
            self.sizes_scanned.first().copied().unwrap_or(0),
            self.sizes_scanned.last().copied().unwrap_or(0),
        );
        for m in &self.missing {
            s.push_str(&format!("\n  missing ({})", format_seq(m)));
        }
        for e in &self.extra {
            s.push_str(&format!("\n  extra   ({})", format_seq(e)));
        }
        s
    }
}

/// Sizes scanned by [`verify_expected`]: from 3 up to the largest listed
/// size or `min(N + 3, 9)`, whichever is larger.
pub fn verify_sizes(modulus: u32, entries: &[ExpectedEntry]) -> Vec<usize> {
    let listed = entries.iter().map(|e| e.seq.len()).max().unwrap_or(3);
    let top = listed.max((modulus as usize + 3).min(9));
    (3..=top).collect()
}

/// Compares the classifier against an explicit list.
pub fn verify_against(
    ring: &Zn,
    entries: &[ExpectedEntry],
    work_bound: u128,
) -> Result<VerifyReport> {
    let sizes = verify_sizes(ring.modulus(), entries);
    let mut config = SearchConfig::new(*ring, sizes.clone());
    config.irreducible_only = true;
    config.work_bound = work_bound;
    let report = classify(&config)?;
    let expected: BTreeSet<Vec<u32>> = entries.iter().map(|e| canonicalize(&e.seq)).collect();
    let found: BTreeSet<Vec<u32>> = report.irreducible().cloned().collect();
    let mut listed: BTreeMap<usize, usize> = BTreeMap::new();
    for e in entries {
        *listed.entry(e.seq.len()).or_default() += 1;
    }
    let per_size = report
        .sizes
        .iter()
        .map(|s| SizeCounts {
            n: s.n,
            listed: listed.get(&s.n).copied().unwrap_or(0),
            classes: s.irreducible.len(),
            rotation_classes: s
                .irreducible
                .iter()
                .map(|r| rotation_classes_in_orbit(r))
                .sum(),
        })
        .collect();
    let missing: Vec<_> = expected.difference(&found).cloned().collect();
    let extra: Vec<_> = found.difference(&expected).cloned().collect();
    Ok(VerifyReport {
        modulus: ring.modulus(),
        sizes_scanned: sizes,
        listed_entries: entries.len(),
        expected_classes: expected.len(),
        found_classes: found.len(),
        pass: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        per_size,
        elapsed: report.elapsed,
    })
}

/// Compares the classifier against the shipped list for `N ∈ 2..=7`.
pub fn verify_expected(modulus: u32) -> Result<VerifyReport> {
    let entries = expected_entries(modulus)?;
    verify_against(&Zn::new(modulus), &entries, DEFAULT_WORK_BOUND)
}
