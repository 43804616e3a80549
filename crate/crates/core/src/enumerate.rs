//! Exhaustive enumeration of solutions and classification into `~`-classes.
//!
//! Prefixes `(a_1, …, a_{n-2})` are generated depth first with their running
//! product `P = M_{n-2}(prefix) = [[p, q], [r, s]]`. The last two entries are
//! then solved rather than searched: `G(y) G(x) P = ε Id` forces `p = -ε`,
//! `x = -ε r` and `y = ε q`, the remaining entry being fixed by `det P = 1`.
//! Each size therefore costs about `N^{n-2}` generator multiplications.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Sign;
use crate::reduce::{find_decomposition, DecompositionWitness};
use crate::ring::Zn;
use crate::seq::{canonicalize, min_rotation, reverse};
use crate::solution::Solution;

/// Default ceiling on estimated generator multiplications per command.
pub const DEFAULT_WORK_BOUND: u128 = 200_000_000;

/// Solutions whose first `depth` entries, read as a base-`N` number, are
/// congruent to `index` mod `count`. Sizes with fewer than `depth + 2`
/// entries use their whole prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub depth: usize,
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub fn new(depth: usize, index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::InvalidShard { index, count });
        }
        Ok(Shard {
            depth,
            index,
            count,
        })
    }

    fn owns(&self, modulus: u32, prefix: &[u32]) -> bool {
        let key = prefix
            .iter()
            .take(self.depth)
            .fold(0u128, |acc, &x| acc * modulus as u128 + x as u128);
        key % self.count as u128 == self.index as u128
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub ring: Zn,
    pub sizes: Vec<usize>,
    /// Leave reducible classes out of the report.
    pub irreducible_only: bool,
    pub shard: Option<Shard>,
    /// Keep reducible classes together with their witnesses.
    pub keep_witnesses: bool,
    pub work_bound: u128,
}

impl SearchConfig {
    pub fn new(ring: Zn, sizes: impl IntoIterator<Item = usize>) -> Self {
        SearchConfig {
            ring,
            sizes: sizes.into_iter().collect(),
            irreducible_only: false,
            shard: None,
            keep_witnesses: false,
            work_bound: DEFAULT_WORK_BOUND,
        }
    }

    pub fn estimate(&self) -> u128 {
        self.sizes
            .iter()
            .map(|&n| work_estimate(self.ring.modulus(), n))
            .sum()
    }

    pub fn check_bound(&self) -> Result<()> {
        let estimate = self.estimate();
        if estimate > self.work_bound {
            return Err(Error::WorkBound {
                estimate,
                bound: self.work_bound,
            });
        }
        Ok(())
    }
}

/// Generator multiplications spent enumerating size `n`: `N + N^2 + … + N^{n-2}`.
pub fn work_estimate(modulus: u32, n: usize) -> u128 {
    let mut total = 0u128;
    let mut p = 1u128;
    for _ in 0..n.saturating_sub(2) {
        p = p.saturating_mul(modulus as u128);
        total = total.saturating_add(p);
    }
    total
}

struct Search<'a, F> {
    n: u64,
    len: usize,
    shard: Option<&'a Shard>,
    prefix: Vec<u32>,
    emit: F,
}

impl<F: FnMut(&[u32], Sign)> Search<'_, F> {
    fn run(&mut self, p: [u64; 4]) {
        let depth = self.prefix.len();
        if let Some(shard) = self.shard {
            if depth == shard.depth.min(self.len - 2) && !shard.owns(self.n as u32, &self.prefix) {
                return;
            }
        }
        if depth == self.len - 2 {
            self.tail(p);
            return;
        }
        let n = self.n;
        let [a, b, c, d] = p;
        for x in 0..n {
            // G(x) · P
            let next = [(x * a + n - c) % n, (x * b + n - d) % n, a, b];
            self.prefix.push(x as u32);
            self.run(next);
            self.prefix.pop();
        }
    }

    fn tail(&mut self, [a, b, c, _]: [u64; 4]) {
        let n = self.n;
        let one = 1 % n;
        let minus = (n - 1) % n;
        let mut found: [Option<(u32, u32, Sign)>; 2] = [None, None];
        for (slot, (sign, eps)) in [(Sign::Plus, one), (Sign::Minus, minus)]
            .into_iter()
            .enumerate()
        {
            if a != (n - eps) % n {
                continue;
            }
            let x = ((n - eps) * c % n) as u32;
            let y = (eps * b % n) as u32;
            found[slot] = Some((x, y, sign));
        }
        if let (Some(p), Some(m)) = (found[0], found[1]) {
            if (p.0, p.1) == (m.0, m.1) {
                found[1] = None;
            } else if (m.0, m.1) < (p.0, p.1) {
                found.swap(0, 1);
            }
        }
        for (x, y, sign) in found.into_iter().flatten() {
            self.prefix.push(x);
            self.prefix.push(y);
            (self.emit)(&self.prefix, sign);
            self.prefix.truncate(self.prefix.len() - 2);
        }
    }
}

/// Calls `emit` on every solution of length `len`, in lexicographic order,
/// restricted to `shard` when given.
pub fn for_each_solution(
    ring: &Zn,
    len: usize,
    shard: Option<&Shard>,
    emit: impl FnMut(&[u32], Sign),
) {
    if len < 2 {
        return;
    }
    let mut s = Search {
        n: ring.modulus() as u64,
        len,
        shard,
        prefix: Vec::with_capacity(len),
        emit,
    };
    s.run([1, 0, 0, 1]);
}

/// All solutions of length `n`, in lexicographic order.
pub fn enumerate_solutions(ring: &Zn, n: usize, work_bound: u128) -> Result<Vec<Solution>> {
    let estimate = work_estimate(ring.modulus(), n);
    if estimate > work_bound {
        return Err(Error::WorkBound {
            estimate,
            bound: work_bound,
        });
    }
    let mut out = Vec::new();
    for_each_solution(ring, n, None, |s, sign| {
        out.push(Solution {
            seq: s.to_vec(),
            sign,
        })
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleClass {
    pub rep: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<DecompositionWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub n: usize,
    /// Raw tuples, counted within the shard when sharded.
    pub solution_count: u64,
    pub total_classes: usize,
    pub irreducible: Vec<Vec<u32>>,
    /// Irreducible classes up to rotation only (no reversal).
    pub irreducible_rotation_classes: usize,
    pub reducible_count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reducible: Vec<ReducibleClass>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub modulus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shard: Option<Shard>,
    pub sizes: Vec<SizeReport>,
    /// Wall-clock seconds; excluded from comparisons.
    #[serde(default)]
    pub elapsed: f64,
}

impl ClassificationReport {
    pub fn size(&self, n: usize) -> Option<&SizeReport> {
        self.sizes.iter().find(|s| s.n == n)
    }

    pub fn irreducible(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.sizes.iter().flat_map(|s| s.irreducible.iter())
    }

    /// Largest size with an irreducible class.
    pub fn max_irreducible_size(&self) -> Option<usize> {
        self.sizes
            .iter()
            .filter(|s| !s.irreducible.is_empty())
            .map(|s| s.n)
            .max()
    }

    /// Same report with the timing zeroed, for byte comparisons.
    pub fn without_timing(&self) -> Self {
        ClassificationReport {
            elapsed: 0.0,
            ..self.clone()
        }
    }
}

/// 1 if the reversal of `rep` is one of its rotations, else 2.
pub fn rotation_classes_in_orbit(rep: &[u32]) -> usize {
    if min_rotation(rep) == min_rotation(&reverse(rep)) {
        1
    } else {
        2
    }
}

fn classify_size(config: &SearchConfig, n: usize) -> Result<SizeReport> {
    let ring = &config.ring;
    let mut classes = BTreeSet::new();
    let mut count = 0u64;
    for_each_solution(ring, n, config.shard.as_ref(), |s, _| {
        count += 1;
        classes.insert(canonicalize(s));
    });
    let keep_reducible =
        (config.keep_witnesses || config.shard.is_some()) && !config.irreducible_only;
    let mut irreducible = Vec::new();
    let mut reducible = Vec::new();
    let mut reducible_count = 0;
    for rep in &classes {
        let witness = if n < 3 {
            None
        } else {
            find_decomposition(ring, rep, None)?
        };
        // (0,0) has no witness but is not irreducible.
        if n >= 3 && witness.is_none() {
            irreducible.push(rep.clone());
        } else {
            reducible_count += 1;
            if keep_reducible {
                reducible.push(ReducibleClass {
                    rep: rep.clone(),
                    witness: if config.keep_witnesses { witness } else { None },
                });
            }
        }
    }
    Ok(SizeReport {
        n,
        solution_count: count,
        total_classes: classes.len(),
        irreducible_rotation_classes: irreducible
            .iter()
            .map(|r| rotation_classes_in_orbit(r))
            .sum(),
        irreducible,
        reducible_count,
        reducible,
    })
}

/// Classes per size in ascending size order, reps in lexicographic order.
pub fn classify(config: &SearchConfig) -> Result<ClassificationReport> {
    config.check_bound()?;
    let start = Instant::now();
    let mut sizes: Vec<usize> = config.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let sizes = sizes
        .into_iter()
        .map(|n| classify_size(config, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationReport {
        modulus: config.ring.modulus(),
        shard: config.shard,
        sizes,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Union of shard reports. Shards must cover one search between them; the
/// reducible class lists (kept automatically when sharding) make class
/// counts exact.
pub fn merge_reports(parts: &[ClassificationReport]) -> Result<ClassificationReport> {
    let Some(first) = parts.first() else {
        return Err(Error::Precondition("nothing to merge".into()));
    };
    if parts.iter().any(|p| p.modulus != first.modulus) {
        return Err(Error::Precondition("reports use different moduli".into()));
    }
    let mut ns: BTreeSet<usize> = BTreeSet::new();
    for p in parts {
        ns.extend(p.sizes.iter().map(|s| s.n));
    }
    let mut sizes = Vec::new();
    for n in ns {
        let mut irr = BTreeSet::new();
        let mut red: std::collections::BTreeMap<Vec<u32>, Option<DecompositionWitness>> =
            Default::default();
        let mut count = 0;
        for s in parts.iter().filter_map(|p| p.size(n)) {
            count += s.solution_count;
            irr.extend(s.irreducible.iter().cloned());
            for r in &s.reducible {
                let e = red.entry(r.rep.clone()).or_insert(None);
                if e.is_none() {
                    *e = r.witness.clone();
                }
            }
        }
        let irreducible: Vec<Vec<u32>> = irr.into_iter().collect();
        let reducible: Vec<ReducibleClass> = red
            .into_iter()
            .map(|(rep, witness)| ReducibleClass { rep, witness })
            .collect();
        sizes.push(SizeReport {
            n,
            solution_count: count,
            total_classes: irreducible.len() + reducible.len(),
            irreducible_rotation_classes: irreducible
                .iter()
                .map(|r| rotation_classes_in_orbit(r))
                .sum(),
            reducible_count: reducible.len(),
            irreducible,
            reducible,
        });
    }
    Ok(ClassificationReport {
        modulus: first.modulus,
        shard: None,
        sizes,
        elapsed: parts.iter().map(|p| p.elapsed).sum(),
    })
}

/// Runs `shards` shards of depth `depth` on the rayon pool and merges them.
/// Witnesses are kept only if the config asks for them.
pub fn classify_parallel(
    config: &SearchConfig,
    depth: usize,
    shards: usize,
) -> Result<ClassificationReport> {
    config.check_bound()?;
    let start = Instant::now();
    let parts = (0..shards)
        .into_par_iter()
        .map(|i| {
            let mut c = config.clone();
            c.shard = Some(Shard::new(depth, i, shards)?);
            c.work_bound = u128::MAX;
            classify(&c)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut merged = merge_reports(&parts)?;
    if !config.keep_witnesses {
        for s in &mut merged.sizes {
            s.reducible.clear();
        }
    }
    merged.elapsed = start.elapsed().as_secs_f64();
    Ok(merged)
}

pub const EVIDENCE_NOTE: &str =
    "evidence only: observations within the scanned sizes, not a proof of any bound";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub modulus: u32,
    pub n_max: usize,
    pub note: String,
    /// `(n, irreducible class count)` for `n = 3..=n_max`.
    pub counts: Vec<(usize, usize)>,
    pub max_irreducible_size: Option<usize>,
    /// Whether an irreducible class longer than `N` was seen.
    pub above_modulus: bool,
}

/// Default scan ceiling `N + 3`.
pub fn default_evidence_bound(modulus: u32) -> usize {
    modulus as usize + 3
}

/// Irreducible counts up to `n_max`, framed as evidence for finiteness and
/// size bounds.
pub fn evidence_scan(ring: &Zn, n_max: usize, work_bound: u128) -> Result<EvidenceReport> {
    let mut config = SearchConfig::new(*ring, 3..=n_max);
    config.irreducible_only = true;
    config.work_bound = work_bound;
    let report = classify(&config)?;
    let counts: Vec<(usize, usize)> = report
        .sizes
        .iter()
        .map(|s| (s.n, s.irreducible.len()))
        .collect();
    let max = report.max_irreducible_size();
    Ok(EvidenceReport {
        modulus: ring.modulus(),
        n_max,
        note: EVIDENCE_NOTE.to_string(),
        counts,
        max_irreducible_size: max,
        above_modulus: max.is_some_and(|m| m > ring.modulus() as usize),
    })
}
