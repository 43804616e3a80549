//! Solutions of `M_n(a_1, …, a_n) = ±Id` and the small-size closed forms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{eval_mn, Sign};
use crate::ring::{Integers, Ring, Zn};
use crate::seq::{canonicalize, format_seq};

/// A residue sequence with its sign `ε`, where `M_n(seq) = ε·Id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Solution {
    pub seq: Vec<u32>,
    pub sign: Sign,
}

impl Solution {
    /// Checks `seq` and records its sign, or fails with `NotASolution`.
    pub fn new(ring: &Zn, seq: Vec<u32>) -> Result<Self> {
        match check_solution(ring, &seq) {
            Some(sign) => Ok(Solution { seq, sign }),
            None => Err(Error::NotASolution(format_seq(&seq))),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn canonical(&self) -> Vec<u32> {
        canonicalize(&self.seq)
    }

    pub fn record(&self, ring: &Zn) -> SolutionRecord {
        SolutionRecord {
            modulus: ring.modulus(),
            seq: self.seq.clone(),
            sign: self.sign,
            canonical: self.canonical(),
        }
    }
}

/// JSON shape of a solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub modulus: u32,
    pub seq: Vec<u32>,
    pub sign: Sign,
    pub canonical: Vec<u32>,
}

pub fn check_solution(ring: &Zn, seq: &[u32]) -> Option<Sign> {
    if seq.is_empty() {
        return None;
    }
    eval_mn(ring, seq).pm_identity(ring)
}

/// Integer mode.
pub fn check_solution_integer(seq: &[BigInt]) -> Option<Sign> {
    if seq.is_empty() {
        return None;
    }
    eval_mn(&Integers, seq).pm_identity(&Integers)
}

/// Whether `seq` is, up to `~`, one of the irreducible integer solutions
/// `(1,1,1)`, `(-1,-1,-1)`, `(a,0,-a,0)` with `a ∉ {±1}`.
pub fn is_integer_irreducible(seq: &[BigInt]) -> bool {
    match seq.len() {
        3 => {
            let one = BigInt::one();
            seq.iter().all(|x| *x == one) || seq.iter().all(|x| *x == -&one)
        }
        4 => {
            // Rotations of (a,0,-a,0) are (a,0,-a,0) and (0,-a,0,a) read from
            // either zero; reversal gives the same family with a ↦ -a.
            let (x, y) = if seq[1].is_zero() && seq[3].is_zero() {
                (&seq[0], &seq[2])
            } else if seq[0].is_zero() && seq[2].is_zero() {
                (&seq[1], &seq[3])
            } else {
                return false;
            };
            *x == -y && !x.abs().is_one()
        }
        _ => false,
    }
}

/// Entry sum mod 3; zero on every solution mod 3.
pub fn e3_entry_sum(seq: &[u32]) -> u32 {
    (seq.iter().map(|&x| x as u64).sum::<u64>() % 3) as u32
}

/// The only size-2 solution is `(0,0)`.
pub fn solutions_size2(ring: &Zn) -> Vec<Vec<u32>> {
    let _ = ring;
    vec![vec![0, 0]]
}

/// `(1,1,1)` and `(-1,-1,-1)`, which coincide mod 2.
pub fn solutions_size3(ring: &Zn) -> Vec<Vec<u32>> {
    let m = ring.neg(&1);
    let mut out = vec![vec![1, 1, 1]];
    if m != 1 {
        out.push(vec![m, m, m]);
    }
    out
}

/// `(-a, b, a, -b)` with `ab = 0` and `(a, b, a, b)` with `ab = 2`, sorted and
/// without duplicates.
pub fn solutions_size4(ring: &Zn) -> Vec<Vec<u32>> {
    let n = ring.modulus();
    let two = ring.reduce(2);
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            let ab = ring.mul(&a, &b);
            if ab == 0 {
                out.insert(vec![ring.neg(&a), b, a, ring.neg(&b)]);
            }
            if ab == two {
                out.insert(vec![a, b, a, b]);
            }
        }
    }
    out.into_iter().collect()
}
