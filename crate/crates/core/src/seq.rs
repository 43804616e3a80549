//! Residue sequences: text format, the dihedral relation `~`, canonical
//! representatives and the gluing sum `⊕`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, Zn};

/// One of the `2n` symmetries of an `n`-cycle: an optional reversal followed
/// by a cyclic rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dihedral {
    pub rotation: usize,
    pub reflected: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral {
        rotation: 0,
        reflected: false,
    };

    /// Index order: rotations `0..n` of the sequence, then rotations of its reversal.
    pub fn from_index(index: usize, n: usize) -> Self {
        Dihedral {
            rotation: index % n,
            reflected: index >= n,
        }
    }

    pub fn index(self, n: usize) -> usize {
        self.rotation + if self.reflected { n } else { 0 }
    }

    pub fn all(n: usize) -> impl Iterator<Item = Dihedral> {
        (0..2 * n).map(move |i| Dihedral::from_index(i, n))
    }

    /// Position in the original sequence that lands at position `i`.
    #[inline]
    pub fn source(self, i: usize, n: usize) -> usize {
        let j = (i + self.rotation) % n;
        if self.reflected {
            n - 1 - j
        } else {
            j
        }
    }

    pub fn apply<T: Clone>(self, seq: &[T]) -> Vec<T> {
        let n = seq.len();
        (0..n).map(|i| seq[self.source(i, n)].clone()).collect()
    }

    /// The transform undoing `self`, so that `inverse.apply(self.apply(s)) == s`.
    pub fn inverse(self, n: usize) -> Dihedral {
        if self.reflected {
            self
        } else {
            Dihedral {
                rotation: (n - self.rotation) % n,
                reflected: false,
            }
        }
    }
}

/// Lexicographically least image under the `2n` dihedral symmetries.
pub fn canonicalize<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    canonical_transform(seq).1
}

/// The canonical representative together with the first transform reaching it.
pub fn canonical_transform<T: Ord + Clone>(seq: &[T]) -> (Dihedral, Vec<T>) {
    let n = seq.len();
    if n == 0 {
        return (Dihedral::IDENTITY, Vec::new());
    }
    let mut best = Dihedral::IDENTITY;
    for t in Dihedral::all(n).skip(1) {
        if image_less(seq, t, best) {
            best = t;
        }
    }
    (best, best.apply(seq))
}

fn image_less<T: Ord>(seq: &[T], x: Dihedral, y: Dihedral) -> bool {
    let n = seq.len();
    for i in 0..n {
        match seq[x.source(i, n)].cmp(&seq[y.source(i, n)]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// Least cyclic rotation (no reversal).
pub fn min_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    (0..n)
        .map(|r| {
            Dihedral {
                rotation: r,
                reflected: false,
            }
            .apply(seq)
        })
        .min()
        .unwrap_or_default()
}

pub fn equivalent<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && canonicalize(a) == canonicalize(b)
}

/// `(a_1 + b_m, a_2, …, a_{n-1}, a_n + b_1, b_2, …, b_{m-1})`.
pub fn oplus<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let (n, m) = (a.len(), b.len());
    if n < 2 || m < 2 {
        return Err(Error::SumOperands(n, m));
    }
    let mut out = Vec::with_capacity(n + m - 2);
    out.push(ring.add(&a[0], &b[m - 1]));
    out.extend_from_slice(&a[1..n - 1]);
    out.push(ring.add(&a[n - 1], &b[0]));
    out.extend_from_slice(&b[1..m - 1]);
    Ok(out)
}

pub fn negate<R: Ring>(ring: &R, seq: &[R::Elem]) -> Vec<R::Elem> {
    seq.iter().map(|x| ring.neg(x)).collect()
}

pub fn reverse<T: Clone>(seq: &[T]) -> Vec<T> {
    seq.iter().rev().cloned().collect()
}

pub fn concat<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    [a, b].concat()
}

/// Parses `"2,3,-1"`. Whitespace around entries is ignored.
pub fn parse_ints(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("'{t}' is not an integer")))
        })
        .collect()
}

pub fn parse_bigints(text: &str) -> Result<Vec<BigInt>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("'{t}' is not an integer")))
        })
        .collect()
}

/// Parses and reduces modulo `N`; negatives are allowed.
pub fn parse_residues(ring: &Zn, text: &str) -> Result<Vec<u32>> {
    Ok(parse_ints(text)?
        .into_iter()
        .map(|v| ring.reduce(v))
        .collect())
}

pub fn format_seq<T: std::fmt::Display>(seq: &[T]) -> String {
    seq.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Format with symmetric representatives, e.g. `N-1` shown as `-1`.
pub fn format_symmetric(ring: &Zn, seq: &[u32]) -> String {
    seq.iter()
        .map(|&x| ring.symmetric(x).to_string())
        .collect::<Vec<_>>()
        .join(",")
}
