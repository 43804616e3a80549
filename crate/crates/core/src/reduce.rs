//! Reducibility: searching for `c ~ a ⊕ b` with `a`, `b` solutions of size >= 3.
//!
//! For a fixed image `c'` of `c` and split `m + l = n + 2`, the right part is
//! `b = (b_1, c'_{m+1}, …, c'_n, b_l)` and the left part is
//! `a = (c'_1 - b_l, c'_2, …, c'_{m-1}, c'_m - b_1)`. Since `c` is a solution,
//! `a` is one as soon as `b` is, so only `b` has to be solved for. With
//! `P = M(c'_{m+1}, …, c'_n) = [[p, q], [r, s]]`,
//! `G(b_l) P G(b_1) = ε Id` holds iff `p = -ε`, `b_1 = ε q`, `b_l = -ε r`,
//! so the junction pair is read off `P` instead of scanned over `N^2` values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Sign};
use crate::ring::{Ring, Zn};
use crate::seq::{format_seq, oplus, Dihedral};
use crate::solution::{check_solution, Solution};

/// `transform.apply(original) == oplus(left.seq, right.seq)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub transform: Dihedral,
    pub left: Solution,
    pub right: Solution,
}

impl DecompositionWitness {
    pub fn check(&self, ring: &Zn, original: &[u32]) -> bool {
        self.left.len() >= 3
            && self.right.len() >= 3
            && check_solution(ring, &self.left.seq) == Some(self.left.sign)
            && check_solution(ring, &self.right.seq) == Some(self.right.sign)
            && oplus(ring, &self.left.seq, &self.right.seq).ok().as_deref()
                == Some(&self.transform.apply(original)[..])
    }
}

/// Right-multiply by `G(a)`: `[[p, q], [r, s]] · G(a) = [[a p + q, -p], [a r + s, -r]]`.
#[inline]
fn right_mul_generator(ring: &Zn, m: &Mat2<u32>, a: u32) -> Mat2<u32> {
    Mat2::new(
        ring.add(&ring.mul(&a, &m.a), &m.b),
        ring.neg(&m.a),
        ring.add(&ring.mul(&a, &m.c), &m.d),
        ring.neg(&m.c),
    )
}

/// The least `(b_1, b_l)` with `G(b_l) P G(b_1) = ±Id`, if any.
fn junction(ring: &Zn, p: &Mat2<u32>) -> Option<(u32, u32, Sign)> {
    let one = ring.one();
    let minus = ring.neg(&one);
    let mut best: Option<(u32, u32, Sign)> = None;
    for sign in [Sign::Plus, Sign::Minus] {
        let (eps, neg_eps) = match sign {
            Sign::Plus => (one, minus),
            Sign::Minus => (minus, one),
        };
        if p.a != neg_eps {
            continue;
        }
        let cand = (ring.mul(&eps, &p.b), ring.mul(&neg_eps, &p.c), sign);
        if best.is_none_or(|b| (cand.0, cand.1) < (b.0, b.1)) {
            best = Some(cand);
        }
    }
    best
}

/// First witness in scan order: dihedral index, then left size `m` ascending,
/// then `b_1`, then `b_l`. When `whitelist` is given, the right part must be
/// one of its tuples verbatim.
///
/// Fails for `n < 3` and for non-solutions.
pub fn find_decomposition(
    ring: &Zn,
    seq: &[u32],
    whitelist: Option<&[Vec<u32>]>,
) -> Result<Option<DecompositionWitness>> {
    let n = seq.len();
    if n < 3 {
        return Err(Error::TooShort { need: 3, got: n });
    }
    if check_solution(ring, seq).is_none() {
        return Err(Error::NotASolution(format_seq(seq)));
    }
    if n < 4 {
        // m, l >= 3 forces n >= 4.
        return Ok(None);
    }
    let mut suffix = vec![Mat2::identity(ring); n + 1];
    for t in Dihedral::all(n) {
        let img = t.apply(seq);
        // suffix[m] = M(img[m..n]) in 0-based terms, i.e. c'_{m+1} … c'_n.
        for m in (3..n).rev() {
            suffix[m] = right_mul_generator(ring, &suffix[m + 1], img[m]);
        }
        for m in 3..n {
            let Some((b1, bl, rsign)) = junction(ring, &suffix[m]) else {
                continue;
            };
            let mut right = Vec::with_capacity(n + 2 - m);
            right.push(b1);
            right.extend_from_slice(&img[m..]);
            right.push(bl);
            if let Some(list) = whitelist {
                if !list.contains(&right) {
                    continue;
                }
            }
            let mut left = img[..m].to_vec();
            left[0] = ring.sub(&img[0], &bl);
            left[m - 1] = ring.sub(&img[m - 1], &b1);
            let lsign = check_solution(ring, &left)
                .expect("left part of a solution sum with a solution is a solution");
            return Ok(Some(DecompositionWitness {
                transform: t,
                left: Solution {
                    seq: left,
                    sign: lsign,
                },
                right: Solution {
                    seq: right,
                    sign: rsign,
                },
            }));
        }
    }
    Ok(None)
}

/// `(0,0)` is not irreducible; size-3 solutions are; otherwise irreducible
/// iff no witness exists.
pub fn is_irreducible(ring: &Zn, seq: &[u32]) -> Result<bool> {
    if check_solution(ring, seq).is_none() {
        return Err(Error::NotASolution(format_seq(seq)));
    }
    match seq.len() {
        0..=2 => Ok(false),
        3 => Ok(true),
        _ => Ok(find_decomposition(ring, seq, None)?.is_none()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal N^2 junction scan, the definition the closed form replaces.
    fn brute_force(ring: &Zn, seq: &[u32]) -> Option<(Dihedral, Vec<u32>, Vec<u32>)> {
        let n = seq.len();
        let nn = ring.modulus();
        for t in Dihedral::all(n) {
            let img = t.apply(seq);
            for m in 3..n {
                for b1 in 0..nn {
                    for bl in 0..nn {
                        let mut right = vec![b1];
                        right.extend_from_slice(&img[m..]);
                        right.push(bl);
                        let mut left = img[..m].to_vec();
                        left[0] = ring.sub(&img[0], &bl);
                        left[m - 1] = ring.sub(&img[m - 1], &b1);
                        if check_solution(ring, &left).is_some()
                            && check_solution(ring, &right).is_some()
                        {
                            return Some((t, left, right));
                        }
                    }
                }
            }
        }
        None
    }

    fn solutions(ring: &Zn, len: usize) -> Vec<Vec<u32>> {
        let n = ring.modulus() as u64;
        (0..n.pow(len as u32))
            .map(|mut r| {
                let mut v = vec![0u32; len];
                for x in v.iter_mut().rev() {
                    *x = (r % n) as u32;
                    r /= n;
                }
                v
            })
            .filter(|v| check_solution(ring, v).is_some())
            .collect()
    }

    #[test]
    fn closed_form_junction_matches_scan() {
        for n in 2..=6 {
            let z = Zn::new(n);
            for len in 3..=6 {
                if (n as u64).pow(len as u32) > 50_000 {
                    continue;
                }
                for s in solutions(&z, len) {
                    let w = find_decomposition(&z, &s, None).unwrap();
                    let b = brute_force(&z, &s);
                    match (&w, &b) {
                        (None, None) => {}
                        (Some(w), Some((t, l, r))) => {
                            assert_eq!(
                                (&w.transform, &w.left.seq, &w.right.seq),
                                (t, l, r),
                                "{s:?} mod {n}"
                            );
                            assert!(w.check(&z, &s));
                        }
                        _ => panic!("mismatch on {s:?} mod {n}: {w:?} vs {b:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn all_twos_length_eight_mod_four() {
        let z = Zn::new(4);
        let s = vec![2; 8];
        let w = find_decomposition(&z, &s, None).unwrap().unwrap();
        assert!(w.check(&z, &s));
        let mut parts = [w.left.seq.clone(), w.right.seq.clone()];
        parts.sort();
        assert_eq!(parts, [vec![0, 2, 2, 2, 2, 0], vec![2, 2, 2, 2]]);
        // the other order is an equally valid sum
        assert_eq!(oplus(&z, &[0, 2, 2, 2, 2, 0], &[2, 2, 2, 2]).unwrap(), s);
    }

    #[test]
    fn threes_mod_nine() {
        let z = Zn::new(9);
        let s = vec![3; 6];
        let w = find_decomposition(&z, &s, None).unwrap().unwrap();
        assert_eq!(w.left.seq, vec![6, 3, 3, 6]);
        assert_eq!(w.right.seq, vec![6, 3, 3, 6]);
    }

    #[test]
    fn all_twos_length_n_irreducible() {
        for n in 3..=12 {
            let z = Zn::new(n);
            assert_eq!(
                find_decomposition(&z, &vec![2 % n; n as usize], None).unwrap(),
                None,
                "N={n}"
            );
            assert!(is_irreducible(&z, &vec![2 % n; n as usize]).unwrap());
        }
    }

    #[test]
    fn irreducible_examples() {
        assert!(is_irreducible(&Zn::new(7), &[1, 1, 1]).unwrap());
        assert!(!is_irreducible(&Zn::new(7), &[0, 0]).unwrap());
        assert!(is_irreducible(&Zn::new(5), &[2, 3, 2, 3, 2, 3]).unwrap());
        assert!(matches!(
            is_irreducible(&Zn::new(5), &[1, 2, 1]),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn errors() {
        let z = Zn::new(5);
        assert_eq!(
            find_decomposition(&z, &[0, 0], None),
            Err(Error::TooShort { need: 3, got: 2 })
        );
        assert!(matches!(
            find_decomposition(&z, &[1, 2, 1], None),
            Err(Error::NotASolution(_))
        ));
        assert_eq!(find_decomposition(&z, &[1, 1, 1], None), Ok(None));
    }

    #[test]
    fn whitelist_restricts_right_part() {
        let z = Zn::new(3);
        let list = vec![vec![1, 1, 1], vec![2, 2, 2], vec![0, 0, 0, 0]];
        let s = vec![0, 0, 0, 0, 0, 0];
        let w = find_decomposition(&z, &s, Some(&list)).unwrap().unwrap();
        assert_eq!(w.right.seq, vec![0, 0, 0, 0]);
        assert!(w.check(&z, &s));
    }

    #[test]
    fn criteria_with_units_and_zero() {
        // Size >= 4 with ±1 is reducible, size >= 5 with 0 is reducible, and a
        // size-4 solution is reducible iff it contains ±1.
        for n in 2..=6 {
            let z = Zn::new(n);
            let m1 = z.neg(&1);
            for len in 4..=7 {
                if (n as u64).pow(len as u32) > 80_000 {
                    continue;
                }
                for s in solutions(&z, len) {
                    let red = !is_irreducible(&z, &s).unwrap();
                    let unit = s.iter().any(|&x| x == 1 || x == m1);
                    if unit {
                        assert!(red, "{s:?} mod {n}");
                    }
                    if len >= 5 && s.contains(&0) {
                        assert!(red, "{s:?} mod {n}");
                    }
                    if len == 4 {
                        assert_eq!(red, unit, "{s:?} mod {n}");
                    }
                }
            }
        }
    }
}
