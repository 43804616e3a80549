//! 2×2 matrices over a [`Ring`], the generator product `M_n` and continuants.
//!
//! `M_n(a_1, …, a_n) = G(a_n) · G(a_{n-1}) ⋯ G(a_1)` where
//! `G(a) = [[a, -1], [1, 0]]`; the factor of `a_1` is the rightmost one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, Zn};

/// Row-major `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E> Mat2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Mat2 { a, b, c, d }
    }
}

impl<E: Clone> Mat2<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R) -> Self {
        Mat2::new(ring.one(), ring.zero(), ring.zero(), ring.one())
    }

    pub fn scalar<R: Ring<Elem = E>>(ring: &R, s: E) -> Self {
        Mat2::new(s.clone(), ring.zero(), ring.zero(), s)
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, rhs: &Self) -> Self {
        let e = |x: &E, y: &E, z: &E, w: &E| ring.add(&ring.mul(x, y), &ring.mul(z, w));
        Mat2::new(
            e(&self.a, &rhs.a, &self.b, &rhs.c),
            e(&self.a, &rhs.b, &self.b, &rhs.d),
            e(&self.c, &rhs.a, &self.d, &rhs.c),
            e(&self.c, &rhs.b, &self.d, &rhs.d),
        )
    }

    pub fn det<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.sub(&ring.mul(&self.a, &self.d), &ring.mul(&self.b, &self.c))
    }
}

impl<E: fmt::Display> fmt::Display for Mat2<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Sign `ε` of a solution: `M_n = ε · Id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl<E: Clone + PartialEq> Mat2<E> {
    /// `Some(ε)` when the matrix is `ε·Id`. `+Id` is tested first, so over
    /// Z/2Z (where the two coincide) the answer is `+1`.
    pub fn pm_identity<R: Ring<Elem = E>>(&self, ring: &R) -> Option<Sign> {
        if self.b != ring.zero() || self.c != ring.zero() || self.a != self.d {
            return None;
        }
        if self.a == ring.one() {
            Some(Sign::Plus)
        } else if self.a == ring.neg(&ring.one()) {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

/// `[[a, -1], [1, 0]]`.
pub fn generator<R: Ring>(ring: &R, a: &R::Elem) -> Mat2<R::Elem> {
    Mat2::new(a.clone(), ring.neg(&ring.one()), ring.one(), ring.zero())
}

/// `M_n(seq)`. The empty product is the identity.
pub fn eval_mn<R: Ring>(ring: &R, seq: &[R::Elem]) -> Mat2<R::Elem> {
    let mut acc = Mat2::identity(ring);
    for a in seq {
        acc = left_mul_generator(ring, a, &acc);
    }
    acc
}

/// `G(a) · m`, the two-multiplication update used by every running product.
#[inline]
pub fn left_mul_generator<R: Ring>(ring: &R, a: &R::Elem, m: &Mat2<R::Elem>) -> Mat2<R::Elem> {
    Mat2::new(
        ring.sub(&ring.mul(a, &m.a), &m.c),
        ring.sub(&ring.mul(a, &m.b), &m.d),
        m.a.clone(),
        m.b.clone(),
    )
}

/// The continuant `K_i(a_1, …, a_i)`: the determinant of the tridiagonal
/// matrix with `a_1, …, a_i` on the diagonal and ones beside it, computed by
/// `K_i = a_i K_{i-1} - K_{i-2}` from `K_{-1} = 0`, `K_0 = 1`.
pub fn continuant<R: Ring>(ring: &R, seq: &[R::Elem]) -> R::Elem {
    let mut prev = ring.zero();
    let mut cur = ring.one();
    for a in seq {
        let next = ring.sub(&ring.mul(a, &cur), &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `M_n` assembled from four continuants:
/// `[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)], [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]`.
pub fn mn_via_continuants<R: Ring>(ring: &R, seq: &[R::Elem]) -> Result<Mat2<R::Elem>> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::TooShort { need: 2, got: n });
    }
    Ok(Mat2::new(
        continuant(ring, seq),
        ring.neg(&continuant(ring, &seq[1..])),
        continuant(ring, &seq[..n - 1]),
        ring.neg(&continuant(ring, &seq[1..n - 1])),
    ))
}

/// `|SL_2(Z/NZ)| = N^3 ∏_{p | N} (1 - 1/p^2)`.
pub fn sl2_order(n: u32) -> u64 {
    let mut order = (n as u64).pow(3);
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            order = order / (p * p) * (p * p - 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        order = order / (m * m) * (m * m - 1);
    }
    order
}

/// Order of `G(k)` in `PSL_2(Z/NZ)`: the least `m >= 1` with `G(k)^m = ±Id`.
/// This is the length of the minimal `k`-monomial solution.
pub fn psl2_order(ring: &Zn, k: u32) -> Result<u64> {
    let bound = sl2_order(ring.modulus());
    let g = generator(ring, &(k % ring.modulus()));
    let mut acc = g.clone();
    for m in 1..=bound {
        if acc.pm_identity(ring).is_some() {
            return Ok(m);
        }
        acc = acc.mul(ring, &g);
    }
    Err(Error::OrderNotFound(bound))
}
