//! Coefficient rings for the generator products: Z/NZ and the integers.
//!
//! Residues of Z/NZ are stored as least nonnegative representatives in
//! `u32`. Integer mode (`N = 0`) uses arbitrary precision, since continuants
//! grow exponentially with the sequence length.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The modulus `N`. `N = 0` selects integer mode. `N = 1` is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u32);

impl Modulus {
    pub const INTEGER: Modulus = Modulus(0);

    pub fn new(n: u32) -> Result<Self> {
        if n == 1 {
            return Err(Error::ModulusOne);
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 == 0
    }

    /// The modulus as a ring for modular mode, or an error in integer mode.
    pub fn modular(self) -> Result<Zn> {
        if self.is_integer() {
            Err(Error::IntegerMode)
        } else {
            Ok(Zn::new(self.0))
        }
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u32 {
    fn from(m: Modulus) -> u32 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Commutative ring with unit, with the element type carried separately so
/// that one context value (the modulus) serves every element.
pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

/// The ring Z/NZ, N >= 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zn {
    n: u32,
}

impl Zn {
    pub fn new(n: u32) -> Self {
        assert!(n >= 2, "Z/NZ needs N >= 2, got {n}");
        Zn { n }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.n as i64) as u32
    }

    pub fn reduce_big(&self, v: &BigInt) -> u32 {
        let n = BigInt::from(self.n);
        let r = ((v % &n) + &n) % &n;
        u32::try_from(r).expect("residue fits in u32")
    }

    /// Symmetric representative in (-N/2, N/2], used for display only.
    pub fn symmetric(&self, v: u32) -> i64 {
        let v = v as i64;
        let n = self.n as i64;
        if 2 * v > n {
            v - n
        } else {
            v
        }
    }
}

impl Ring for Zn {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.n
    }

    fn embed(&self, v: i64) -> u32 {
        self.reduce(v)
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.n as u64) as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.n as u64 - *b as u64) % self.n as u64) as u32
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.n as u64) as u32
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.n - *a
        }
    }
}

/// The integers, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn embed(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}
