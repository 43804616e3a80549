//! Solutions of `M_n(a_1, …, a_n) = ±Id` over `Z/NZ`, where `M_n` is the
//! product of the matrices `[[a_i, -1], [1, 0]]`: testing, the gluing sum
//! `⊕`, reducibility, exhaustive enumeration and classification, constant
//! solutions, and polygon dissections realizing solutions for `N = 2, 3, 4`.

pub mod dissection;
pub mod enumerate;
pub mod error;
pub mod expected;
pub mod matrix;
pub mod monomial;
pub mod reduce;
pub mod ring;
pub mod seq;
pub mod solution;

pub use error::{Error, Result};
pub use matrix::{continuant, eval_mn, generator, mn_via_continuants, psl2_order, Mat2, Sign};
pub use reduce::{find_decomposition, is_irreducible, DecompositionWitness};
pub use ring::{Integers, Modulus, Ring, Zn};
pub use seq::{canonicalize, oplus, Dihedral};
pub use solution::{check_solution, Solution};
