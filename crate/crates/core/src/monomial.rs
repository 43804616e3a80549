//! Constant ("monomial") solutions `(k, …, k)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{eval_mn, psl2_order, Mat2};
use crate::reduce::{find_decomposition, DecompositionWitness};
use crate::ring::{Integers, Zn};
use crate::solution::Solution;

/// The shortest constant solution with entry `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub modulus: u32,
    pub k: u32,
    pub minimal_size: usize,
    pub irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<DecompositionWitness>,
}

/// Its length is the order of `G(k)` in `PSL_2(Z/NZ)`. `(0,0)` counts as
/// reducible.
pub fn minimal_monomial(ring: &Zn, k: u32) -> Result<MonomialRecord> {
    let k = k % ring.modulus();
    let m = psl2_order(ring, k)? as usize;
    let seq = vec![k; m];
    let witness = if m >= 3 {
        find_decomposition(ring, &seq, None)?
    } else {
        None
    };
    Ok(MonomialRecord {
        modulus: ring.modulus(),
        k,
        minimal_size: m,
        irreducible: m >= 3 && witness.is_none(),
        witness,
    })
}

/// `(l, …, l)` of length `2l` modulo `l^2`.
pub fn perfect_square_family(l: u32) -> Result<(Zn, Solution)> {
    prime_power_family(l, 2, u128::MAX)
}

/// `(l, …, l)` of length `2 l^{e-1}` modulo `l^e`. The check costs one
/// generator multiplication per entry, which is held to `work_bound`.
pub fn prime_power_family(l: u32, e: u32, work_bound: u128) -> Result<(Zn, Solution)> {
    if l < 2 || e < 2 {
        return Err(Error::Precondition(format!(
            "need l >= 2 and e >= 2, got l={l}, e={e}"
        )));
    }
    let modulus = (l as u64)
        .checked_pow(e)
        .filter(|&m| m <= u32::MAX as u64)
        .ok_or_else(|| Error::Precondition(format!("{l}^{e} does not fit the modulus type")))?;
    let len = 2 * (l as u128).pow(e - 1);
    if len > work_bound {
        return Err(Error::WorkBound {
            estimate: len,
            bound: work_bound,
        });
    }
    let ring = Zn::new(modulus as u32);
    let sol = Solution::new(&ring, vec![l % ring.modulus(); len as usize])?;
    Ok((ring, sol))
}

/// `M_n(2, …, 2) = [[n + 1, -n], [n, 1 - n]]` over the integers.
pub fn all_twos_closed_form(n: u64) -> Mat2<BigInt> {
    let n = BigInt::from(n);
    let one = BigInt::from(1);
    Mat2::new(&n + &one, -&n, n.clone(), &one - &n)
}

/// `M_n(2, …, 2)` by explicit multiplication, for comparison with
/// [`all_twos_closed_form`].
pub fn all_twos_product(n: usize) -> Mat2<BigInt> {
    eval_mn(&Integers, &vec![BigInt::from(2); n])
}

/// Every `(a, b)` making `(a, k, …, k, b)` of length `n` a solution, by
/// exhaustive search.
pub fn boundary_classification(ring: &Zn, k: u32, n: usize) -> Result<Vec<(u32, u32)>> {
    if n < 3 {
        return Err(Error::TooShort { need: 3, got: n });
    }
    let k = k % ring.modulus();
    let inner = eval_mn(ring, &vec![k; n - 2]);
    let mut out = Vec::new();
    for a in 0..ring.modulus() {
        let left = crate::matrix::generator(ring, &a);
        let p = inner.mul(ring, &left);
        for b in 0..ring.modulus() {
            if crate::matrix::left_mul_generator(ring, &b, &p)
                .pm_identity(ring)
                .is_some()
            {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, q)` with `p < q` when `n = p q` for distinct primes.
pub fn distinct_semiprime(n: u32) -> Option<(u32, u32)> {
    let p = (2..n).find(|&d| n.is_multiple_of(d))?;
    let q = n / p;
    (q != p && is_prime(q)).then_some((p, q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremLine {
    pub statement: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub modulus: u32,
    pub records: Vec<MonomialRecord>,
    pub lines: Vec<TheoremLine>,
    pub pass: bool,
}

/// Checks what is known about irreducibility of monomial solutions mod `N`:
/// for prime `N` every nonzero minimal monomial solution is irreducible, of
/// length at most `N`; for `N = p q` the `p`- and `q`-monomial ones are; and
/// `(2, …, 2)`, `(N-2, …, N-2)` of length `N` are irreducible solutions.
pub fn irreducibility_theorem_check(ring: &Zn) -> Result<TheoremCheck> {
    let n = ring.modulus();
    let records = (0..n)
        .map(|k| minimal_monomial(ring, k))
        .collect::<Result<Vec<_>>>()?;
    let mut lines = Vec::new();
    if is_prime(n) {
        let ok = records.iter().skip(1).all(|r| r.irreducible);
        lines.push(TheoremLine {
            statement: format!(
                "N={n} is prime: every k != 0 minimal monomial solution is irreducible"
            ),
            pass: ok,
        });
        // PSL_2(F_2) has an element of order 3.
        let bound = if n == 2 { 3 } else { n as usize };
        let short = records.iter().skip(1).all(|r| r.minimal_size <= bound);
        lines.push(TheoremLine {
            statement: format!("N={n} is prime: every k != 0 minimal size is at most {bound}"),
            pass: short,
        });
    }
    if let Some((p, q)) = distinct_semiprime(n) {
        let ok = records[p as usize].irreducible && records[q as usize].irreducible;
        lines.push(TheoremLine {
            statement: format!(
                "N={p}*{q}: the {p}- and {q}-monomial minimal solutions are irreducible"
            ),
            pass: ok,
        });
    }
    if n >= 3 {
        for k in [2 % n, (n - 2) % n] {
            let seq = vec![k; n as usize];
            let sol = crate::solution::check_solution(ring, &seq).is_some();
            let irr = sol && crate::reduce::is_irreducible(ring, &seq)?;
            lines.push(TheoremLine {
                statement: format!("({k},...,{k}) of length {n} is an irreducible solution"),
                pass: irr,
            });
        }
    }
    let pass = lines.iter().all(|l| l.pass);
    Ok(TheoremCheck {
        modulus: n,
        records,
        lines,
        pass,
    })
}

/// Experimental data on `(l, …, l)` of length `2 l^{e-1}` modulo `l^e`:
/// whether it is the minimal `l`-monomial solution and whether it is
/// irreducible. Nothing here is a proven statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerObservation {
    pub l: u32,
    pub e: u32,
    pub modulus: u32,
    pub length: usize,
    pub minimal_size: usize,
    pub is_minimal: bool,
    pub irreducible: Option<bool>,
}

pub fn prime_power_experiment(l: u32, e: u32, work_bound: u128) -> Result<PrimePowerObservation> {
    let (ring, sol) = prime_power_family(l, e, work_bound)?;
    let minimal = psl2_order(&ring, l)? as usize;
    // The witness search multiplies ~2n * n generators; skip it when too big.
    let len = sol.len();
    let cost = 2 * (len as u128).pow(2);
    let irreducible = if cost <= work_bound {
        Some(find_decomposition(&ring, &sol.seq, None)?.is_none())
    } else {
        None
    };
    Ok(PrimePowerObservation {
        l,
        e,
        modulus: ring.modulus(),
        length: len,
        minimal_size: minimal,
        is_minimal: minimal == len,
        irreducible,
    })
}
