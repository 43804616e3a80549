//! Constructions: gluing a cell onto the edge `(n, 1)`, realizing solutions as
//! dissections, triangulations and the quadrilateral-elimination rewrite.

use std::collections::HashSet;

use super::{Cell, Dissection, Kind};
use crate::error::{Error, Result};
use crate::reduce::find_decomposition;
use crate::ring::{Ring, Zn};
use crate::seq::{format_seq, Dihedral};
use crate::solution::check_solution;

/// A cell that [`attach_cell`] glues onto the edge `(n, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseCell {
    Triangle {
        weight: Option<u32>,
    },
    Quad {
        weight: Option<u32>,
    },
    /// Two paired weight-2 triangles. With `through_last` the diagonal joins
    /// `n` and `n + 2`, otherwise `n + 1` and `1`.
    SplitQuad {
        through_last: bool,
    },
}

impl BaseCell {
    pub fn size(self) -> usize {
        match self {
            BaseCell::Triangle { .. } => 3,
            _ => 4,
        }
    }

    /// The tuple `b` with `quiddity(attach_cell(d, self)) = quiddity(d) ⊕ b`.
    pub fn base_solution(self) -> Vec<u32> {
        match self {
            BaseCell::Triangle { weight } => vec![weight.unwrap_or(1); 3],
            BaseCell::Quad { weight } => vec![weight.unwrap_or(0); 4],
            BaseCell::SplitQuad { through_last: true } => vec![0, 2, 0, 2],
            BaseCell::SplitQuad {
                through_last: false,
            } => vec![2, 0, 2, 0],
        }
    }

    pub fn is_legal(self, kind: Kind) -> bool {
        use BaseCell::*;
        matches!(
            (kind, self),
            (
                Kind::Plain34,
                Triangle { weight: None } | Quad { weight: None }
            ) | (
                Kind::WeightedFirst,
                Triangle {
                    weight: Some(1 | 2)
                } | Quad { weight: Some(0) }
            ) | (
                Kind::WeightedSecond,
                Triangle {
                    weight: Some(1 | 3)
                } | Quad {
                    weight: Some(0 | 2)
                }
            ) | (Kind::WeightedSecond, SplitQuad { .. })
        )
    }
}

/// The single-cell solutions of each kind, in the order decompositions are
/// tried.
pub fn base_cells(kind: Kind) -> Vec<BaseCell> {
    use BaseCell::*;
    match kind {
        Kind::Plain34 => vec![Triangle { weight: None }, Quad { weight: None }],
        Kind::WeightedFirst => vec![
            Triangle { weight: Some(1) },
            Triangle { weight: Some(2) },
            Quad { weight: Some(0) },
        ],
        Kind::WeightedSecond => vec![
            Triangle { weight: Some(1) },
            Triangle { weight: Some(3) },
            Quad { weight: Some(0) },
            Quad { weight: Some(2) },
            SplitQuad { through_last: true },
            SplitQuad {
                through_last: false,
            },
        ],
    }
}

fn check_kind(d: &Dissection, kind: Kind) -> Result<()> {
    if d.kind != kind {
        return Err(Error::KindMismatch(format!(
            "expected {kind}, got {}",
            d.kind
        )));
    }
    Ok(())
}

/// The base cell alone, labeled so that its quiddity is exactly
/// `base.base_solution()`.
pub fn single_cell(kind: Kind, base: BaseCell) -> Result<Dissection> {
    if !base.is_legal(kind) {
        return Err(Error::KindMismatch(format!(
            "{base:?} is not a {kind} cell"
        )));
    }
    let (cells, pairs) = match base {
        BaseCell::Triangle { weight } => (vec![Cell::new(vec![1, 2, 3], weight)], vec![]),
        BaseCell::Quad { weight } => (vec![Cell::new(vec![1, 2, 3, 4], weight)], vec![]),
        BaseCell::SplitQuad { through_last: true } => (
            vec![
                Cell::new(vec![1, 2, 3], Some(2)),
                Cell::new(vec![1, 3, 4], Some(2)),
            ],
            vec![[0, 1]],
        ),
        BaseCell::SplitQuad {
            through_last: false,
        } => (
            vec![
                Cell::new(vec![1, 2, 4], Some(2)),
                Cell::new(vec![2, 3, 4], Some(2)),
            ],
            vec![[0, 1]],
        ),
    };
    Ok(Dissection {
        n: base.size(),
        kind,
        cells,
        pairs,
    })
}

/// Glue `base` onto the edge `(n, 1)`. The new vertices are `n + 1, …` and
/// the quiddity becomes `quiddity(d) ⊕ base.base_solution()`.
pub fn attach_cell(d: &Dissection, base: BaseCell) -> Result<Dissection> {
    if !base.is_legal(d.kind) {
        return Err(Error::KindMismatch(format!(
            "{base:?} is not a {} cell",
            d.kind
        )));
    }
    let n = d.n;
    let mut out = d.clone();
    match base {
        BaseCell::Triangle { weight } => out.cells.push(Cell::new(vec![n, n + 1, 1], weight)),
        BaseCell::Quad { weight } => out.cells.push(Cell::new(vec![n, n + 1, n + 2, 1], weight)),
        BaseCell::SplitQuad { through_last } => {
            let k = out.cells.len();
            if through_last {
                out.cells.push(Cell::new(vec![n, n + 1, n + 2], Some(2)));
                out.cells.push(Cell::new(vec![n, n + 2, 1], Some(2)));
            } else {
                out.cells.push(Cell::new(vec![n, n + 1, 1], Some(2)));
                out.cells.push(Cell::new(vec![n + 1, n + 2, 1], Some(2)));
            }
            out.pairs.push([k, k + 1]);
        }
    }
    out.n = n + base.size() - 2;
    Ok(out)
}

fn require_solution(ring: &Zn, seq: &[u32]) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::TooShort {
            need: 3,
            got: seq.len(),
        });
    }
    if check_solution(ring, seq).is_none() {
        return Err(Error::NotASolution(format_seq(seq)));
    }
    Ok(())
}

/// A dissection of the given kind whose quiddity is exactly `seq`.
///
/// Peels whitelisted cells off with [`find_decomposition`] until a single
/// cell remains.
pub fn build_dissection(kind: Kind, seq: &[u32]) -> Result<Dissection> {
    let ring = kind.ring();
    let seq: Vec<u32> = seq.iter().map(|&x| x % ring.modulus()).collect();
    require_solution(&ring, &seq)?;
    let bases = base_cells(kind);
    let whitelist: Vec<Vec<u32>> = bases.iter().map(|b| b.base_solution()).collect();
    build_rec(kind, &ring, &seq, &bases, &whitelist)
}

fn build_rec(
    kind: Kind,
    ring: &Zn,
    seq: &[u32],
    bases: &[BaseCell],
    whitelist: &[Vec<u32>],
) -> Result<Dissection> {
    let n = seq.len();
    for (b, w) in bases.iter().zip(whitelist) {
        if w.len() != n {
            continue;
        }
        if let Some(t) = Dihedral::all(n).find(|t| t.apply(w) == seq) {
            return Ok(single_cell(kind, *b)?.relabel(t));
        }
    }
    let witness = find_decomposition(ring, seq, Some(whitelist))?
        .ok_or_else(|| Error::NoBaseDecomposition(format_seq(seq)))?;
    let base = bases[whitelist
        .iter()
        .position(|w| *w == witness.right.seq)
        .unwrap()];
    let left = build_rec(kind, ring, &witness.left.seq, bases, whitelist)?;
    let glued = attach_cell(&left, base)?;
    Ok(glued.relabel(witness.transform.inverse(n)))
}

fn units(ring: &Zn) -> Vec<u32> {
    let m = ring.neg(&1);
    if m == 1 {
        vec![1]
    } else {
        vec![1, m]
    }
}

/// Depth-first peeling of ears: `s = r ⊕ (ε, ε, ε)` where `ε` is the entry
/// being removed. With `keep_unit`, only peel when `r` still has a unit
/// entry or is a triangle.
fn peel(
    ring: &Zn,
    seq: &[u32],
    keep_unit: bool,
    dead: &mut HashSet<Vec<u32>>,
) -> Option<Vec<Cell>> {
    let n = seq.len();
    let us = units(ring);
    if n == 3 {
        return (us.contains(&seq[0]) && seq.iter().all(|&x| x == seq[0]))
            .then(|| vec![Cell::new(vec![1, 2, 3], Some(seq[0]))]);
    }
    for i in 0..n {
        let eps = seq[i];
        if !us.contains(&eps) {
            continue;
        }
        let t = Dihedral {
            rotation: (i + 1) % n,
            reflected: false,
        };
        let moved = t.apply(seq);
        let mut r = moved[..n - 1].to_vec();
        r[0] = ring.sub(&r[0], &eps);
        r[n - 2] = ring.sub(&r[n - 2], &eps);
        if keep_unit && r.len() > 3 && !r.iter().any(|x| us.contains(x)) {
            continue;
        }
        if dead.contains(&r) {
            continue;
        }
        match peel(ring, &r, keep_unit, dead) {
            Some(mut cells) => {
                cells.push(Cell::new(vec![n - 1, n, 1], Some(eps)));
                let back = t.inverse(n);
                let mut new_of_old = vec![0usize; n + 1];
                for j in 0..n {
                    new_of_old[back.source(j, n) + 1] = j + 1;
                }
                return Some(
                    cells
                        .into_iter()
                        .map(|c| {
                            Cell::new(
                                c.vertices.iter().map(|&v| new_of_old[v]).collect(),
                                c.weight,
                            )
                        })
                        .collect(),
                );
            }
            None => {
                dead.insert(r);
            }
        }
    }
    None
}

/// An all-triangle dissection with quiddity exactly `seq`.
///
/// Requires a unit entry: nonzero for N = 2, 3 and `±1` for N = 4.
pub fn triangulate(kind: Kind, seq: &[u32]) -> Result<Dissection> {
    let ring = kind.ring();
    let seq: Vec<u32> = seq.iter().map(|&x| x % ring.modulus()).collect();
    require_solution(&ring, &seq)?;
    if !seq.iter().any(|x| units(&ring).contains(x)) {
        return Err(Error::Precondition(format!(
            "({}) has no entry equal to ±1 mod {}",
            format_seq(&seq),
            ring.modulus()
        )));
    }
    let cells = peel(&ring, &seq, true, &mut HashSet::new())
        .or_else(|| peel(&ring, &seq, false, &mut HashSet::new()))
        .ok_or_else(|| {
            Error::Precondition(format!("no triangulation of ({})", format_seq(&seq)))
        })?;
    let cells = cells
        .into_iter()
        .map(|c| Cell {
            weight: if kind.is_weighted() { c.weight } else { None },
            ..c
        })
        .collect();
    Ok(Dissection {
        n: seq.len(),
        kind,
        cells,
        pairs: vec![],
    })
}

/// Experimental: exhaustive search for a triangulation with triangle weights
/// `±1` whose weight sums mod N equal `seq`, for any modulus.
pub fn find_triangulation(ring: &Zn, seq: &[u32]) -> Result<Option<Vec<Cell>>> {
    let seq: Vec<u32> = seq.iter().map(|&x| x % ring.modulus()).collect();
    require_solution(ring, &seq)?;
    Ok(peel(ring, &seq, false, &mut HashSet::new()))
}

/// Replace each triangle of weight `ε` glued to a weight-0 quadrilateral by a
/// fan of three triangles with weights `ε, -ε, ε` from the triangle's apex,
/// until no quadrilateral is left. The quiddity does not change.
pub fn quad_elimination_rewrite(d: &Dissection) -> Result<Dissection> {
    check_kind(d, Kind::WeightedFirst)?;
    d.ensure_valid()?;
    if d.quad_count() == 0 {
        return Ok(d.clone());
    }
    if d.triangle_count() == 0 {
        return Err(Error::Precondition(
            "every cell is a quadrilateral, so the quiddity is zero".into(),
        ));
    }
    let ring = d.kind.ring();
    let mut cells = d.cells.clone();
    loop {
        let mut hit = None;
        'search: for (ti, t) in cells.iter().enumerate().filter(|(_, c)| c.is_triangle()) {
            for (qi, q) in cells.iter().enumerate().filter(|(_, c)| !c.is_triangle()) {
                if t.vertices.iter().filter(|v| q.vertices.contains(v)).count() == 2 {
                    hit = Some((ti, qi));
                    break 'search;
                }
            }
        }
        let Some((ti, qi)) = hit else { break };
        let tri = cells[ti].clone();
        let quad = cells[qi].clone();
        let eps = tri.weight.expect("validated weight");
        let apex = *tri
            .vertices
            .iter()
            .find(|v| !quad.vertices.contains(v))
            .unwrap();
        let mut pent = quad.vertices.clone();
        pent.push(apex);
        pent.sort_unstable();
        let at = pent.iter().position(|&v| v == apex).unwrap();
        pent.rotate_left(at);
        let neg = ring.neg(&eps);
        for (k, w) in [(1, eps), (2, neg), (3, eps)] {
            cells.push(Cell::new(vec![apex, pent[k], pent[k + 1]], Some(w)));
        }
        let (hi, lo) = (ti.max(qi), ti.min(qi));
        cells.remove(hi);
        cells.remove(lo);
    }
    if cells.iter().any(|c| !c.is_triangle()) {
        return Err(Error::Precondition(
            "a quadrilateral has no triangle neighbour".into(),
        ));
    }
    Ok(Dissection {
        n: d.n,
        kind: d.kind,
        cells,
        pairs: vec![],
    })
}
