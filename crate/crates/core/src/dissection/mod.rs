//! Dissections of a convex `n`-gon into triangles and quadrilaterals, and
//! their quiddities.
//!
//! Vertices are labeled `1..=n` around the polygon. A cell lists its labels in
//! cyclic order, normalized to start at its smallest label.

mod build;
mod random;
mod svg;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, Zn};
use crate::seq::Dihedral;

pub use build::{
    attach_cell, base_cells, build_dissection, find_triangulation, quad_elimination_rewrite,
    single_cell, triangulate, BaseCell,
};
pub use random::random_dissection;
pub use svg::render_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Triangles and quadrilaterals, quiddity = triangle-count parity (N = 2).
    #[serde(rename = "plain-34")]
    Plain34,
    /// Triangles of weight ±1, quadrilaterals of weight 0 (N = 3).
    WeightedFirst,
    /// Triangles of weight ±1, quadrilaterals of weight 0 or 2, and split
    /// quadrilaterals made of two paired weight-2 triangles (N = 4).
    WeightedSecond,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Plain34, Kind::WeightedFirst, Kind::WeightedSecond];

    pub fn modulus(self) -> u32 {
        match self {
            Kind::Plain34 => 2,
            Kind::WeightedFirst => 3,
            Kind::WeightedSecond => 4,
        }
    }

    pub fn ring(self) -> Zn {
        Zn::new(self.modulus())
    }

    pub fn for_modulus(n: u32) -> Result<Kind> {
        match n {
            2 => Ok(Kind::Plain34),
            3 => Ok(Kind::WeightedFirst),
            4 => Ok(Kind::WeightedSecond),
            _ => Err(Error::UnsupportedModulus(n, "2, 3 or 4")),
        }
    }

    pub fn is_weighted(self) -> bool {
        self != Kind::Plain34
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Plain34 => "plain-34",
            Kind::WeightedFirst => "weighted-first",
            Kind::WeightedSecond => "weighted-second",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A triangle or quadrilateral. `weight` is a residue mod N, absent for
/// the plain kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub vertices: Vec<usize>,
    pub weight: Option<u32>,
}

impl Cell {
    pub fn new(vertices: Vec<usize>, weight: Option<u32>) -> Self {
        let mut c = Cell { vertices, weight };
        c.normalize();
        c
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    /// Rotate to start at the smallest label and make the labels increase.
    /// Assumes the labels are in cyclic order in one direction or the other.
    pub fn normalize(&mut self) {
        let v = &mut self.vertices;
        if v.len() < 2 {
            return;
        }
        let descents = (0..v.len())
            .filter(|&i| v[i] > v[(i + 1) % v.len()])
            .count();
        if descents > 1 {
            v.reverse();
        }
        let pos = (0..v.len()).min_by_key(|&i| v[i]).unwrap();
        v.rotate_left(pos);
    }

    /// Boundary edges as `(low, high)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dissection {
    pub n: usize,
    pub kind: Kind,
    pub cells: Vec<Cell>,
    /// Index pairs of weight-2 triangles forming a split quadrilateral.
    #[serde(default)]
    pub pairs: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    TooFewVertices(usize),
    CellSize {
        cell: usize,
        size: usize,
    },
    LabelOutOfRange {
        cell: usize,
        label: usize,
    },
    RepeatedLabel {
        cell: usize,
    },
    NotCyclicOrder {
        cell: usize,
    },
    SideCoverage {
        edge: (usize, usize),
        count: usize,
    },
    DiagonalCoverage {
        edge: (usize, usize),
        count: usize,
    },
    Crossing {
        first: (usize, usize),
        second: (usize, usize),
    },
    AreaSum {
        got: usize,
        expected: usize,
    },
    NotARegion {
        cell: usize,
    },
    Weight {
        cell: usize,
        weight: Option<u32>,
    },
    Pair {
        pair: usize,
        reason: &'static str,
    },
    UnpairedTwo {
        cell: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices(n) => write!(f, "polygon has {n} vertices, need at least 3"),
            Violation::CellSize { cell, size } => write!(f, "cell {cell} has {size} vertices"),
            Violation::LabelOutOfRange { cell, label } => {
                write!(f, "cell {cell} uses label {label} outside 1..=n")
            }
            Violation::RepeatedLabel { cell } => write!(f, "cell {cell} repeats a label"),
            Violation::NotCyclicOrder { cell } => {
                write!(f, "cell {cell} labels are not in cyclic order")
            }
            Violation::SideCoverage { edge, count } => {
                write!(
                    f,
                    "side {}-{} lies in {count} cells, expected 1",
                    edge.0, edge.1
                )
            }
            Violation::DiagonalCoverage { edge, count } => {
                write!(
                    f,
                    "diagonal {}-{} lies in {count} cells, expected 2",
                    edge.0, edge.1
                )
            }
            Violation::Crossing { first, second } => write!(
                f,
                "diagonals {}-{} and {}-{} cross",
                first.0, first.1, second.0, second.1
            ),
            Violation::AreaSum { got, expected } => {
                write!(f, "cells cover {got} triangles' worth, expected {expected}")
            }
            Violation::NotARegion { cell } => {
                write!(f, "cell {cell} is not a region cut out by the diagonals")
            }
            Violation::Weight { cell, weight } => match weight {
                Some(w) => write!(f, "cell {cell} has illegal weight {w}"),
                None => write!(f, "cell {cell} is missing its weight"),
            },
            Violation::Pair { pair, reason } => write!(f, "pair {pair}: {reason}"),
            Violation::UnpairedTwo { cell } => {
                write!(f, "weight-2 triangle {cell} is not in exactly one pair")
            }
        }
    }
}

fn is_side(n: usize, (a, b): (usize, usize)) -> bool {
    b - a == 1 || (a == 1 && b == n)
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Regions cut out of the polygon by a non-crossing set of diagonals, each as
/// a sorted label set.
fn regions(n: usize, diagonals: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut out = vec![(1..=n).collect::<Vec<_>>()];
    for &(a, b) in diagonals {
        let Some(idx) = out.iter().position(|r| {
            let (ia, ib) = (r.binary_search(&a), r.binary_search(&b));
            matches!((ia, ib), (Ok(i), Ok(j)) if j - i > 1 && !(i == 0 && j == r.len() - 1))
        }) else {
            continue;
        };
        let r = out.swap_remove(idx);
        let inner: Vec<usize> = r.iter().copied().filter(|&v| a <= v && v <= b).collect();
        let outer: Vec<usize> = r.iter().copied().filter(|&v| v <= a || v >= b).collect();
        out.push(inner);
        out.push(outer);
    }
    out
}

impl Dissection {
    /// Every violated constraint; empty when the dissection is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n;
        let mut out = Vec::new();
        if n < 3 {
            out.push(Violation::TooFewVertices(n));
            return out;
        }
        let mut shape_ok = true;
        for (i, c) in self.cells.iter().enumerate() {
            let k = c.vertices.len();
            if k != 3 && k != 4 {
                out.push(Violation::CellSize { cell: i, size: k });
                shape_ok = false;
                continue;
            }
            if let Some(&l) = c.vertices.iter().find(|&&l| l == 0 || l > n) {
                out.push(Violation::LabelOutOfRange { cell: i, label: l });
                shape_ok = false;
                continue;
            }
            let distinct: BTreeSet<_> = c.vertices.iter().collect();
            if distinct.len() != k {
                out.push(Violation::RepeatedLabel { cell: i });
                shape_ok = false;
                continue;
            }
            let up = (0..k)
                .filter(|&j| c.vertices[j] > c.vertices[(j + 1) % k])
                .count();
            let down = (0..k)
                .filter(|&j| c.vertices[j] < c.vertices[(j + 1) % k])
                .count();
            if up > 1 && down > 1 {
                out.push(Violation::NotCyclicOrder { cell: i });
                shape_ok = false;
            }
        }

        let area: usize = self
            .cells
            .iter()
            .map(|c| c.vertices.len().saturating_sub(2))
            .sum();
        if area != n - 2 {
            out.push(Violation::AreaSum {
                got: area,
                expected: n - 2,
            });
        }

        if shape_ok {
            let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for c in &self.cells {
                for e in c.edges() {
                    *count.entry(e).or_default() += 1;
                }
            }
            for a in 1..=n {
                let e = if a == n { (1, n) } else { (a, a + 1) };
                let k = count.get(&e).copied().unwrap_or(0);
                if k != 1 {
                    out.push(Violation::SideCoverage { edge: e, count: k });
                }
            }
            let diagonals: BTreeSet<(usize, usize)> =
                count.keys().copied().filter(|&e| !is_side(n, e)).collect();
            for &e in &diagonals {
                if count[&e] != 2 {
                    out.push(Violation::DiagonalCoverage {
                        edge: e,
                        count: count[&e],
                    });
                }
            }
            let diag: Vec<_> = diagonals.iter().copied().collect();
            let mut crossing = false;
            for (i, &d) in diag.iter().enumerate() {
                for &e in &diag[i + 1..] {
                    if crosses(d, e) {
                        out.push(Violation::Crossing {
                            first: d,
                            second: e,
                        });
                        crossing = true;
                    }
                }
            }
            if !crossing {
                let mut regs: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                for r in regions(n, &diagonals) {
                    *regs.entry(r).or_default() += 1;
                }
                for (i, c) in self.cells.iter().enumerate() {
                    let mut key = c.vertices.clone();
                    key.sort_unstable();
                    match regs.get_mut(&key) {
                        Some(k) if *k > 0 => *k -= 1,
                        _ => out.push(Violation::NotARegion { cell: i }),
                    }
                }
            }
        }

        self.validate_weights(&mut out);
        out
    }

    fn validate_weights(&self, out: &mut Vec<Violation>) {
        let mut paired = vec![0usize; self.cells.len()];
        if self.kind != Kind::WeightedSecond && !self.pairs.is_empty() {
            out.push(Violation::Pair {
                pair: 0,
                reason: "only the weighted-second kind has pairs",
            });
        }
        if self.kind == Kind::WeightedSecond {
            for (p, &[i, j]) in self.pairs.iter().enumerate() {
                let (Some(a), Some(b)) = (self.cells.get(i), self.cells.get(j)) else {
                    out.push(Violation::Pair {
                        pair: p,
                        reason: "cell index out of range",
                    });
                    continue;
                };
                if i == j {
                    out.push(Violation::Pair {
                        pair: p,
                        reason: "a cell is paired with itself",
                    });
                    continue;
                }
                if !(a.is_triangle()
                    && b.is_triangle()
                    && a.weight == Some(2)
                    && b.weight == Some(2))
                {
                    out.push(Violation::Pair {
                        pair: p,
                        reason: "both cells must be weight-2 triangles",
                    });
                    continue;
                }
                let shared = a.vertices.iter().filter(|v| b.vertices.contains(v)).count();
                if shared != 2 {
                    out.push(Violation::Pair {
                        pair: p,
                        reason: "the triangles must share an edge",
                    });
                    continue;
                }
                paired[i] += 1;
                paired[j] += 1;
            }
        }
        for (i, c) in self.cells.iter().enumerate() {
            let tri = c.is_triangle();
            let legal = match (self.kind, c.weight) {
                (Kind::Plain34, None) => true,
                (Kind::Plain34, Some(_)) => false,
                (_, None) => false,
                (Kind::WeightedFirst, Some(w)) => {
                    if tri {
                        w == 1 || w == 2
                    } else {
                        w == 0
                    }
                }
                (Kind::WeightedSecond, Some(w)) => {
                    if tri {
                        w == 1 || w == 3 || w == 2
                    } else {
                        w == 0 || w == 2
                    }
                }
            };
            if !legal {
                out.push(Violation::Weight {
                    cell: i,
                    weight: c.weight,
                });
            } else if self.kind == Kind::WeightedSecond
                && tri
                && c.weight == Some(2)
                && paired[i] != 1
            {
                out.push(Violation::UnpairedTwo { cell: i });
            }
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDissection(v))
        }
    }

    /// Quiddity without validation.
    pub fn quiddity_unchecked(&self) -> Vec<u32> {
        let ring = self.kind.ring();
        let mut q = vec![0u32; self.n];
        for c in &self.cells {
            let w = match self.kind {
                Kind::Plain34 => u32::from(c.is_triangle()),
                _ => c.weight.unwrap_or(0),
            };
            for &v in &c.vertices {
                q[v - 1] = ring.add(&q[v - 1], &w);
            }
        }
        q
    }

    /// Triangle-count parity (plain kind) or weight sum mod N at each vertex.
    pub fn quiddity(&self) -> Result<Vec<u32>> {
        self.ensure_valid()?;
        Ok(self.quiddity_unchecked())
    }

    /// Relabel so that `quiddity(relabel(d, t)) == t.apply(quiddity(d))`.
    pub fn relabel(&self, t: Dihedral) -> Dissection {
        let n = self.n;
        let mut new_of_old = vec![0usize; n + 1];
        for i in 0..n {
            new_of_old[t.source(i, n) + 1] = i + 1;
        }
        let cells = self
            .cells
            .iter()
            .map(|c| {
                Cell::new(
                    c.vertices.iter().map(|&v| new_of_old[v]).collect(),
                    c.weight,
                )
            })
            .collect();
        Dissection {
            n,
            kind: self.kind,
            cells,
            pairs: self.pairs.clone(),
        }
    }

    /// Cells sorted, pairs re-indexed; a canonical layout for comparisons.
    pub fn sorted(&self) -> Dissection {
        let mut idx: Vec<usize> = (0..self.cells.len()).collect();
        idx.sort_by(|&a, &b| self.cells[a].cmp(&self.cells[b]));
        let mut pos = vec![0; idx.len()];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = new;
        }
        let mut pairs: Vec<[usize; 2]> = self
            .pairs
            .iter()
            .map(|&[a, b]| {
                let (x, y) = (pos[a], pos[b]);
                [x.min(y), x.max(y)]
            })
            .collect();
        pairs.sort_unstable();
        Dissection {
            n: self.n,
            kind: self.kind,
            cells: idx.iter().map(|&i| self.cells[i].clone()).collect(),
            pairs,
        }
    }

    pub fn triangle_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_triangle()).count()
    }

    pub fn quad_count(&self) -> usize {
        self.cells.len() - self.triangle_count()
    }
}
