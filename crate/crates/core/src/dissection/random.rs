use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cell, Dissection, Kind};

/// A random valid dissection of the `n`-gon, reproducible from `seed`.
///
/// The polygon is cut by a triangle or quadrilateral standing on its edge
/// from the first to the last vertex, and each remaining piece is cut the
/// same way.
pub fn random_dissection(n: usize, kind: Kind, seed: u64) -> Dissection {
    assert!(n >= 3, "a dissection needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Dissection {
        n,
        kind,
        cells: Vec::new(),
        pairs: Vec::new(),
    };
    let mut stack = vec![(1..=n).collect::<Vec<usize>>()];
    while let Some(poly) = stack.pop() {
        let k = poly.len();
        let last = k - 1;
        let quad = k >= 4 && rng.gen_bool(0.5);
        if quad {
            let i = rng.gen_range(1..last - 1);
            let j = rng.gen_range(i + 1..last);
            let cell = vec![poly[0], poly[i], poly[j], poly[last]];
            push_quad(&mut d, &mut rng, cell);
            for piece in [&poly[..=i], &poly[i..=j], &poly[j..]] {
                if piece.len() >= 3 {
                    stack.push(piece.to_vec());
                }
            }
        } else {
            let i = rng.gen_range(1..last);
            let w = triangle_weight(kind, &mut rng);
            d.cells
                .push(Cell::new(vec![poly[0], poly[i], poly[last]], w));
            for piece in [&poly[..=i], &poly[i..]] {
                if piece.len() >= 3 {
                    stack.push(piece.to_vec());
                }
            }
        }
    }
    d
}

fn triangle_weight(kind: Kind, rng: &mut ChaCha8Rng) -> Option<u32> {
    let plus = rng.gen_bool(0.5);
    match kind {
        Kind::Plain34 => None,
        Kind::WeightedFirst => Some(if plus { 1 } else { 2 }),
        Kind::WeightedSecond => Some(if plus { 1 } else { 3 }),
    }
}

fn push_quad(d: &mut Dissection, rng: &mut ChaCha8Rng, cell: Vec<usize>) {
    match d.kind {
        Kind::Plain34 => d.cells.push(Cell::new(cell, None)),
        Kind::WeightedFirst => d.cells.push(Cell::new(cell, Some(0))),
        Kind::WeightedSecond => match rng.gen_range(0..3) {
            0 => d.cells.push(Cell::new(cell, Some(0))),
            1 => d.cells.push(Cell::new(cell, Some(2))),
            _ => {
                let k = d.cells.len();
                let s = rng.gen_range(0..2);
                let (a, b, c, e) = (cell[s], cell[s + 1], cell[s + 2], cell[(s + 3) % 4]);
                d.cells.push(Cell::new(vec![a, b, c], Some(2)));
                d.cells.push(Cell::new(vec![a, c, e], Some(2)));
                d.pairs.push([k, k + 1]);
            }
        },
    }
}
