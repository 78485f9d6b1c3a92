//! A few standard small groups, built as permutation groups and tabulated.

use crate::error::Result;
use crate::fingroup::{closure, GroupTable, Permutation};

fn tabulate(gens: &[Permutation], n: usize) -> GroupTable {
    let mut elems: Vec<Permutation> = closure(gens, n).expect("generators on n points").into_iter().collect();
    elems.sort();
    GroupTable::from_permutations(&elems).expect("closed set").0
}

fn rotation(n: usize) -> Permutation {
    Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap()
}

pub fn cyclic(n: usize) -> GroupTable {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    GroupTable::new(n, table).expect("cyclic table")
}

/// The dihedral group of order `2n` (`n >= 3`).
pub fn dihedral(n: usize) -> GroupTable {
    let flip = Permutation::new((0..n).map(|i| (n - i) % n).collect()).unwrap();
    tabulate(&[rotation(n), flip], n)
}

pub fn symmetric(n: usize) -> GroupTable {
    if n < 2 {
        return cyclic(1);
    }
    let swap = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
    tabulate(&[rotation(n), swap], n)
}

pub fn alternating(n: usize) -> GroupTable {
    let gens: Vec<Permutation> = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
        .collect();
    tabulate(&gens, n)
}

/// The quaternion group of order 8, via its regular representation.
pub fn quaternion() -> GroupTable {
    // Points 0..8 stand for 1, i, j, k, -1, -i, -j, -k; left multiplication by i and j.
    let i = Permutation::new(vec![1, 4, 3, 6, 5, 0, 7, 2]).unwrap();
    let j = Permutation::new(vec![2, 7, 4, 1, 6, 3, 0, 5]).unwrap();
    tabulate(&[i, j], 8)
}

pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let (m, n) = (g.order(), h.order());
    let mut table = Vec::with_capacity(m * n * m * n);
    for a in 0..m * n {
        for b in 0..m * n {
            let (a1, a2) = (a / n, a % n);
            let (b1, b2) = (b / n, b % n);
            table.push(g.mul(a1, b1) * n + h.mul(a2, b2));
        }
    }
    GroupTable::new(m * n, table)
}
