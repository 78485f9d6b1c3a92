use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fingroup::Permutation;

/// Largest order for which associativity is checked exhaustively.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 60;

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validate and wrap a row-major `order x order` table.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, got {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidTable(format!("entry {x} out of range")));
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0usize; order];
        for (stamp, a) in (1..).zip(0..order) {
            for b in 0..order {
                let x = table[a * order + b];
                if seen[x] == stamp {
                    return Err(Error::InvalidTable(format!("row {a} repeats {x}")));
                }
                seen[x] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for (stamp, b) in (1..).zip(0..order) {
            for a in 0..order {
                let x = table[a * order + b];
                if seen[x] == stamp {
                    return Err(Error::InvalidTable(format!("column {b} repeats {x}")));
                }
                seen[x] = stamp;
            }
        }
        // Latin rows give a unique right inverse; it must also be a left inverse.
        let mut inverses = vec![0; order];
        for a in 0..order {
            let b = (0..order).find(|&b| table[a * order + b] == 0).unwrap();
            if table[b * order + a] != 0 {
                return Err(Error::InvalidTable(format!("{a} has no two-sided inverse")));
            }
            inverses[a] = b;
        }
        let g = GroupTable { order, table, inverses };
        if order <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..order {
                for b in 0..order {
                    let ab = g.mul(a, b);
                    for c in 0..order {
                        if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                            return Err(Error::InvalidTable(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Table of an explicit permutation group. `elements` must be closed under
    /// composition; the identity is moved to position 0 and the remaining
    /// elements keep their relative order.
    pub fn from_permutations(elements: &[Permutation]) -> Result<(Self, Vec<Permutation>)> {
        let n = elements.first().map(|p| p.len()).unwrap_or(0);
        let id = Permutation::identity(n);
        let mut ordered = vec![id.clone()];
        ordered.extend(elements.iter().filter(|p| **p != id).cloned());
        let index: HashMap<&Permutation, usize> =
            ordered.iter().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != ordered.len() {
            return Err(Error::InvalidTable("duplicate elements".into()));
        }
        let order = ordered.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &ordered {
            for b in &ordered {
                let ab = a.compose(b)?;
                match index.get(&ab) {
                    Some(&i) => table.push(i),
                    None => return Err(Error::NotASubgroup),
                }
            }
        }
        let g = GroupTable::new(order, table)?;
        Ok((g, ordered))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `x * y * x^-1`.
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inverse(x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> BTreeSet<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn cyclic_subgroup(&self, a: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::from([0]);
        let mut x = a;
        while x != 0 {
            out.insert(x);
            x = self.mul(x, a);
        }
        out
    }

    /// The smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut elems = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if elems.insert(y) {
                    frontier.push(y);
                }
            }
        }
        elems
    }

    pub fn is_closed(&self, h: &BTreeSet<usize>) -> bool {
        h.contains(&0)
            && h.iter().all(|&a| a < self.order)
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, h: &BTreeSet<usize>) -> Result<bool> {
        if !self.is_closed(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.is_normal_unchecked(h))
    }

    fn is_normal_unchecked(&self, h: &BTreeSet<usize>) -> bool {
        (0..self.order).all(|x| h.iter().all(|&y| h.contains(&self.conjugate(x, y))))
    }

    /// Whether every subgroup is normal. Checking cyclic subgroups suffices:
    /// every subgroup is generated by its cyclic subgroups, and a join of
    /// normal subgroups is normal.
    pub fn is_dedekind(&self) -> bool {
        let mut done = vec![false; self.order];
        for a in 0..self.order {
            if done[a] {
                continue;
            }
            let h = self.cyclic_subgroup(a);
            if !self.is_normal_unchecked(&h) {
                return false;
            }
            // Generators of the same cyclic subgroup need no second check.
            let k = h.len();
            let mut x = a;
            for e in 1..=k {
                if crate::arith::gcd_u64(e as u64, k as u64) == 1 {
                    done[x] = true;
                }
                x = self.mul(x, a);
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::catalog;

    #[test]
    fn rejects_bad_tables() {
        assert!(GroupTable::new(0, vec![]).is_err());
        assert!(GroupTable::new(2, vec![0, 1, 1, 1]).is_err());
        assert!(GroupTable::new(2, vec![1, 0, 0, 1]).is_err());
        assert!(GroupTable::new(2, vec![0, 1, 1, 0]).is_ok());
        // A Latin square with identity that is not associative (order 5 loop).
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(GroupTable::new(5, loop5), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn subgroup_closure_examples() {
        let c4 = catalog::cyclic(4);
        assert_eq!(c4.subgroup_closure(&BTreeSet::new()), BTreeSet::from([0]));
        assert_eq!(c4.element_order(2), 2);
        assert_eq!(c4.subgroup_closure(&BTreeSet::from([2])), BTreeSet::from([0, 2]));
        let s3 = catalog::symmetric(3);
        let three_cycle = (0..6).find(|&a| s3.element_order(a) == 3).unwrap();
        let h = s3.subgroup_closure(&BTreeSet::from([three_cycle]));
        assert_eq!(h.len(), 3);
        assert!(h.iter().all(|&x| s3.element_order(x) != 2));
    }

    #[test]
    fn normality_examples() {
        let s3 = catalog::symmetric(3);
        let all: BTreeSet<usize> = (0..6).collect();
        assert_eq!(s3.is_normal(&all), Ok(true));
        let rot = (0..6).find(|&a| s3.element_order(a) == 3).unwrap();
        assert_eq!(s3.is_normal(&s3.cyclic_subgroup(rot)), Ok(true));
        let refl = (0..6).find(|&a| s3.element_order(a) == 2).unwrap();
        assert_eq!(s3.is_normal(&s3.cyclic_subgroup(refl)), Ok(false));
        assert_eq!(s3.is_normal(&BTreeSet::from([0, refl, rot])), Err(Error::NotASubgroup));
    }

    #[test]
    fn dedekind_examples() {
        assert!(catalog::cyclic(6).is_dedekind());
        assert!(catalog::quaternion().is_dedekind());
        assert!(!catalog::symmetric(3).is_dedekind());
        assert!(!catalog::dihedral(4).is_dedekind());
    }

    #[test]
    fn power_and_inverse() {
        let q8 = catalog::quaternion();
        for a in 0..8 {
            assert_eq!(q8.mul(a, q8.inverse(a)), 0);
            assert_eq!(q8.pow(a, -1), q8.inverse(a));
            assert_eq!(q8.pow(a, q8.element_order(a) as i64), 0);
        }
        assert_eq!(q8.center().len(), 2);
        assert!(!q8.is_abelian());
    }
}
