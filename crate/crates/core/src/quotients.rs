//! Explicit enumeration of the index-`n` normal subgroups of `BS(p,q)`.
//!
//! Every finite quotient is metacyclic: writing `u` for the image of `a^p`
//! (which generates the image of `<a>`, a cyclic normal subgroup of order
//! `d`) and `y` for the image of `t`, the quotient of order `n = c d` is
//!
//! ```text
//! < u, y | u^d = 1, y u y^-1 = u^r, y^c = u^s >,   r = q p^-1 (mod d),
//! ```
//!
//! and it exists exactly when `r^c = 1 (mod d)` and `s (r - 1) = 0 (mod d)`.
//! Each admissible `(d, s)` with `1 <= s <= d` is a different normal subgroup.

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd_nonneg, is_prime, mod_inverse, mod_pow, mult_order, residue};
use crate::bsgroups::BsParams;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fingroup::GroupTable;

/// Default upper bound on the order of a realized quotient table.
pub const DEFAULT_REALIZATION_BOUND: u64 = 2000;

/// One index-`n` normal subgroup, described by its metacyclic quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MetacyclicQuotient {
    pub n: u64,
    /// Order of the image of `a`.
    pub d: u64,
    /// `n / d`, the order of the cyclic top.
    pub c: u64,
    /// `y^c = u^s`, with `1 <= s <= d`.
    pub s: u64,
    /// Twist: `y u y^-1 = u^r`. Stored as 0 when `d = 1`.
    pub r: u64,
}

impl MetacyclicQuotient {
    /// Check every defining congruence against `params`.
    pub fn validate(&self, params: &BsParams) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidQuotient(msg));
        let Self { n, d, c, s, r } = *self;
        if d == 0 || c == 0 || d.checked_mul(c) != Some(n) {
            return fail(format!("n = {n} is not c*d = {c}*{d}"));
        }
        if !(1..=d).contains(&s) {
            return fail(format!("s = {s} outside [1, {d}]"));
        }
        if d == 1 {
            return if r == 0 { Ok(()) } else { fail("r must be 0 when d = 1".into()) };
        }
        if gcd_nonneg(d as i64, params.p()) != 1 || gcd_nonneg(d as i64, params.q()) != 1 {
            return fail(format!("d = {d} is not coprime to pq"));
        }
        if r >= d || gcd_nonneg(r as i64, d as i64) != 1 {
            return fail(format!("r = {r} is not a unit modulo {d}"));
        }
        let p_inv = mod_inverse(params.p(), d)?;
        if (residue(params.q(), d) as u128 * p_inv as u128 % d as u128) as u64 != r {
            return fail(format!("r = {r} is not q/p modulo {d}"));
        }
        if mod_pow(r, c, d) != 1 {
            return fail(format!("r^c = {r}^{c} is not 1 modulo {d}"));
        }
        if (s as u128 * (r + d - 1) as u128) % d as u128 != 0 {
            return fail(format!("s (r - 1) is not 0 modulo {d}"));
        }
        Ok(())
    }
}

/// All index-`n` normal subgroups, sorted by `(d, s)`.
pub fn enumerate_quotients(params: &BsParams, n: u64) -> Result<Vec<MetacyclicQuotient>> {
    enumerate_quotients_with(Strategy::default(), params, n)
}

pub fn enumerate_quotients_with(
    strategy: Strategy,
    params: &BsParams,
    n: u64,
) -> Result<Vec<MetacyclicQuotient>> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let per_divisor = strategy.try_map(&divisors(n), |&d| quotients_for_divisor(params, n, d))?;
    Ok(per_divisor.into_iter().flatten().collect())
}

fn quotients_for_divisor(params: &BsParams, n: u64, d: u64) -> Result<Vec<MetacyclicQuotient>> {
    let c = n / d;
    if d == 1 {
        return Ok(vec![MetacyclicQuotient { n, d, c, s: 1, r: 0 }]);
    }
    if gcd_nonneg(d as i64, params.p()) != 1 || gcd_nonneg(d as i64, params.q()) != 1 {
        return Ok(Vec::new());
    }
    let r = (residue(params.q(), d) as u128 * mod_inverse(params.p(), d)? as u128 % d as u128) as u64;
    if mod_pow(r, c, d) != 1 {
        return Ok(Vec::new());
    }
    let r_minus_one = (r + d - 1) % d;
    Ok((1..=d)
        .filter(|&s| (s as u128 * r_minus_one as u128) % d as u128 == 0)
        .map(|s| MetacyclicQuotient { n, d, c, s, r })
        .collect())
}

/// A quotient realized as a multiplication table, with the images of the
/// generators `a` and `t`.
#[derive(Debug, Clone)]
pub struct RealizedQuotient {
    pub table: GroupTable,
    pub image_a: usize,
    pub image_t: usize,
}

impl RealizedQuotient {
    /// `x^i y^j` is stored at index `j d + i`.
    pub fn element(quot: &MetacyclicQuotient, i: u64, j: u64) -> usize {
        (j * quot.d + i) as usize
    }
}

pub fn quotient_table(params: &BsParams, quot: &MetacyclicQuotient) -> Result<RealizedQuotient> {
    quotient_table_bounded(params, quot, DEFAULT_REALIZATION_BOUND)
}

/// Build the order-`n` table on normal forms `u^i y^j` (`0 <= i < d`,
/// `0 <= j < c`) with
/// `(u^i1 y^j1)(u^i2 y^j2) = u^(i1 + i2 r^j1) y^(j1 + j2)`, reducing `y^c` to `u^s`.
pub fn quotient_table_bounded(
    params: &BsParams,
    quot: &MetacyclicQuotient,
    bound: u64,
) -> Result<RealizedQuotient> {
    quot.validate(params)?;
    if quot.n > bound {
        return Err(Error::BoundExceeded { order: quot.n, bound });
    }
    let MetacyclicQuotient { n, d, c, s, r } = *quot;
    // r^j mod d for j < c.
    let mut twist = Vec::with_capacity(c as usize);
    let mut acc = 1 % d;
    for _ in 0..c {
        twist.push(acc);
        acc = acc * r % d;
    }
    let order = n as usize;
    let mut table = Vec::with_capacity(order * order);
    for left in 0..n {
        let (i1, j1) = (left % d, left / d);
        for right in 0..n {
            let (i2, j2) = (right % d, right / d);
            let mut i = (i1 + i2 * twist[j1 as usize]) % d;
            let mut j = j1 + j2;
            if j >= c {
                j -= c;
                i = (i + s) % d;
            }
            table.push((j * d + i) as usize);
        }
    }
    let table = GroupTable::new(order, table)?;

    // a^p = u, so a = u^(p^-1 mod d).
    let image_a = if d == 1 { 0 } else { mod_inverse(params.p(), d)? as usize };
    // When c = 1 the generator y is itself u^s.
    let image_t = if c == 1 {
        RealizedQuotient::element(quot, s % d, 0)
    } else {
        RealizedQuotient::element(quot, 0, 1)
    };
    let realized = RealizedQuotient { table, image_a, image_t };
    check_realization(params, quot, &realized)?;
    Ok(realized)
}

fn check_realization(
    params: &BsParams,
    quot: &MetacyclicQuotient,
    rq: &RealizedQuotient,
) -> Result<()> {
    let g = &rq.table;
    let lhs = g.conjugate(rq.image_t, g.pow(rq.image_a, params.p()));
    let rhs = g.pow(rq.image_a, params.q());
    if lhs != rhs {
        return Err(Error::Internal(format!("relator fails in quotient {quot:?}")));
    }
    if g.element_order(rq.image_a) as u64 != quot.d {
        return Err(Error::Internal(format!("image of a has wrong order in {quot:?}")));
    }
    let generated = g.subgroup_closure(&[rq.image_a, rq.image_t].into());
    if generated.len() != g.order() {
        return Err(Error::Internal(format!("images do not generate {quot:?}")));
    }
    Ok(())
}

/// A quotient `C_l x| C_k` in which `t` acts on `<a>` by an automorphism of
/// order `k = ord_l(q/p) >= 2`. Its centre meets `<a>` trivially, so it is not
/// nilpotent.
pub fn nonnilpotent_witness(params: &BsParams, l: u64) -> Result<MetacyclicQuotient> {
    let bad = |reason| Err(Error::BadPrime { params: *params, l, reason });
    if !is_prime(l) {
        return bad("not a prime");
    }
    if params.p() % l as i64 == 0 || params.q() % l as i64 == 0 {
        return bad("divides pq");
    }
    if params.difference()? % l as i64 == 0 {
        return bad("divides q - p, so the image is abelian");
    }
    let r = (residue(params.q(), l) as u128 * mod_inverse(params.p(), l)? as u128 % l as u128) as u64;
    let k = mult_order(r as i64, l)?;
    let n = l.checked_mul(k).ok_or(Error::Overflow("witness order"))?;
    let quot = MetacyclicQuotient { n, d: l, c: k, s: l, r };
    quot.validate(params)?;
    Ok(quot)
}

/// Whether the centre of the realized table meets `<image(a)>` only in the identity.
pub fn center_meets_a_trivially(rq: &RealizedQuotient) -> bool {
    let center = rq.table.center();
    rq.table
        .cyclic_subgroup(rq.image_a)
        .iter()
        .all(|x| *x == 0 || !center.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsgroups::{canonical_pairs, count_normal};
    use crate::fingroup::catalog;

    fn bs(p: i64, q: i64) -> BsParams {
        BsParams::new(p, q).unwrap()
    }

    fn q(n: u64, d: u64, s: u64, r: u64) -> MetacyclicQuotient {
        MetacyclicQuotient { n, d, c: n / d, s, r }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_quotients(&bs(1, 2), 6).unwrap(), vec![q(6, 1, 1, 0), q(6, 3, 3, 2)]);
        assert_eq!(
            enumerate_quotients(&bs(1, 4), 3).unwrap(),
            vec![q(3, 1, 1, 0), q(3, 3, 1, 1), q(3, 3, 2, 1), q(3, 3, 3, 1)]
        );
        assert_eq!(
            enumerate_quotients(&bs(1, 1), 2).unwrap(),
            vec![q(2, 1, 1, 0), q(2, 2, 1, 1), q(2, 2, 2, 1)]
        );
    }

    #[test]
    fn per_divisor_count_is_gcd_with_difference() {
        for b in canonical_pairs(5) {
            let diff = b.q() - b.p();
            for n in 1..=60 {
                let quots = enumerate_quotients(&b, n).unwrap();
                assert_eq!(quots.len() as u64, count_normal(&b, n).unwrap());
                for d in divisors(n) {
                    let k = quots.iter().filter(|x| x.d == d).count() as u64;
                    if k > 0 {
                        assert_eq!(k, gcd_nonneg(d as i64, diff), "{b} n={n} d={d}");
                    }
                }
                for x in &quots {
                    x.validate(&b).unwrap();
                }
            }
        }
    }

    #[test]
    fn validate_rejects_broken_quotients() {
        let b = bs(1, 2);
        assert!(q(6, 3, 3, 2).validate(&b).is_ok());
        assert!(q(6, 3, 1, 2).validate(&b).is_err()); // s (r - 1) != 0
        assert!(q(6, 3, 3, 1).validate(&b).is_err()); // wrong twist
        assert!(q(6, 2, 2, 1).validate(&b).is_err()); // d shares a factor with pq
        assert!(q(3, 3, 3, 2).validate(&b).is_err()); // r^c != 1
        assert!(q(6, 3, 4, 2).validate(&b).is_err()); // s out of range
        assert!(matches!(quotient_table(&b, &q(6, 3, 1, 2)), Err(Error::InvalidQuotient(_))));
    }

    #[test]
    fn realizes_symmetric_group() {
        let rq = quotient_table(&bs(1, 2), &q(6, 3, 3, 2)).unwrap();
        let g = &rq.table;
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.element_order(rq.image_a), 3);
        assert_eq!(g.element_order(rq.image_t), 2);
        // S3 is the only nonabelian group of order 6; compare element-order profiles.
        let profile = |t: &GroupTable| {
            let mut v: Vec<usize> = (0..t.order()).map(|a| t.element_order(a)).collect();
            v.sort();
            v
        };
        assert_eq!(profile(g), profile(&catalog::symmetric(3)));
        assert!(!g.is_dedekind());
    }

    #[test]
    fn realizes_cyclic_groups() {
        let rq = quotient_table(&bs(1, 2), &q(6, 1, 1, 0)).unwrap();
        assert_eq!(rq.table, catalog::cyclic(6));
        assert_eq!(rq.image_a, 0);
        let rq = quotient_table(&bs(1, 1), &q(2, 2, 2, 1)).unwrap();
        assert_eq!(rq.table, catalog::cyclic(2));
    }

    #[test]
    fn distinct_s_give_distinct_y_power() {
        let b = bs(1, 4);
        let quots = enumerate_quotients(&b, 3).unwrap();
        let mut seen = std::collections::HashSet::new();
        for x in quots.iter().filter(|x| x.d == 3) {
            let rq = quotient_table(&b, x).unwrap();
            let yc = rq.table.pow(rq.image_t, x.c as i64);
            assert!(seen.insert(yc));
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn bound_is_enforced() {
        let b = bs(1, 1);
        let big = q(2001, 1, 1, 0);
        assert_eq!(
            quotient_table(&b, &big).map(|_| ()),
            Err(Error::BoundExceeded { order: 2001, bound: 2000 })
        );
        assert!(quotient_table_bounded(&b, &q(12, 1, 1, 0), 10).is_err());
    }

    #[test]
    fn witness_examples() {
        assert_eq!(nonnilpotent_witness(&bs(1, 2), 3), Ok(q(6, 3, 3, 2)));
        assert_eq!(nonnilpotent_witness(&bs(2, 3), 5), Ok(q(10, 5, 5, 4)));
        assert_eq!(nonnilpotent_witness(&bs(1, 2), 7), Ok(q(21, 7, 7, 2)));
        assert!(matches!(nonnilpotent_witness(&bs(1, 2), 2), Err(Error::BadPrime { .. })));
        assert!(matches!(nonnilpotent_witness(&bs(1, 4), 3), Err(Error::BadPrime { .. })));
        assert!(matches!(nonnilpotent_witness(&bs(1, 2), 9), Err(Error::BadPrime { .. })));
    }

    #[test]
    fn witnesses_are_not_nilpotent() {
        for (b, l, order) in [(bs(1, 2), 3, 6), (bs(2, 3), 5, 10), (bs(1, 2), 7, 21)] {
            let w = nonnilpotent_witness(&b, l).unwrap();
            let rq = quotient_table(&b, &w).unwrap();
            assert_eq!(rq.table.order(), order);
            assert!(center_meets_a_trivially(&rq));
            assert!(!rq.table.is_abelian());
            assert!(!rq.table.is_dedekind());
        }
        // D10: dihedral of order 10 has five involutions.
        let rq = quotient_table(&bs(2, 3), &nonnilpotent_witness(&bs(2, 3), 5).unwrap()).unwrap();
        assert_eq!((0..10).filter(|&x| rq.table.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn abelian_quotients_of_z2_are_dedekind() {
        let b = bs(1, 1);
        for n in 1..=12 {
            for x in enumerate_quotients(&b, n).unwrap() {
                let rq = quotient_table(&b, &x).unwrap();
                assert!(rq.table.is_abelian());
                assert!(rq.table.is_dedekind());
            }
        }
    }
}
