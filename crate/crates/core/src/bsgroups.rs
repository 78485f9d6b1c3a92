//! Baumslag-Solitar parameters `BS(p,q) = <t, a | t a^p t^-1 = a^q>` and the
//! exact counts of index-`n` subgroups and normal subgroups for coprime `p, q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd_nonneg, mod_pow_signed};
use crate::error::{Error, Result};
use crate::exec::Strategy;

/// A validated parameter pair: both nonzero and coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BsParams {
    p: i64,
    q: i64,
}

impl BsParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ZeroParameter { p, q });
        }
        let g = gcd_nonneg(p, q);
        if g != 1 {
            return Err(Error::NonCoprimeParameters { p, q, gcd: g });
        }
        Ok(BsParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q - p`, which may be negative or zero.
    pub fn difference(&self) -> Result<i64> {
        self.q.checked_sub(self.p).ok_or(Error::Overflow("q - p"))
    }

    /// The four parameter pairs presenting isomorphic groups.
    pub fn equivalents(&self) -> [BsParams; 4] {
        let (p, q) = (self.p, self.q);
        // i64::MIN has no negation; it is left as is.
        let neg = |x: i64| x.checked_neg().unwrap_or(x);
        [
            BsParams { p, q },
            BsParams { p: neg(p), q: neg(q) },
            BsParams { p: q, q: p },
            BsParams { p: neg(q), q: neg(p) },
        ]
    }

    /// Canonical representative of the isomorphism class: the pair with
    /// `q >= |p|`. For coprime parameters it is unique; `BS(1,-1)` becomes
    /// `BS(-1,1)`.
    pub fn canonical(&self) -> BsParams {
        self.equivalents()
            .into_iter()
            .find(|c| c.q > 0 && c.q.unsigned_abs() >= c.p.unsigned_abs())
            .unwrap_or(*self)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }
}

impl fmt::Display for BsParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Validate `(p, q)` and return the canonical representative of its class.
pub fn canonicalize(p: i64, q: i64) -> Result<BsParams> {
    BsParams::new(p, q).map(|b| b.canonical())
}

/// Number of normal subgroups of index `n`: the sum over divisors `d` of `n`
/// with `q^(n/d) = p^(n/d) (mod d)` of `gcd(d, q - p)`.
pub fn count_normal(params: &BsParams, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let diff = params.difference()?;
    let mut total = 0u64;
    for d in divisors(n) {
        let c = n / d;
        if mod_pow_signed(params.q, c, d) == mod_pow_signed(params.p, c, d) {
            total = total
                .checked_add(gcd_nonneg(d as i64, diff))
                .ok_or(Error::Overflow("count_normal"))?;
        }
    }
    Ok(total)
}

/// Number of subgroups of index `n`: the sum of the divisors of `n` coprime to `pq`.
pub fn count_all(params: &BsParams, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut total = 0u64;
    for d in divisors(n) {
        if gcd_nonneg(d as i64, params.p) == 1 && gcd_nonneg(d as i64, params.q) == 1 {
            total = total.checked_add(d).ok_or(Error::Overflow("count_all"))?;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Normal,
    All,
}

impl Kind {
    pub fn count(self, params: &BsParams, n: u64) -> Result<u64> {
        match self {
            Kind::Normal => count_normal(params, n),
            Kind::All => count_all(params, n),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Normal => "normal",
            Kind::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Formula,
    Oracle,
}

/// Counts `a_1 .. a_N` of one kind for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSequence {
    pub kind: Kind,
    pub params: BsParams,
    pub source: Source,
    counts: Vec<u64>,
}

impl GrowthSequence {
    pub fn new(kind: Kind, params: BsParams, source: Source, counts: Vec<u64>) -> Self {
        GrowthSequence { kind, params, source, counts }
    }

    /// `a_n` for `1 <= n <= len`.
    pub fn get(&self, n: u64) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.counts.get(i as usize)).copied()
    }

    pub fn len(&self) -> u64 {
        self.counts.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

pub fn sequence(kind: Kind, params: &BsParams, max_n: u64) -> Result<GrowthSequence> {
    sequence_with(Strategy::default(), kind, params, max_n)
}

pub fn sequence_with(
    strategy: Strategy,
    kind: Kind,
    params: &BsParams,
    max_n: u64,
) -> Result<GrowthSequence> {
    if max_n == 0 {
        return Err(Error::ZeroIndex);
    }
    let ns: Vec<u64> = (1..=max_n).collect();
    let counts = strategy.try_map(&ns, |&n| kind.count(params, n))?;
    Ok(GrowthSequence::new(kind, *params, Source::Formula, counts))
}

/// Canonical coprime parameters with `1 <= q <= max_q`, ordered by `(q, p)`.
pub fn canonical_pairs(max_q: i64) -> Vec<BsParams> {
    let mut out = Vec::new();
    for q in 1..=max_q {
        for p in -q..=q {
            if let Ok(b) = BsParams::new(p, q) {
                if b.is_canonical() {
                    out.push(b);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sigma;

    fn bs(p: i64, q: i64) -> BsParams {
        BsParams::new(p, q).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert_eq!(BsParams::new(0, 3), Err(Error::ZeroParameter { p: 0, q: 3 }));
        assert_eq!(
            BsParams::new(2, 4),
            Err(Error::NonCoprimeParameters { p: 2, q: 4, gcd: 2 })
        );
        assert!(BsParams::new(-2, 3).is_ok());
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(3, 2), Ok(bs(2, 3)));
        assert_eq!(canonicalize(-2, -3), Ok(bs(2, 3)));
        assert_eq!(canonicalize(1, 1), Ok(bs(1, 1)));
        assert_eq!(canonicalize(-1, -1), Ok(bs(1, 1)));
        assert_eq!(canonicalize(1, -1), Ok(bs(-1, 1)));
        assert_eq!(canonicalize(3, -2), Ok(bs(-2, 3)));
        assert_eq!(canonicalize(-3, 2), Ok(bs(-2, 3)));
        assert!(canonicalize(4, 6).is_err());
    }

    #[test]
    fn canonicalize_is_idempotent_and_class_invariant() {
        for p in -8..=8 {
            for q in -8..=8 {
                let Ok(b) = BsParams::new(p, q) else { continue };
                let c = b.canonical();
                assert_eq!(c.canonical(), c);
                assert!(c.q() >= c.p().abs());
                for e in b.equivalents() {
                    assert_eq!(e.canonical(), c, "{b} ~ {e}");
                }
            }
        }
    }

    #[test]
    fn count_normal_examples() {
        let klein = bs(1, -1);
        assert_eq!(count_normal(&klein, 2), Ok(3));
        assert_eq!(count_normal(&klein, 3), Ok(1));
        assert_eq!(count_normal(&klein, 6), Ok(4));
        assert_eq!(count_normal(&bs(1, 1), 4), Ok(7));
        assert_eq!(count_normal(&bs(2, 3), 52), Ok(2));
        assert_eq!(count_normal(&bs(2, 3), 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn count_all_examples() {
        assert_eq!(count_all(&bs(1, 1), 4), Ok(7));
        assert_eq!(count_all(&bs(1, 2), 12), Ok(4));
        assert_eq!(count_all(&bs(2, 3), 6), Ok(1));
    }

    #[test]
    fn sequence_examples() {
        let s = sequence(Kind::Normal, &bs(1, -1), 6).unwrap();
        assert_eq!(s.counts(), &[1, 3, 1, 3, 1, 4]);
        assert_eq!(s.source, Source::Formula);
        assert_eq!(s.get(6), Some(4));
        assert_eq!(s.get(0), None);
        assert_eq!(s.get(7), None);
        let s = sequence(Kind::All, &bs(1, 2), 6).unwrap();
        assert_eq!(s.counts(), &[1, 1, 4, 1, 6, 4]);
        let s = sequence(Kind::Normal, &bs(1, 1), 5).unwrap();
        assert_eq!(s.counts(), &[1, 3, 4, 7, 6]);
    }

    #[test]
    fn sequential_and_default_strategies_agree() {
        let b = bs(-3, 5);
        for kind in [Kind::Normal, Kind::All] {
            let a = sequence_with(Strategy::Sequential, kind, &b, 300).unwrap();
            let d = sequence(kind, &b, 300).unwrap();
            assert_eq!(a, d);
        }
    }

    #[test]
    fn counts_invariant_under_isomorphism() {
        for b in canonical_pairs(6) {
            for e in b.equivalents() {
                for n in 1..=100 {
                    assert_eq!(count_normal(&b, n), count_normal(&e, n), "{b} {e} {n}");
                    assert_eq!(count_all(&b, n), count_all(&e, n), "{b} {e} {n}");
                }
            }
        }
    }

    #[test]
    fn counts_are_between_one_and_sigma() {
        for b in canonical_pairs(6) {
            for n in 1..=200 {
                let s = sigma(n).unwrap();
                for kind in [Kind::Normal, Kind::All] {
                    let a = kind.count(&b, n).unwrap();
                    assert!((1..=s).contains(&a), "{kind} {b} n={n}: {a}");
                }
            }
        }
    }

    #[test]
    fn radical_dependence_of_all_counts() {
        for n in 1..=200 {
            assert_eq!(count_all(&bs(1, 2), n), count_all(&bs(1, 4), n));
        }
    }

    #[test]
    fn odd_primes_of_sum_of_squares_give_single_normal_subgroup() {
        for b in canonical_pairs(6) {
            let (p, q) = (b.p(), b.q());
            let diff = (q - p).unsigned_abs();
            for (l, _) in crate::arith::factorize((p * p + q * q) as u64) {
                if l % 2 == 1 && (diff == 0 || diff % l != 0) {
                    assert_eq!(count_normal(&b, l), Ok(1), "{b} l={l}");
                }
            }
        }
    }

    #[test]
    fn canonical_pairs_small() {
        let pairs = canonical_pairs(2);
        assert_eq!(pairs, vec![bs(-1, 1), bs(1, 1), bs(-1, 2), bs(1, 2)]);
    }
}
