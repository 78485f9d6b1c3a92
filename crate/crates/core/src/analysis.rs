//! Dirichlet-series arithmetic on growth sequences: multiplicativity, Euler
//! local factors, and telling non-isomorphic `BS(p,q)` apart by their
//! normal-subgroup counts.

use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, factorize, gcd_u64, is_prime, valuation};
use crate::bsgroups::{canonical_pairs, count_all, count_normal, BsParams, GrowthSequence};
use crate::error::{Error, Result};
use crate::exec::Strategy;

/// Default bound for the fallback scan in [`cor31_witness`].
pub const DEFAULT_SCAN_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityFailure {
    pub m: u64,
    pub n: u64,
    pub a_m: u64,
    pub a_n: u64,
    pub a_mn: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityReport {
    pub holds_up_to: u64,
    /// The lexicographically least `(m, n)` with `mn <= holds_up_to`,
    /// `gcd(m, n) = 1` and `a_mn != a_m a_n`.
    pub counterexample: Option<MultiplicativityFailure>,
}

impl MultiplicativityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Look for a coprime pair `m, n >= 2`, `mn <= bound`, with `a_mn != a_m a_n`.
///
/// # Panics
///
/// If `seq` is shorter than `bound`.
pub fn is_multiplicative_prefix(seq: &GrowthSequence, bound: u64) -> MultiplicativityReport {
    assert!(seq.len() >= bound, "sequence covers 1..{} but bound is {bound}", seq.len());
    let a = |k: u64| seq.get(k).unwrap();
    for m in 2..=bound / 2 {
        for n in 2..=bound / m {
            if gcd_u64(m, n) != 1 {
                continue;
            }
            let (a_m, a_n, a_mn) = (a(m), a(n), a(m * n));
            if a_m.checked_mul(a_n) != Some(a_mn) {
                return MultiplicativityReport {
                    holds_up_to: bound,
                    counterexample: Some(MultiplicativityFailure { m, n, a_m, a_n, a_mn }),
                };
            }
        }
    }
    MultiplicativityReport { holds_up_to: bound, counterexample: None }
}

/// `a_(l^k)` of the all-subgroups sequence for `k = 0..=terms`.
pub fn euler_local_coeffs(params: &BsParams, l: u64, terms: u32) -> Result<Vec<u64>> {
    if !is_prime(l) {
        return Err(Error::BadPrime { params: *params, l, reason: "not a prime" });
    }
    (0..=terms).map(|k| count_all(params, checked_pow(l, k)?)).collect()
}

/// Whether `a_n = prod a_(l^e)` over the factorization of `n`, for all `n <= bound`.
pub fn euler_product_check(params: &BsParams, bound: u64) -> Result<bool> {
    euler_product_check_with(Strategy::default(), params, bound)
}

pub fn euler_product_check_with(strategy: Strategy, params: &BsParams, bound: u64) -> Result<bool> {
    if bound == 0 {
        return Err(Error::ZeroIndex);
    }
    let ns: Vec<u64> = (1..=bound).collect();
    let ok = strategy.try_map(&ns, |&n| -> Result<bool> {
        let mut product = 1u64;
        for (l, e) in factorize(n) {
            let local = count_all(params, checked_pow(l, e)?)?;
            product = product.checked_mul(local).ok_or(Error::Overflow("euler product"))?;
        }
        Ok(product == count_all(params, n)?)
    })?;
    Ok(ok.into_iter().all(|b| b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessBranch {
    /// `|q - p|` differs; the index is the larger difference (or, if the
    /// smaller side is `BS(1,1)`, the first index past it where counts differ).
    DifferentDifference,
    /// Equal differences; `l^m` divides `q + p` on one side only; index `2 l^m`.
    OddPrimePower { prime: u64, exponent: u32 },
    /// Equal differences and equal odd parts of `q + p`; index `2^(s+2)` with
    /// `s` the larger 2-adic valuation.
    PowerOfTwo { s: u32 },
    /// The recipe index did not verify; found by scanning `n = 1, 2, ...`.
    FallbackScan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub left: BsParams,
    pub right: BsParams,
    pub n: u64,
    pub left_count: u64,
    pub right_count: u64,
    pub branch: WitnessBranch,
}

impl WitnessCertificate {
    /// Recompute both counts at `n`.
    pub fn verify(&self) -> Result<bool> {
        let l = count_normal(&self.left, self.n)?;
        let r = count_normal(&self.right, self.n)?;
        Ok(l == self.left_count && r == self.right_count && l != r)
    }
}

pub fn cor31_witness(a: &BsParams, b: &BsParams) -> Result<WitnessCertificate> {
    cor31_witness_with_limit(a, b, DEFAULT_SCAN_LIMIT)
}

/// An index at which the normal-subgroup counts of `a` and `b` differ.
///
/// The index comes from a case analysis on `q - p` and `q + p` of the
/// canonical parameters, is verified by evaluating both counts, and falls
/// back to a linear scan up to `scan_limit` if verification fails.
pub fn cor31_witness_with_limit(
    a: &BsParams,
    b: &BsParams,
    scan_limit: u64,
) -> Result<WitnessCertificate> {
    let (ca, cb) = (a.canonical(), b.canonical());
    if ca == cb {
        return Err(Error::Indistinguishable(*a, *b));
    }
    let certify = |n: u64, branch| -> Result<Option<WitnessCertificate>> {
        let left_count = count_normal(a, n)?;
        let right_count = count_normal(b, n)?;
        Ok((left_count != right_count).then_some(WitnessCertificate {
            left: *a,
            right: *b,
            n,
            left_count,
            right_count,
            branch,
        }))
    };
    if let Some((n, branch)) = recipe_index(&ca, &cb)? {
        if let Some(cert) = certify(n, branch)? {
            return Ok(cert);
        }
    }
    for n in 1..=scan_limit {
        if let Some(cert) = certify(n, WitnessBranch::FallbackScan)? {
            return Ok(cert);
        }
    }
    Err(Error::ScanExhausted(*a, *b, scan_limit))
}

/// Candidate index from the case analysis, for canonical (`q >= |p|`) inputs.
/// Symmetric in its arguments.
fn recipe_index(a: &BsParams, b: &BsParams) -> Result<Option<(u64, WitnessBranch)>> {
    let diff_a = a.difference()?.unsigned_abs();
    let diff_b = b.difference()?.unsigned_abs();
    if diff_a != diff_b {
        let (small, large) = (diff_a.min(diff_b), diff_a.max(diff_b));
        if small != 0 {
            return Ok(Some((large, WitnessBranch::DifferentDifference)));
        }
        // BS(1,1) has a_n = sigma(n) everywhere; the other side drops below
        // sigma(n) at the first n past its difference.
        for n in 1..=large + 1 {
            if count_normal(a, n)? != count_normal(b, n)? {
                return Ok(Some((n, WitnessBranch::DifferentDifference)));
            }
        }
        return Ok(None);
    }
    let sum = |x: &BsParams| {
        x.q().checked_add(x.p()).map(i64::unsigned_abs).ok_or(Error::Overflow("q + p"))
    };
    let (sum_a, sum_b) = (sum(a)?, sum(b)?);

    // Odd prime powers dividing exactly one of the sums; 0 is divisible by all.
    let mut odd_primes: Vec<u64> = factorize(sum_a)
        .into_iter()
        .chain(factorize(sum_b))
        .map(|(l, _)| l)
        .filter(|l| l % 2 == 1)
        .collect();
    if sum_a == 0 || sum_b == 0 {
        odd_primes.push(3);
    }
    odd_primes.sort_unstable();
    odd_primes.dedup();
    let mut best: Option<(u64, u64, u32)> = None;
    for l in odd_primes {
        let (va, vb) = (valuation(l, sum_a), valuation(l, sum_b));
        // m = one more than the smaller valuation; needs the larger side to reach it.
        let m = match (va, vb) {
            (None, Some(v)) | (Some(v), None) => v + 1,
            (Some(x), Some(y)) if x != y => x.min(y) + 1,
            _ => continue,
        };
        let power = checked_pow(l, m)?;
        if best.map_or(true, |(pw, _, _)| power < pw) {
            best = Some((power, l, m));
        }
    }
    if let Some((power, prime, exponent)) = best {
        let n = power.checked_mul(2).ok_or(Error::Overflow("witness index"))?;
        return Ok(Some((n, WitnessBranch::OddPrimePower { prime, exponent })));
    }
    let (Some(sa), Some(sb)) = (valuation(2, sum_a), valuation(2, sum_b)) else {
        return Ok(None);
    };
    let s = sa.max(sb);
    let n = checked_pow(2, s + 2)?;
    Ok(Some((n, WitnessBranch::PowerOfTwo { s })))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishReport {
    pub max_q: i64,
    pub scan_limit: u64,
    pub parameters: Vec<BsParams>,
    pub certificates: Vec<WitnessCertificate>,
}

impl DistinguishReport {
    pub fn max_index(&self) -> u64 {
        self.certificates.iter().map(|c| c.n).max().unwrap_or(0)
    }
}

/// A verified witness for every unordered pair of distinct canonical
/// parameters with `q <= max_q`, each at an index `<= scan_limit`.
pub fn distinguish_all_pairs(max_q: i64, scan_limit: u64) -> Result<DistinguishReport> {
    distinguish_all_pairs_with(Strategy::default(), max_q, scan_limit)
}

pub fn distinguish_all_pairs_with(
    strategy: Strategy,
    max_q: i64,
    scan_limit: u64,
) -> Result<DistinguishReport> {
    let parameters = canonical_pairs(max_q);
    let mut pairs = Vec::new();
    for (i, a) in parameters.iter().enumerate() {
        for b in &parameters[i + 1..] {
            pairs.push((*a, *b));
        }
    }
    let certificates = strategy.try_map(&pairs, |(a, b)| {
        let cert = cor31_witness_with_limit(a, b, scan_limit)?;
        if cert.n > scan_limit {
            return Err(Error::ScanExhausted(*a, *b, scan_limit));
        }
        if !cert.verify()? {
            return Err(Error::Internal(format!("certificate for {a} vs {b} does not verify")));
        }
        Ok(cert)
    })?;
    Ok(DistinguishReport { max_q, scan_limit, parameters, certificates })
}
