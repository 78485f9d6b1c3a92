use thiserror::Error;

use crate::bsgroups::BsParams;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{a} is not invertible modulo {m} (gcd({a}, {m}) != 1)")]
    NotCoprime { a: i64, m: u64 },

    #[error("BS(p,q) requires p != 0 and q != 0 (got p = {p}, q = {q})")]
    ZeroParameter { p: i64, q: i64 },

    #[error(
        "BS({p},{q}): p and q must be coprime (gcd = {gcd}); the counting formulas only hold for coprime parameters"
    )]
    NonCoprimeParameters { p: i64, q: i64, gcd: u64 },

    #[error("index must be at least 1")]
    ZeroIndex,

    #[error("permutation length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("element set is not closed under the group product")]
    NotASubgroup,

    #[error("invalid metacyclic quotient: {0}")]
    InvalidQuotient(String),

    #[error("group order {order} exceeds the realization bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },

    #[error("prime {l} is unusable for BS{params}: {reason}")]
    BadPrime { params: BsParams, l: u64, reason: &'static str },

    #[error("index {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("BS{0} and BS{1} are isomorphic; their sequences cannot differ")]
    Indistinguishable(BsParams, BsParams),

    #[error("no differing normal-subgroup count for BS{0} and BS{1} up to n = {2}")]
    ScanExhausted(BsParams, BsParams, u64),
}
