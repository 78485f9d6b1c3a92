//! Exact integer and modular arithmetic.
//!
//! Everything is checked: an operation either returns the exact value or
//! [`Error::Overflow`]. Residues are always reported in `[0, m)`.

use crate::error::{Error, Result};

/// Divisors of `n` in ascending order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `gcd(|a|, |b|)`, with `gcd(a, 0) = |a|`.
pub fn gcd_nonneg(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduce a signed integer into `[0, modulus)`.
pub fn residue(a: i64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    (a as i128).rem_euclid(modulus as i128) as u64
}

/// `base^exp mod modulus` for a possibly negative base, by square-and-multiply.
pub fn mod_pow_signed(base: i64, exp: u64, modulus: u64) -> u64 {
    mod_pow(residue(base, modulus), exp, modulus)
}

/// `base^exp mod modulus` for `base` already in `[0, modulus)`.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn sigma(n: u64) -> Result<u64> {
    divisors(n)
        .into_iter()
        .try_fold(0u64, |acc, d| acc.checked_add(d))
        .ok_or(Error::Overflow("sigma"))
}

/// Least `k >= 1` with `a^k = 1 (mod m)`.
pub fn mult_order(a: i64, m: u64) -> Result<u64> {
    assert!(m >= 1, "modulus must be positive");
    if gcd_u64(residue(a, m), m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    if m == 1 {
        return Ok(1);
    }
    let a = residue(a, m) as u128;
    let mut x = a;
    let mut k = 1u64;
    while x != 1 {
        x = x * a % m as u128;
        k += 1;
    }
    Ok(k)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64> {
    assert!(m >= 1, "modulus must be positive");
    let (mut old_r, mut r) = (residue(a, m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 && m != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= n / p {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Exponent of the prime `l` in `n`; `None` for `n = 0` (every power divides 0).
pub fn valuation(l: u64, n: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut n = n;
    let mut e = 0;
    while n % l == 0 {
        n /= l;
        e += 1;
    }
    Some(e)
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}
