//! Brute-force subgroup counts from permutation representations.
//!
//! Index-`n` subgroups of a group `G` correspond to transitive actions of `G`
//! on `{0..n-1}`, the subgroup being the stabilizer of 0; each subgroup has
//! exactly `(n-1)!` such labelled actions. An action of `BS(p,q)` is a pair
//! of permutations `(A, T)` with `T A^p T^-1 = A^q`. The subgroup is normal
//! exactly when the action is regular, i.e. `<A, T>` has order `n`.
//!
//! Nothing here uses the closed-form counts; the module exists to check them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bsgroups::{BsParams, Kind};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::fingroup::{closure, closure_bounded, is_transitive, GroupTable, Permutation};

pub const COUNT_CAP: u64 = 8;
pub const KERNEL_CAP: u64 = 7;

/// A candidate image `(A, T)` of the generators `(a, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermPair {
    pub a: Permutation,
    pub t: Permutation,
}

impl PermPair {
    pub fn satisfies_relator(&self, params: &BsParams) -> bool {
        self.t.conjugate(&self.a.pow(params.p())) == self.a.pow(params.q())
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(&[self.a.clone(), self.t.clone()], self.a.len())
    }

    /// Transitive, and the generated group has exactly `n` elements.
    pub fn is_regular(&self) -> bool {
        let n = self.a.len();
        self.is_transitive()
            && matches!(
                closure_bounded(&[self.a.clone(), self.t.clone()], n, n),
                Ok(Some(g)) if g.len() == n
            )
    }

    /// Simultaneous conjugation by `sigma`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> PermPair {
        PermPair { a: sigma.conjugate(&self.a), t: sigma.conjugate(&self.t) }
    }
}

/// All permutations of `n` points in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_image_unchecked(cur.clone())];
    while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation::from_image_unchecked(cur.clone()));
    }
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Call `visit` with every `T` satisfying `T B T^-1 = C`.
///
/// Such a `T` maps each cycle `(b0 b1 ...)` of `B` onto a cycle of `C` of the
/// same length, `b_i -> c_(i+k)` for some rotation `k`. Enumerating the cycle
/// matchings and rotations gives every solution exactly once.
fn for_each_conjugator(b: &Permutation, c: &Permutation, mut visit: impl FnMut(&Permutation)) {
    let b_cycles = b.cycles();
    let c_cycles = c.cycles();
    let mut b_lens: Vec<usize> = b_cycles.iter().map(Vec::len).collect();
    let mut c_lens: Vec<usize> = c_cycles.iter().map(Vec::len).collect();
    b_lens.sort_unstable();
    c_lens.sort_unstable();
    if b_lens != c_lens {
        return;
    }
    let n = b.len();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; c_cycles.len()];
    fn recurse(
        idx: usize,
        b_cycles: &[Vec<usize>],
        c_cycles: &[Vec<usize>],
        used: &mut [bool],
        image: &mut [usize],
        visit: &mut dyn FnMut(&Permutation),
    ) {
        if idx == b_cycles.len() {
            visit(&Permutation::from_image_unchecked(image.to_vec()));
            return;
        }
        let bc = &b_cycles[idx];
        let k = bc.len();
        for (ci, cc) in c_cycles.iter().enumerate() {
            if used[ci] || cc.len() != k {
                continue;
            }
            used[ci] = true;
            for shift in 0..k {
                for (i, &x) in bc.iter().enumerate() {
                    image[x] = cc[(i + shift) % k];
                }
                recurse(idx + 1, b_cycles, c_cycles, used, image, visit);
            }
            used[ci] = false;
        }
    }
    recurse(0, &b_cycles, &c_cycles, &mut used, &mut image, &mut visit);
}

fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Candidate images of `a`. For regular actions the order of `A` must divide `n`.
fn candidates(kind: Kind, n: u64) -> Vec<Permutation> {
    let perms = all_permutations(n as usize);
    match kind {
        Kind::All => perms,
        Kind::Normal => perms.into_iter().filter(|a| n % a.order() == 0).collect(),
    }
}

fn accepts(kind: Kind, pair: &PermPair) -> bool {
    match kind {
        Kind::All => pair.is_transitive(),
        Kind::Normal => pair.is_regular(),
    }
}

/// Number of relator-satisfying pairs `(A, T)` on `n` points whose action is
/// transitive (`Kind::All`) or regular (`Kind::Normal`).
pub fn count_actions(strategy: Strategy, kind: Kind, params: &BsParams, n: u64) -> Result<u64> {
    check_cap(n, COUNT_CAP)?;
    let avals = candidates(kind, n);
    Ok(strategy.sum(&avals, |a| {
        let mut count = 0;
        for_each_conjugator(&a.pow(params.p()), &a.pow(params.q()), |t| {
            let pair = PermPair { a: a.clone(), t: t.clone() };
            debug_assert!(pair.satisfies_relator(params));
            if accepts(kind, &pair) {
                count += 1;
            }
        });
        count
    }))
}

fn exact_division(actions: u64, n: u64) -> Result<u64> {
    let labelings = factorial(n - 1);
    if actions % labelings != 0 {
        return Err(Error::Internal(format!(
            "{actions} actions on {n} points is not a multiple of {labelings}"
        )));
    }
    Ok(actions / labelings)
}

pub fn oracle_count(kind: Kind, params: &BsParams, n: u64) -> Result<u64> {
    oracle_count_with(Strategy::default(), kind, params, n)
}

pub fn oracle_count_with(strategy: Strategy, kind: Kind, params: &BsParams, n: u64) -> Result<u64> {
    let actions = count_actions(strategy, kind, params, n)?;
    exact_division(actions, n)
}

/// Brute-force number of index-`n` subgroups (`n <= 8`).
pub fn oracle_count_all(params: &BsParams, n: u64) -> Result<u64> {
    oracle_count(Kind::All, params, n)
}

/// Brute-force number of index-`n` normal subgroups (`n <= 8`).
pub fn oracle_count_normal(params: &BsParams, n: u64) -> Result<u64> {
    oracle_count(Kind::Normal, params, n)
}

/// Relabel points in breadth-first order from 0 following `A` then `T`.
/// Pairs conjugate under a 0-fixing permutation get the same relabelling.
fn bfs_normal_form(pair: &PermPair) -> PermPair {
    let n = pair.a.len();
    let mut label = vec![usize::MAX; n];
    let mut order = vec![0];
    label[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for g in [&pair.a, &pair.t] {
            let y = g.apply(x);
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
            }
        }
    }
    let sigma = Permutation::from_image_unchecked(label);
    pair.conjugate_by(&sigma)
}

/// One fingerprint per index-`n` normal subgroup (`n <= 7`): the
/// lexicographically least regular pair in its class under simultaneous
/// conjugation by permutations fixing 0. Sorted.
pub fn oracle_enumerate_kernels(params: &BsParams, n: u64) -> Result<Vec<PermPair>> {
    check_cap(n, KERNEL_CAP)?;
    let avals = candidates(Kind::Normal, n);
    let per_a = Strategy::default().map(&avals, |a| {
        let mut found = Vec::new();
        for_each_conjugator(&a.pow(params.p()), &a.pow(params.q()), |t| {
            let pair = PermPair { a: a.clone(), t: t.clone() };
            if pair.is_regular() {
                found.push(bfs_normal_form(&pair));
            }
        });
        found
    });
    let mut classes: BTreeMap<PermPair, u64> = BTreeMap::new();
    for form in per_a.into_iter().flatten() {
        *classes.entry(form).or_default() += 1;
    }
    let labelings = factorial(n - 1);
    if let Some((form, size)) = classes.iter().find(|(_, &size)| size != labelings) {
        return Err(Error::Internal(format!(
            "class of {form:?} has {size} members, expected {labelings}"
        )));
    }
    let fixers: Vec<Permutation> =
        all_permutations(n as usize).into_iter().filter(|s| s.apply(0) == 0).collect();
    let mut out: Vec<PermPair> = classes
        .into_keys()
        .map(|form| fixers.iter().map(|s| form.conjugate_by(s)).min().unwrap())
        .collect();
    out.sort();
    Ok(out)
}

/// The finite quotient defined by a regular pair, with the positions of `A`
/// and `T` in the table.
pub fn kernel_quotient(pair: &PermPair) -> Result<(GroupTable, usize, usize)> {
    let n = pair.a.len();
    let mut elems: Vec<Permutation> =
        closure(&[pair.a.clone(), pair.t.clone()], n)?.into_iter().collect();
    elems.sort();
    let (table, ordered) = GroupTable::from_permutations(&elems)?;
    let pos = |x: &Permutation| ordered.iter().position(|e| e == x).unwrap();
    Ok((table, pos(&pair.a), pos(&pair.t)))
}
