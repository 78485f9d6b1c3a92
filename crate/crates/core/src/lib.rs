//! Finite-index subgroups and normal subgroups of the Baumslag-Solitar groups
//! `BS(p,q) = <t, a | t a^p t^-1 = a^q>` with `p` and `q` coprime.
//!
//! - [`bsgroups`]: parameters, canonical forms, and closed-form counts.
//! - [`quotients`]: every index-`n` normal subgroup as an explicit metacyclic
//!   quotient, realizable as a multiplication table.
//! - [`oracle`]: brute-force counts from permutation actions (`n <= 8`).
//! - [`analysis`]: multiplicativity, Euler factors, and distinguishing
//!   witnesses.
//!
//! Batch loops run on rayon when the `parallel` feature is enabled (default);
//! see [`exec::Strategy`].

pub mod analysis;
pub mod arith;
pub mod bsgroups;
pub mod error;
pub mod exec;
pub mod fingroup;
pub mod oracle;
pub mod quotients;

pub use bsgroups::{canonicalize, count_all, count_normal, sequence, BsParams, GrowthSequence, Kind, Source};
pub use error::{Error, Result};
pub use exec::Strategy;
