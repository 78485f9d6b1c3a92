//! Finite groups: permutations, permutation-group closure, and explicit
//! multiplication tables.

pub mod catalog;
mod perm;
mod table;

pub use perm::{closure, closure_bounded, is_transitive, Permutation};
pub use table::{GroupTable, ASSOCIATIVITY_CHECK_MAX};
