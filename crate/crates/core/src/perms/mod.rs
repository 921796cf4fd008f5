//! Induced permutations, parity and a Schreier–Sims group engine.

pub mod bsgs;
pub mod induced;
pub mod perm;

pub use bsgs::{brute_force_order, index, normal_closure, Bsgs};
pub use induced::{induced_gen, induced_map, induced_word, Domain, DEFAULT_DOMAIN_BOUND};
pub use perm::Perm;
