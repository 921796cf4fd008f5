//! Polynomial automorphisms over finite fields and the bijections they
//! induce on `F_{q^m}^n`.
//!
//! * [`fields`]: prime-power fields, embeddings, `F_q[Z]` and `F_q(Z)`.
//! * [`maps`]: sparse polynomials, polynomial maps, generator words and
//!   their text formats.
//! * [`perms`]: induced permutations and Schreier-Sims.
//! * [`constructions`]: explicit words over the Derksen alphabet and the
//!   reduced tame generating set.
//! * [`mimicry`]: plane decompositions and fixed-variable mimicking.
//! * [`experiments`]: reproducible group computations with JSON reports.

#![allow(clippy::needless_range_loop, clippy::wrong_self_convention)]

pub mod constructions;
pub mod error;
pub mod experiments;
pub mod fields;
pub mod maps;
pub mod mimicry;
pub mod perms;
pub mod ring;

pub use error::{Error, Result};
