//! Explicit words: the Vandermonde lemma, Derksen-alphabet words for
//! elementary maps, the scaling gadget `T_m`, the exponent solver, the
//! Derksen mimicking word and the tame generating set.

pub mod da;
pub mod derksen;
pub mod exponent;
pub mod tame;
pub mod tm;
pub mod vandermonde;

pub use da::elementary_in_da_word;
pub use derksen::{derksen_mimic_word, DerksenMimic};
pub use exponent::{exponent_reach_word, lemd_t, ExponentPair, Step};
pub use tame::{is_tame_alphabet_word, tame_generators_word, TameGenerators};
pub use tm::{agrees_with_psi, build_tm_word, psi, tm_at, tm_conjugate};
pub use vandermonde::vandermonde_alpha;
