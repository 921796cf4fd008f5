//! Fixed-variable mimicking: automorphisms over `F_q(Z)` whose
//! specializations at every `c ∈ F_{q^m}` are reproduced by a word over
//! `F_q[Z]`.

pub mod closed_set;
pub mod jvdk;
pub mod nagata;
pub mod normalize;
pub mod open_set;
pub mod pipeline;

pub use closed_set::{closed_set_mimic, gate_decomposition, sl_transvections};
pub use jvdk::jvdk_decompose_dim2;
pub use nagata::{nagata_family, nagata_map, nagata_word};
pub use normalize::{diagonal_word, is_normal_gen, is_normalized, normalize_word, strict_gen};
pub use open_set::{coefficients, open_set_mimic, rho_gadget, LocalizedWord};
pub use pipeline::{mimic_fixed_variable, CertificateEntry, MimicResult};
