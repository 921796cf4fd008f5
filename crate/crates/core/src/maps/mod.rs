//! Polynomials, polynomial maps, the generator alphabet and words.

pub mod gens;
pub mod linalg;
pub mod map;
pub mod parse;
pub mod poly;
pub mod wordfmt;

pub use gens::{build, is_derksen_letter, Gen, Letter, Word};
pub use map::{ParamPolyMap, PolyMap, Shape};
pub use parse::{parse_map, parse_poly, parse_zpoly, render_map, render_poly};
pub use poly::{Monomial, Poly};
pub use wordfmt::{parse_word, render_word};
