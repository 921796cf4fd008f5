//! The full fixed-variable mimicking pipeline for plane automorphisms over
//! `F_q[Z]` given by a word over `F_q(Z)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{Embedding, Field, RatFunc, RatFuncField, ZPoly};
use crate::maps::{linalg, Gen, ParamPolyMap, Word};

use super::closed_set::closed_set_mimic;
use super::normalize::normalize_word;
use super::open_set::{open_set_mimic, LocalizedWord};

#[derive(Debug, Clone, Serialize)]
pub struct CertificateEntry {
    pub c: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MimicResult {
    pub q: u32,
    pub m: u32,
    /// Radical of the denominators of the normalized word.
    pub g: String,
    pub word: String,
    pub certificate: Vec<CertificateEntry>,
    pub all_pass: bool,
    #[serde(skip)]
    pub t: Word<RatFuncField>,
    /// `G^{-1} A^{-1} F`, the identity wherever `g(c) != 0`.
    #[serde(skip)]
    pub residual: ParamPolyMap,
}

fn poly_entry(k: &RatFuncField, a: &RatFunc) -> Result<()> {
    if a.is_polynomial() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "coefficient {} is not a polynomial in Z",
            crate::ring::Ring::render(k, a)
        )))
    }
}

/// The affine part `A` of a polynomial map, required to be invertible over
/// `F_q[Z]`, and the letter for `A^{-1}`.
fn affine_part(map: &ParamPolyMap) -> Result<(Gen<RatFunc>, Gen<RatFunc>)> {
    let k = map.ring();
    let matrix = map.linear_matrix();
    let shift = map.constant_part();
    for a in matrix.iter().flatten().chain(&shift) {
        poly_entry(k, a)?;
    }
    let det = linalg::det(k, &matrix);
    if !det.is_polynomial() || det.num().degree() != 0 {
        return Err(Error::Precondition(
            "linear part is not invertible over F_q[Z]".into(),
        ));
    }
    let inv = linalg::inverse(k, &matrix).expect("constant nonzero determinant");
    let b = linalg::mul_vec(k, &inv, &shift);
    let neg: Vec<RatFunc> = b.iter().map(|x| crate::ring::Ring::neg(k, x)).collect();
    Ok((
        Gen::Affine { matrix, shift },
        Gen::Affine {
            matrix: inv,
            shift: neg,
        },
    ))
}

/// `T` over `F_q[Z]` with `T_c = F_c` for every `c ∈ F_{q^m}`, where `F` is
/// the composite of `word` (a plane automorphism over `F_q[Z]`).
pub fn mimic_fixed_variable(word: &Word<RatFuncField>, m: u32) -> Result<MimicResult> {
    if word.n() != 2 {
        return Err(Error::Unsupported(
            "fixed-variable mimicking is implemented for plane maps".into(),
        ));
    }
    let k = word.ring().clone();
    let base = k.base().clone();
    let map = word.to_map();
    for c in map.components() {
        for a in c.terms().values() {
            poly_entry(&k, a)?;
        }
    }
    let (a, a_inv) = affine_part(&map)?;
    let a_word = Word::from_gen(&k, 2, a)?;
    let a_inv_word = Word::from_gen(&k, 2, a_inv)?;
    let reduced_word = a_inv_word.then(word);
    let reduced_map = a_inv_word.to_map().compose(&map)?;

    let normal = normalize_word(&reduced_word)?;
    let lw = LocalizedWord::new(normal);
    let open = open_set_mimic(&lw, m)?;
    let residual = open.inverse().to_map().compose(&reduced_map)?;

    let big = Field::new(base.p() as u64, base.r() * m)?;
    let emb = Embedding::new(&base, &big)?;
    let mut t = a_word.then(&open);
    let mut covered = Vec::new();
    for alpha in lw.g.roots(&emb) {
        if covered.contains(&alpha) {
            continue;
        }
        let factor = ZPoly::min_poly(&emb, alpha);
        covered.extend(factor.roots(&emb));
        t = t.then(&closed_set_mimic(&residual, &factor, m)?);
    }

    let points: Vec<_> = big.elements().collect();
    let certificate = points
        .par_iter()
        .map(|&c| -> Result<CertificateEntry> {
            let tc = t.specialize(&emb, c)?.to_map();
            let fc = map.specialize(&emb, c)?;
            Ok(CertificateEntry {
                c: big.render(c),
                pass: tc == fc,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_pass = certificate.iter().all(|e| e.pass);
    Ok(MimicResult {
        q: base.q(),
        m,
        g: lw.g.render(&base),
        word: t.render(),
        certificate,
        all_pass,
        t,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::parse_map;
    use crate::mimicry::nagata::nagata_word;

    #[test]
    fn nagata_over_f3() {
        let f3 = Field::new(3, 1).unwrap();
        let w = nagata_word(&ZPoly::one(), &ZPoly::z(), &f3).unwrap();
        for m in 1..=2 {
            let res = mimic_fixed_variable(&w, m).unwrap();
            assert_eq!(res.certificate.len(), 3usize.pow(m));
            assert!(res.all_pass, "m={m}");
            assert_eq!(res.g, "z");
        }
    }

    #[test]
    fn nagata_residual_is_concentrated_at_zero() {
        let f3 = Field::new(3, 1).unwrap();
        let w = nagata_word(&ZPoly::one(), &ZPoly::z(), &f3).unwrap();
        let res = mimic_fixed_variable(&w, 1).unwrap();
        let emb = Embedding::identity(&f3);
        let at_root = parse_map("(x1 - 2*x2^3, x2)", &f3, 2).unwrap();
        let g = closed_set_mimic(&res.residual, &ZPoly::z(), 1).unwrap();
        for c in f3.elements() {
            let rc = res.residual.specialize(&emb, c).unwrap();
            let gc = g.specialize(&emb, c).unwrap().to_map();
            if c.is_zero() {
                assert_eq!(rc, at_root);
            } else {
                assert!(rc.is_identity());
            }
            assert_eq!(gc, rc);
        }
    }

    #[test]
    fn polynomial_tame_input() {
        let f2 = Field::new(2, 1).unwrap();
        let w = nagata_word(&ZPoly::one(), &ZPoly::one(), &f2).unwrap();
        let res = mimic_fixed_variable(&w, 2).unwrap();
        assert!(res.all_pass);
        assert_eq!(res.g, "1");
    }

    #[test]
    fn other_members() {
        let f2 = Field::new(2, 1).unwrap();
        let g = ZPoly::from_coeffs(vec![crate::fields::Fq::ONE; 3]);
        let w = nagata_word(&ZPoly::z(), &g, &f2).unwrap();
        for m in 1..=2 {
            assert!(mimic_fixed_variable(&w, m).unwrap().all_pass, "m={m}");
        }
    }
}
