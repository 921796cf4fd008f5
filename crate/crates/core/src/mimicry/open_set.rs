//! Clearing denominators on the open set `g(c) != 0` of `F_{q^m}`.

use crate::error::{Error, Result};
use crate::fields::{Field, RatFunc, RatFuncField, ZPoly};
use crate::maps::Word;

use super::normalize::is_normalized;

/// A word over `F_q(Z)` whose denominators all divide a power of the
/// squarefree polynomial `g`.
#[derive(Debug, Clone)]
pub struct LocalizedWord {
    pub word: Word<RatFuncField>,
    pub g: ZPoly,
}

impl LocalizedWord {
    /// Take `g` to be the radical of the product of all denominators.
    pub fn new(word: Word<RatFuncField>) -> Self {
        let f = word.ring().base().clone();
        let mut prod = ZPoly::one();
        for a in coefficients(&word) {
            if !a.is_polynomial() && !prod.div_rem(a.den(), &f).is_ok_and(|(_, r)| r.is_zero()) {
                prod = prod.mul(a.den(), &f);
            }
        }
        let g = prod.radical(&f);
        LocalizedWord { word, g }
    }

    pub fn field(&self) -> &Field {
        self.word.ring().base()
    }
}

/// Every coefficient occurring in the letters of `w`.
pub fn coefficients(w: &Word<RatFuncField>) -> Vec<RatFunc> {
    let mut out = Vec::new();
    let _ = w.map_coeffs(w.ring(), |a: &RatFunc| {
        out.push(a.clone());
        Ok(a.clone())
    });
    out
}

/// `1 - g^{q^m - 1}`: one on the zeros of `g` in `F_{q^m}`, zero elsewhere.
pub fn rho_gadget(g: &ZPoly, f: &Field, m: u32) -> ZPoly {
    let big_q = (f.q() as u64).pow(m);
    ZPoly::one().sub(&g.pow(big_q - 1, f), f)
}

/// Rewrite `a/b`, `b | g^t`, as `a (g^t / b) g^{t(q^m - 2)}`.
fn clear(a: &RatFunc, g: &ZPoly, f: &Field, big_q: u64) -> Result<RatFunc> {
    if a.is_polynomial() {
        return Ok(a.clone());
    }
    let b = a.den();
    let mut gt = ZPoly::one();
    for t in 1..=b.degree().max(1) as u64 {
        gt = gt.mul(g, f);
        let (quot, rem) = gt.div_rem(b, f)?;
        if rem.is_zero() {
            let num = a.num().mul(&quot, f).mul(&g.pow(t * (big_q - 2), f), f);
            return Ok(RatFunc::from_poly(num));
        }
    }
    Err(Error::Precondition(format!(
        "denominator {} does not divide a power of {}",
        b.render(f),
        g.render(f)
    )))
}

/// A denominator-free word agreeing with `lw` at every `c ∈ F_{q^m}` with
/// `g(c) != 0`.
pub fn open_set_mimic(lw: &LocalizedWord, m: u32) -> Result<Word<RatFuncField>> {
    if !is_normalized(&lw.word) {
        return Err(Error::Precondition(
            "word must consist of swaps and strictly triangular letters".into(),
        ));
    }
    let f = lw.field().clone();
    let big_q = (f.q() as u64)
        .checked_pow(m)
        .ok_or_else(|| Error::Unsupported("q^m overflows".into()))?;
    let k = lw.word.ring().clone();
    lw.word.map_coeffs(&k, |a| clear(a, &lw.g, &f, big_q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Embedding, Fq};
    use crate::mimicry::nagata::nagata_word;
    use crate::mimicry::normalize::normalize_word;

    fn zp(f: &Field, c: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(c.iter().map(|&x| f.from_int(x)).collect())
    }

    #[test]
    fn rho_is_an_indicator() {
        for p in [2u64, 3] {
            let f = Field::new(p, 1).unwrap();
            for g in [zp(&f, &[0, 1]), zp(&f, &[1, 0, 1]), zp(&f, &[1, 1, 1])] {
                for m in 1..=2 {
                    let big = Field::new(p, m).unwrap();
                    let emb = Embedding::new(&f, &big).unwrap();
                    let rho = rho_gadget(&g, &f, m);
                    for c in big.elements() {
                        let v = rho.eval(&emb, c);
                        if g.eval(&emb, c).is_zero() {
                            assert_eq!(v, Fq::ONE);
                        } else {
                            assert!(v.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_replacement() {
        let f = Field::new(3, 1).unwrap();
        let g = zp(&f, &[1, 0, 1]);
        for m in 1..=2u32 {
            let big = Field::new(3, m).unwrap();
            let emb = Embedding::new(&f, &big).unwrap();
            let big_q = 3u64.pow(m);
            for t in 1..=3u64 {
                for c in big.elements() {
                    let gc = g.eval(&emb, c);
                    if gc.is_zero() {
                        continue;
                    }
                    let lhs = big.inv(big.pow(gc, t)).unwrap();
                    assert_eq!(lhs, big.pow(gc, t * (big_q - 2)));
                }
            }
        }
    }

    #[test]
    fn nagata_open_set() {
        let f = Field::new(3, 1).unwrap();
        let w = nagata_word(&ZPoly::one(), &ZPoly::z(), &f).unwrap();
        let lw = LocalizedWord::new(normalize_word(&w).unwrap());
        assert_eq!(lw.g, ZPoly::z());
        assert!(open_set_mimic(&LocalizedWord::new(w.clone()), 1).is_err());
        for m in 1..=2 {
            let big = Field::new(3, m).unwrap();
            let emb = Embedding::new(&f, &big).unwrap();
            let g = open_set_mimic(&lw, m).unwrap();
            assert!(coefficients(&g).iter().all(|a| a.is_polynomial()));
            let mut checked = 0;
            for c in big.nonzero_elements() {
                let gc = g.specialize(&emb, c).unwrap().to_map();
                let fc = w.specialize(&emb, c).unwrap().to_map();
                assert_eq!(gc, fc, "m={m} c={c:?}");
                checked += 1;
            }
            assert_eq!(checked, 3usize.pow(m) - 1);
        }
    }

    #[test]
    fn polynomial_words_are_unchanged() {
        let f = Field::new(2, 1).unwrap();
        let w = normalize_word(&nagata_word(&ZPoly::one(), &ZPoly::one(), &f).unwrap()).unwrap();
        let lw = LocalizedWord::new(w.clone());
        assert!(lw.g.is_one());
        assert_eq!(open_set_mimic(&lw, 2).unwrap(), w);
    }
}
