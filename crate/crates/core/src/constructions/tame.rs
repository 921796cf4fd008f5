//! Exact words for `E_{1,v}` over affine maps and the family
//! `x_1 + x_2^{k_2 p - 1} ... x_n^{k_n p - 1}` with `1 <= k_2 <= ... <= k_n`.

use std::collections::HashMap;

use super::da::{scaled, shifted, swapped};
use super::vandermonde::{combined_coeff, vandermonde_alpha};
use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::{build, Gen, Word};

/// Whether `g` belongs to the generating family: `E_{1,v}` with coefficient
/// one, every exponent `≡ p-1 (mod p)`, sorted ascending.
pub fn is_tame_family_letter(g: &Gen<Fq>, p: u32) -> bool {
    match g {
        Gen::Elementary { i: 0, exps, coeff } if *coeff == Fq::ONE => {
            let v = &exps[1..];
            v.iter().all(|&e| e % p == p - 1) && v.windows(2).all(|w| w[0] <= w[1])
        }
        _ => false,
    }
}

/// Affine letters or members of the family.
pub fn is_tame_alphabet_word(w: &Word<Field>) -> bool {
    let p = w.ring().p();
    w.uses_only(|g| g.is_affine() || is_tame_family_letter(g, p))
}

pub struct TameGenerators {
    f: Field,
    n: usize,
    cache: HashMap<Vec<u32>, Word<Field>>,
}

impl TameGenerators {
    pub fn new(f: &Field, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition("dimension must be at least 2".into()));
        }
        Ok(TameGenerators {
            f: f.clone(),
            n,
            cache: HashMap::new(),
        })
    }

    pub fn word(&mut self, v: &[u32]) -> Result<Word<Field>> {
        if v.len() + 1 != self.n {
            return Err(Error::DimensionMismatch(v.len() + 1, self.n));
        }
        if let Some(w) = self.cache.get(v) {
            return Ok(w.clone());
        }
        let w = self.build(v)?;
        self.cache.insert(v.to_vec(), w.clone());
        Ok(w)
    }

    fn build(&mut self, v: &[u32]) -> Result<Word<Field>> {
        let (f, n, p) = (self.f.clone(), self.n, self.f.p());
        let deg: u32 = v.iter().sum();
        if deg == 0 {
            return Word::from_gen(&f, n, build::t(0, Fq::ONE));
        }
        if deg == 1 {
            return Word::from_gen(&f, n, build::e(n, 0, v, Fq::ONE));
        }
        let Some(k) = v.iter().rposition(|&e| e % p != p - 1) else {
            return self.family_letter(v);
        };
        let j = k + 1;
        let vj = v[k] as u64;
        let kp = vj / p as u64;
        let big = kp * p as u64 + p as u64 - 1;
        let mut up = v.to_vec();
        up[k] = big as u32;
        let base = self.word(&up)?;
        let alpha = vandermonde_alpha(p, kp, vj)?;
        let mut acc = Word::identity(&f, n);
        for (i, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let piece = shifted(&base, j, f.from_int(i as i64))?;
            acc = acc.then(&scaled(&piece, Fq(a))?);
        }
        for e in 0..kp * p as u64 {
            let c = combined_coeff(&alpha, big, e, p);
            if c == 0 {
                continue;
            }
            let mut low = v.to_vec();
            low[k] = e as u32;
            let lw = self.word(&low)?;
            acc = acc.then(&scaled(&lw, f.neg(Fq(c)))?);
        }
        Ok(acc)
    }

    /// A family member conjugated by coordinate swaps into the order of `v`.
    fn family_letter(&self, v: &[u32]) -> Result<Word<Field>> {
        let n = self.n;
        let mut sorted = v.to_vec();
        let mut swaps = Vec::new();
        for a in 0..sorted.len() {
            let b = (a..sorted.len()).min_by_key(|&b| (sorted[b], b)).unwrap();
            if b != a {
                sorted.swap(a, b);
                swaps.push((a + 1, b + 1));
            }
        }
        let mut w = Word::from_gen(&self.f, n, build::e(n, 0, &sorted, Fq::ONE))?;
        for &(a, b) in swaps.iter().rev() {
            w = swapped(&w, a, b)?;
        }
        Ok(w)
    }
}

pub fn tame_generators_word(f: &Field, n: usize, v: &[u32]) -> Result<Word<Field>> {
    TameGenerators::new(f, n)?.word(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::parse_map;

    fn target(f: &Field, n: usize, v: &[u32]) -> crate::maps::PolyMap<Field> {
        Word::from_gen(f, n, build::e(n, 0, v, Fq::ONE))
            .unwrap()
            .to_map()
    }

    #[test]
    fn documented_examples() {
        let f2 = Field::new(2, 1).unwrap();
        let w = tame_generators_word(&f2, 2, &[2]).unwrap();
        assert!(is_tame_alphabet_word(&w));
        assert_eq!(w.to_map(), parse_map("(x1+x2^2, x2)", &f2, 2).unwrap());

        let w = tame_generators_word(&f2, 3, &[1, 2]).unwrap();
        assert!(is_tame_alphabet_word(&w));
        assert_eq!(w.to_map(), target(&f2, 3, &[1, 2]));

        let w = tame_generators_word(&f2, 3, &[3, 1]).unwrap();
        assert_eq!(w.len(), 3);
        assert!(is_tame_family_letter(&w.letters()[1].gen, 2));
        assert_eq!(w.to_map(), target(&f2, 3, &[3, 1]));
    }

    #[test]
    fn small_ranges_recompose() {
        for (p, r, n, top) in [
            (2u64, 1u32, 2usize, 5u32),
            (3, 1, 2, 7),
            (2, 1, 3, 3),
            (3, 1, 3, 5),
            (2, 2, 3, 3),
        ] {
            let f = Field::new(p, r).unwrap();
            let mut tg = TameGenerators::new(&f, n).unwrap();
            let count = (top as usize + 1).pow(n as u32 - 1);
            for code in 0..count {
                let v: Vec<u32> = (0..n - 1)
                    .map(|k| (code / (top as usize + 1).pow(k as u32)) as u32 % (top + 1))
                    .collect();
                let w = tg.word(&v).unwrap();
                assert!(is_tame_alphabet_word(&w), "v {v:?}");
                assert_eq!(w.to_map(), target(&f, n, &v), "p={p} v {v:?}");
            }
        }
    }
}
