//! Words over the Derksen alphabet inducing the same bijection of
//! `F_{q^m}^n` as a given elementary map `E_{1,α}`.
//!
//! Exponents are read as functions on `F_{q^m}`: for `e >= 1` only the class
//! of `e` modulo `M = q^m - 1` matters, so every nonzero exponent is kept in
//! `[1, M]`. Conjugation by `T_{m,i}` raises the `i`-th exponent by
//! `α_2 + 1` as long as that exponent is nonzero, and `R_{2,3}` exchanges
//! the first two.

use std::collections::HashMap;

use super::da::{scaled, shifted, small_exponent_word, swapped};
use super::exponent::{exponent_reach_word, mod_inverse, ExponentPair, Step};
use super::tm::{build_tm_word, tm_at};
use super::vandermonde::binom_mod;
use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::Word;

/// Stateful builder caching `T_m`, its coordinate variants and the
/// intermediate words of one `(F_q, n, m)`.
pub struct DerksenMimic {
    f: Field,
    n: usize,
    m: u32,
    modulus: u64,
    tm: Option<Word<Field>>,
    tm_coord: HashMap<usize, Word<Field>>,
    cache: HashMap<Vec<u64>, Word<Field>>,
}

impl DerksenMimic {
    pub fn new(f: &Field, n: usize, m: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!(
                "Derksen mimicking needs n >= 3, got {n}"
            )));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let big_q = (f.q() as u64)
            .checked_pow(m)
            .filter(|&v| v < u32::MAX as u64)
            .ok_or_else(|| Error::Unsupported("q^m too large".into()))?;
        Ok(DerksenMimic {
            f: f.clone(),
            n,
            m,
            modulus: big_q - 1,
            tm: None,
            tm_coord: HashMap::new(),
            cache: HashMap::new(),
        })
    }

    /// `q^m - 1`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn tm(&mut self) -> Result<Word<Field>> {
        if self.tm.is_none() {
            self.tm = Some(build_tm_word(&self.f, self.n, self.m)?);
        }
        Ok(self.tm.clone().unwrap())
    }

    fn tm_at(&mut self, coord: usize) -> Result<Word<Field>> {
        if let Some(w) = self.tm_coord.get(&coord) {
            return Ok(w.clone());
        }
        let w = tm_at(&self.tm()?, coord)?;
        self.tm_coord.insert(coord, w.clone());
        Ok(w)
    }

    /// `T_{m,i}^{-k} · w · T_{m,i}^k`.
    fn raise(&mut self, w: &Word<Field>, coord: usize, k: u64) -> Result<Word<Field>> {
        if k == 0 {
            return Ok(w.clone());
        }
        let t = self.tm_at(coord)?;
        Ok(w.conj_by(&t.pow(k)))
    }

    /// Word whose induced bijection equals that of `E_{1,α}`, with
    /// `α ∈ {0, ..., q^m - 1}^{n-1}`.
    pub fn word(&mut self, alpha: &[u64]) -> Result<Word<Field>> {
        if alpha.len() + 1 != self.n {
            return Err(Error::DimensionMismatch(alpha.len() + 1, self.n));
        }
        if let Some(a) = alpha.iter().find(|&&a| a > self.modulus) {
            return Err(Error::Precondition(format!(
                "exponent {a} exceeds q^m - 1 = {}",
                self.modulus
            )));
        }
        self.word_unchecked(alpha)
    }

    fn word_unchecked(&mut self, alpha: &[u64]) -> Result<Word<Field>> {
        let p = self.f.p() as u64;
        if alpha.iter().all(|&a| a < p) {
            let small: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
            return small_exponent_word(&self.f, self.n, &small);
        }
        if let Some(w) = self.cache.get(alpha) {
            return Ok(w.clone());
        }
        let w = if alpha.contains(&0) {
            self.zero_route(alpha)?
        } else {
            self.engine(alpha)?
        };
        self.cache.insert(alpha.to_vec(), w.clone());
        Ok(w)
    }

    /// Zero at some slot: put it at `X_2`, start from the `0/1` pattern and
    /// raise each nonzero exponent by one per conjugation.
    fn zero_route(&mut self, alpha: &[u64]) -> Result<Word<Field>> {
        let z = alpha.iter().position(|&a| a == 0).unwrap();
        let mut a = alpha.to_vec();
        a.swap(0, z);
        let pattern: Vec<u32> = a.iter().map(|&e| e.min(1) as u32).collect();
        let mut w = small_exponent_word(&self.f, self.n, &pattern)?;
        for (k, &e) in a.iter().enumerate().skip(1) {
            if e >= 2 {
                w = self.raise(&w, k + 1, e - 1)?;
            }
        }
        swapped(&w, 1, z + 1)
    }

    /// `E_{1,(p-1, p-1, tail)}`: the start of the unit stratum.
    fn unit_start(&mut self, tail: &[u64]) -> Result<Word<Field>> {
        let p = self.f.p();
        let mut base = vec![p - 1, p - 1];
        base.extend(std::iter::repeat_n(1, tail.len()));
        let mut w = small_exponent_word(&self.f, self.n, &base)?;
        let md = self.modulus;
        let p_inv = mod_inverse(p as u64 % md, md).expect("p is a unit mod q^m - 1");
        for (k, &e) in tail.iter().enumerate() {
            let steps = ((e + md - 1) % md) as u128 * p_inv as u128 % md as u128;
            w = self.raise(&w, k + 3, steps as u64)?;
        }
        Ok(w)
    }

    /// `E_{1,(d-1, d-1, tail)}` for a divisor `d > 1` of `q^m - 1`, from
    /// `E_{1,(d-1, d, tail)}` and its translate in `X_3`.
    fn stratum_start(&mut self, d: u64, tail: &[u64]) -> Result<Word<Field>> {
        let mut key = vec![d - 1, d - 1];
        key.extend_from_slice(tail);
        if let Some(w) = self.cache.get(&key) {
            return Ok(w.clone());
        }
        let p = self.f.p();
        let f = self.f.clone();
        let mut top = vec![d - 1, d];
        top.extend_from_slice(tail);
        let w1 = self.word_unchecked(&top)?;
        let mut acc = scaled(&w1, f.from_int(-1))?.then(&shifted(&w1, 2, Fq::ONE)?);
        for i in 0..d - 1 {
            let c = binom_mod(d, i, p);
            if c == 0 {
                continue;
            }
            let mut low = vec![d - 1, i];
            low.extend_from_slice(tail);
            let wi = self.word_unchecked(&low)?;
            acc = acc.then(&scaled(&wi, f.neg(Fq(c)))?);
        }
        let d_inv = f.inv(f.from_int(d as i64))?;
        let w = scaled(&acc, d_inv)?;
        self.cache.insert(key, w.clone());
        Ok(w)
    }

    /// All exponents nonzero: move along `ρ` and `τ` from the start of the
    /// target's stratum.
    fn engine(&mut self, alpha: &[u64]) -> Result<Word<Field>> {
        let md = self.modulus;
        let p = self.f.p() as u64;
        let tail = alpha[2..].to_vec();
        let target = ExponentPair::new(alpha[0], alpha[1], md)?;
        let d = target.stratum();
        let (mut w, start) = if d == 1 {
            (
                self.unit_start(&tail)?,
                ExponentPair::new(p - 1, p - 1, md)?,
            )
        } else {
            (
                self.stratum_start(d, &tail)?,
                ExponentPair::new(d - 1, d - 1, md)?,
            )
        };
        let t3 = self.tm_at(2)?;
        for s in exponent_reach_word(target, start)? {
            w = match s {
                Step::Rho => w.conj_by(&t3),
                Step::Tau => swapped(&w, 1, 2)?,
            };
        }
        Ok(w)
    }
}

/// One-shot form of [`DerksenMimic::word`].
pub fn derksen_mimic_word(f: &Field, n: usize, m: u32, alpha: &[u64]) -> Result<Word<Field>> {
    DerksenMimic::new(f, n, m)?.word(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::build;
    use crate::perms::{induced_word, Domain};

    fn check(f: &Field, n: usize, m: u32, dom: &Domain, mimic: &mut DerksenMimic, alpha: &[u64]) {
        let w = mimic.word(alpha).unwrap();
        assert!(w.is_derksen(), "alpha {alpha:?}");
        let a32: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
        let e = Word::from_gen(f, n, build::e(n, 0, &a32, Fq::ONE)).unwrap();
        assert_eq!(
            induced_word(&w, dom).unwrap(),
            induced_word(&e, dom).unwrap(),
            "q={} m={m} alpha {alpha:?}",
            f.q()
        );
    }

    #[test]
    fn three_variables_over_f4_and_f8() {
        for (p, r, m) in [(2u64, 1u32, 2u32), (2, 2, 1), (2, 1, 3)] {
            let f = Field::new(p, r).unwrap();
            let dom = Domain::new(&f, m, 3).unwrap();
            let mut mimic = DerksenMimic::new(&f, 3, m).unwrap();
            let md = mimic.modulus();
            for a in 0..=md {
                for b in 0..=md {
                    check(&f, 3, m, &dom, &mut mimic, &[a, b]);
                }
            }
        }
    }

    #[test]
    fn four_variables() {
        let f2 = Field::new(2, 1).unwrap();
        let dom = Domain::new(&f2, 2, 4).unwrap();
        let mut mimic = DerksenMimic::new(&f2, 4, 2).unwrap();
        for alpha in [
            [1u64, 1, 2],
            [3, 2, 3],
            [0, 3, 2],
            [2, 2, 2],
            [3, 3, 0],
            [2, 3, 1],
        ] {
            check(&f2, 4, 2, &dom, &mut mimic, &alpha);
        }
    }

    #[test]
    fn odd_characteristic_four_variables() {
        let f3 = Field::new(3, 1).unwrap();
        let dom = Domain::new(&f3, 2, 4).unwrap();
        let mut mimic = DerksenMimic::new(&f3, 4, 2).unwrap();
        for alpha in [[3u64, 5, 1], [8, 8, 8], [4, 2, 6], [0, 7, 3]] {
            check(&f3, 4, 2, &dom, &mut mimic, &alpha);
        }
    }

    #[test]
    fn trivial_cases_and_errors() {
        let f2 = Field::new(2, 1).unwrap();
        let w = derksen_mimic_word(&f2, 3, 2, &[1, 1]).unwrap();
        assert_eq!(w.len(), 1);
        assert!(derksen_mimic_word(&f2, 2, 2, &[1]).is_err());
        assert!(derksen_mimic_word(&f2, 3, 2, &[4, 1]).is_err());
    }
}
