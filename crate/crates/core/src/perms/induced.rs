//! The bijection of `F_{q^m}^n` induced by an automorphism over `F_q`.

use rayon::prelude::*;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::fields::{Embedding, Field, Fq, PointCodec};
use crate::maps::{Gen, PolyMap, Word};

pub const DEFAULT_DOMAIN_BOUND: u64 = 1 << 20;

/// The point set `F_{q^m}^n` with its canonical enumeration.
#[derive(Clone, Debug)]
pub struct Domain {
    ext: Field,
    emb: Embedding,
    codec: PointCodec,
}

impl Domain {
    pub fn new(base: &Field, m: u32, n: usize) -> Result<Self> {
        Self::with_bound(base, m, n, DEFAULT_DOMAIN_BOUND)
    }

    pub fn with_bound(base: &Field, m: u32, n: usize, bound: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let ext = if m == 1 {
            base.clone()
        } else {
            Field::new(base.p() as u64, base.r() * m)?
        };
        let codec = PointCodec::new(ext.q(), n)?;
        if codec.size() > bound {
            return Err(Error::DomainTooLarge(codec.size()));
        }
        let emb = if m == 1 {
            Embedding::identity(base)
        } else {
            Embedding::new(base, &ext)?
        };
        Ok(Domain { ext, emb, codec })
    }

    pub fn field(&self) -> &Field {
        &self.ext
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn codec(&self) -> &PointCodec {
        &self.codec
    }

    pub fn size(&self) -> usize {
        self.codec.size() as usize
    }

    pub fn n(&self) -> usize {
        self.codec.n()
    }

    pub fn point(&self, i: usize) -> Vec<Fq> {
        let mut u = vec![Fq::ZERO; self.n()];
        self.codec.decode_into(i as u64, &mut u);
        u
    }

    pub fn index(&self, u: &[Fq]) -> usize {
        self.codec.encode(u).expect("point of this domain") as usize
    }

    /// Indices of the points whose coordinate `coord` (0-based) is nonzero.
    pub fn punctured(&self, coord: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| !self.point(i)[coord].is_zero())
            .collect()
    }

    /// Tabulate a point function as a permutation, checking bijectivity.
    pub fn tabulate(&self, f: impl Fn(&mut [Fq]) + Sync) -> Result<Perm> {
        let images: Vec<u32> = (0..self.size())
            .into_par_iter()
            .map(|i| {
                let mut u = self.point(i);
                f(&mut u);
                self.index(&u) as u32
            })
            .collect();
        Perm::from_images(images)
    }
}

/// `π_{q^m}` of a word.
pub fn induced_word(w: &Word<Field>, dom: &Domain) -> Result<Perm> {
    if w.n() != dom.n() {
        return Err(Error::DimensionMismatch(w.n(), dom.n()));
    }
    let ext = w.embed(dom.embedding())?;
    let gens: Vec<Gen<Fq>> = ext.resolved();
    let field = dom.field().clone();
    dom.tabulate(|u| {
        for g in gens.iter().rev() {
            g.apply_point(&field, u);
        }
    })
}

/// `π_{q^m}` of a polynomial map (fails unless bijective on the domain).
pub fn induced_map(f: &PolyMap<Field>, dom: &Domain) -> Result<Perm> {
    if f.n() != dom.n() {
        return Err(Error::DimensionMismatch(f.n(), dom.n()));
    }
    let ext = f.embed(dom.embedding())?;
    dom.tabulate(|u| {
        let v = ext.eval(u).expect("dimension checked");
        u.copy_from_slice(&v);
    })
}

/// Permutation of a single generator.
pub fn induced_gen(g: &Gen<Fq>, base: &Field, dom: &Domain) -> Result<Perm> {
    let w = Word::from_gen(base, dom.n(), g.clone())?;
    induced_word(&w, dom)
}
