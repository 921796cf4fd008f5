//! The family `(X - 2fYΔ - fgΔ², Y + gΔ)` with `Δ = gX + fY²` over
//! `F_q(Z)`, and its three-letter word
//! `(X - (f/g)Y², Y) ∘ (X, Y + g²X) ∘ (X + (f/g)Y², Y)`.

use crate::error::{Error, Result};
use crate::fields::{Field, RatFunc, RatFuncField, ZPoly};
use crate::maps::{Gen, ParamPolyMap, Poly, PolyMap, Word};
use crate::ring::Ring;

pub fn nagata_map(f: &ZPoly, g: &ZPoly, base: &Field) -> Result<ParamPolyMap> {
    if g.is_zero() {
        return Err(Error::Precondition("g must be nonzero".into()));
    }
    let k = RatFuncField::new(base);
    let c = |p: &ZPoly| Poly::constant(&k, 2, k.poly(p.clone()));
    let x = Poly::var(&k, 2, 0);
    let y = Poly::var(&k, 2, 1);
    let delta = c(g).mul(&k, &x).add(&k, &c(f).mul(&k, &y.pow(&k, 2)));
    let two = Poly::constant(&k, 2, k.from_int(2));
    let first = x
        .sub(&k, &two.mul(&k, &c(f)).mul(&k, &y).mul(&k, &delta))
        .sub(&k, &c(f).mul(&k, &c(g)).mul(&k, &delta.pow(&k, 2)));
    let second = y.add(&k, &c(g).mul(&k, &delta));
    PolyMap::new(&k, vec![first, second])
}

pub fn nagata_word(f: &ZPoly, g: &ZPoly, base: &Field) -> Result<Word<RatFuncField>> {
    if g.is_zero() {
        return Err(Error::Precondition("g must be nonzero".into()));
    }
    let k = RatFuncField::new(base);
    let mut w = Word::identity(&k, 2);
    let ratio: RatFunc = k.frac(f.clone(), g.clone())?;
    let outer = |c: RatFunc| Gen::Elementary {
        i: 0,
        exps: vec![0, 2],
        coeff: c,
    };
    let middle = Gen::Elementary {
        i: 1,
        exps: vec![1, 0],
        coeff: k.poly(g.pow(2, base)),
    };
    if f.is_zero() {
        w.push(middle)?;
    } else {
        w.push(outer(k.neg(&ratio)))?;
        w.push(middle)?;
        w.push(outer(ratio))?;
    }
    Ok(w)
}

/// The map and its localized word.
pub fn nagata_family(
    f: &ZPoly,
    g: &ZPoly,
    base: &Field,
) -> Result<(ParamPolyMap, Word<RatFuncField>)> {
    Ok((nagata_map(f, g, base)?, nagata_word(f, g, base)?))
}
