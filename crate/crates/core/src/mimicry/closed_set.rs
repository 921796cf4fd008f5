//! Reproducing a map on the zeros of one irreducible factor `g_i` and the
//! identity everywhere else in `F_{q^m}`.
//!
//! `F_α` is written as a product of conjugates `P ∘ (X + t(X)) ∘ P^{-1}` with
//! `P` a coordinate permutation and `t` triangular. Each `t` is lifted to
//! `F_q[Z]` and multiplied by `ρ = 1 - g_i^{q^m - 1}`; the permutations are
//! kept as they are and cancel wherever `ρ` vanishes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fields::{Embedding, Field, Fq, RatFuncField, ZPoly};
use crate::maps::{linalg, Gen, ParamPolyMap, Poly, Word};

use super::jvdk::jvdk_decompose_dim2;
use super::normalize::perm_swaps;
use super::open_set::rho_gadget;

/// `P ∘ (X + t(X)) ∘ P^{-1}` with `P = Perm(sigma)`.
#[derive(Debug, Clone)]
struct Conjugate {
    sigma: Vec<usize>,
    tails: Vec<Poly<Fq>>,
}

/// `Perm(a) ∘ Perm(b)`.
fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&k| b[k]).collect()
}

fn swap_perm(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (0..n).collect();
    s.swap(i, j);
    s
}

/// Transvections `(i, j, a)`, read as `I + a e_{ij}`, whose product in order
/// is `m`. Fails unless `det m = 1`.
pub fn sl_transvections(f: &Field, m: &[Vec<Fq>]) -> Result<Vec<(usize, usize, Fq)>> {
    let n = m.len();
    let mut a: Vec<Vec<Fq>> = m.to_vec();
    let mut ops: Vec<(usize, usize, Fq)> = Vec::new();
    let mut row_op = |a: &mut Vec<Vec<Fq>>, i: usize, j: usize, c: Fq| {
        if c.is_zero() {
            return;
        }
        for col in 0..n {
            let t = f.mul(c, a[j][col]);
            a[i][col] = f.add(a[i][col], t);
        }
        ops.push((i, j, c));
    };
    for k in 0..n {
        if a[k][k].is_zero() {
            let r = (k + 1..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or_else(|| Error::Verification("linear part is singular".into()))?;
            row_op(&mut a, k, r, Fq::ONE);
        }
        if a[k][k] != Fq::ONE && k + 1 < n {
            let c = f.div(f.sub(Fq::ONE, a[k + 1][k]), a[k][k])?;
            row_op(&mut a, k + 1, k, c);
            let c = f.sub(Fq::ONE, a[k][k]);
            row_op(&mut a, k, k + 1, c);
        }
        if a[k][k] != Fq::ONE {
            return Err(Error::Verification(
                "linear part does not have determinant 1".into(),
            ));
        }
        for i in 0..n {
            if i != k {
                let c = f.neg(a[i][k]);
                row_op(&mut a, i, k, c);
            }
        }
    }
    debug_assert_eq!(a, linalg::identity(f, n));
    Ok(ops.into_iter().map(|(i, j, c)| (i, j, f.neg(c))).collect())
}

fn conjugate_form(w: &Word<Field>) -> Result<Vec<Conjugate>> {
    let f = w.ring();
    let n = w.n();
    let id: Vec<usize> = (0..n).collect();
    let mut pi = id.clone();
    let mut out = Vec::new();
    let mut emit = |sigma: Vec<usize>, tails: Vec<Poly<Fq>>| {
        if tails.iter().any(|t| !t.is_zero()) {
            out.push(Conjugate { sigma, tails });
        }
    };
    for g in w.resolved() {
        match g {
            Gen::Swap { i, j } => pi = compose_perm(&pi, &swap_perm(n, i, j)),
            Gen::Translate { i, c } => {
                let mut tails = vec![Poly::zero(n); n];
                tails[i] = Poly::constant(f, n, c);
                emit(pi.clone(), tails);
            }
            Gen::Elementary { i, exps, coeff } => {
                let mut tails = vec![Poly::zero(n); n];
                if exps[..i].iter().all(|&e| e == 0) {
                    tails[i] = Poly::monomial(f, n, exps, coeff);
                    emit(pi.clone(), tails);
                } else {
                    let mut e = exps.clone();
                    e.swap(0, i);
                    tails[0] = Poly::monomial(f, n, e, coeff);
                    emit(compose_perm(&pi, &swap_perm(n, 0, i)), tails);
                }
            }
            Gen::Affine { matrix, shift } => {
                emit(
                    pi.clone(),
                    shift.iter().map(|c| Poly::constant(f, n, *c)).collect(),
                );
                let p_mat: Vec<Vec<Fq>> = pi
                    .iter()
                    .map(|&s| {
                        (0..n)
                            .map(|c| if c == s { Fq::ONE } else { Fq::ZERO })
                            .collect()
                    })
                    .collect();
                let lin = linalg::mul(f, &p_mat, &matrix);
                for (i, j, a) in sl_transvections(f, &lin)? {
                    let mut tails = vec![Poly::zero(n); n];
                    if i < j {
                        tails[i] = Poly::var(f, n, j).scale(f, &a);
                        emit(id.clone(), tails);
                    } else {
                        tails[j] = Poly::var(f, n, i).scale(f, &a);
                        emit(swap_perm(n, i, j), tails);
                    }
                }
                pi = id.clone();
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "letter {} in a closed-set decomposition",
                    other.render(f)
                )))
            }
        }
    }
    if pi != id {
        return Err(Error::Verification(
            "the permutations of the decomposition do not cancel".into(),
        ));
    }
    Ok(out)
}

/// `β ↦ h ∈ F_q[Z]` with `deg h < deg g_i` and `h(α) = β`, for all `β ∈ F_q(α)`.
fn lift_table(emb: &Embedding, alpha: Fq, d: usize) -> HashMap<Fq, ZPoly> {
    let base = emb.src();
    let big = emb.dst();
    let q = base.q() as u64;
    let mut powers = vec![Fq::ONE; d];
    for j in 1..d {
        powers[j] = big.mul(powers[j - 1], alpha);
    }
    let mut table = HashMap::new();
    for idx in 0..q.pow(d as u32) {
        let mut x = idx;
        let mut coeffs = Vec::with_capacity(d);
        let mut value = Fq::ZERO;
        for &pw in &powers {
            let c = base.element((x % q) as u32).expect("digit below q");
            x /= q;
            value = big.add(value, big.mul(emb.map(c), pw));
            coeffs.push(c);
        }
        table
            .entry(value)
            .or_insert_with(|| ZPoly::from_coeffs(coeffs));
    }
    table
}

/// Gate a decomposition of `F_α` over `F_{q^m}`, `α` a root of `g_i`.
pub fn gate_decomposition(
    k: &RatFuncField,
    g_i: &ZPoly,
    m: u32,
    emb: &Embedding,
    alpha: Fq,
    decomposition: &Word<Field>,
) -> Result<Word<RatFuncField>> {
    let base = k.base();
    let n = decomposition.n();
    let rho = rho_gadget(g_i, base, m);
    let table = lift_table(emb, alpha, g_i.degree().max(1) as usize);
    let mut lift = |b: &Fq| -> Result<crate::fields::RatFunc> {
        let h = table
            .get(b)
            .ok_or_else(|| Error::Verification("coefficient outside F_q(alpha)".into()))?;
        Ok(k.poly(h.mul(&rho, base)))
    };
    let mut w = Word::identity(k, n);
    for c in conjugate_form(decomposition)? {
        let swaps = perm_swaps(&c.sigma);
        for &(i, j) in &swaps {
            w.push(Gen::Swap { i, j })?;
        }
        let tails = c
            .tails
            .iter()
            .map(|t| t.map_coeffs(k, &mut lift))
            .collect::<Result<Vec<_>>>()?;
        w.push(Gen::Jonq {
            scalars: vec![crate::ring::Ring::one(k); n],
            tails,
        })?;
        for &(i, j) in swaps.iter().rev() {
            w.push(Gen::Swap { i, j })?;
        }
    }
    Ok(w)
}

/// A word `G` over `F_q[Z]` with `G_c = F_c` where `g_i(c) = 0` and
/// `G_c = I` elsewhere, `c ∈ F_{q^m}`. Plane maps only; use
/// [`gate_decomposition`] with a supplied decomposition otherwise.
pub fn closed_set_mimic(map: &ParamPolyMap, g_i: &ZPoly, m: u32) -> Result<Word<RatFuncField>> {
    let k = map.ring().clone();
    let base = k.base().clone();
    if !g_i.is_irreducible(&base) {
        return Err(Error::Precondition(format!(
            "{} is not irreducible",
            g_i.render(&base)
        )));
    }
    let big = Field::new(base.p() as u64, base.r() * m)?;
    let emb = Embedding::new(&base, &big)?;
    let Some(&alpha) = g_i.roots(&emb).first() else {
        return Ok(Word::identity(&k, map.n()));
    };
    let fa = map.specialize(&emb, alpha)?;
    if fa.is_identity() {
        return Ok(Word::identity(&k, map.n()));
    }
    if map.n() != 2 {
        return Err(Error::Unsupported(
            "automatic decomposition is only available in dimension 2".into(),
        ));
    }
    let dec = jvdk_decompose_dim2(&fa)?;
    gate_decomposition(&k, g_i, m, &emb, alpha, &dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::PolyMap;
    use crate::mimicry::nagata::nagata_map;

    fn zp(f: &Field, c: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(c.iter().map(|&x| f.from_int(x)).collect())
    }

    fn check(map: &ParamPolyMap, g: &ZPoly, m: u32) {
        let base = map.ring().base().clone();
        let w = closed_set_mimic(map, g, m).unwrap();
        let big = Field::new(base.p() as u64, base.r() * m).unwrap();
        let emb = Embedding::new(&base, &big).unwrap();
        for c in big.elements() {
            let gc = w.specialize(&emb, c).unwrap().to_map();
            if g.eval(&emb, c).is_zero() {
                assert_eq!(gc, map.specialize(&emb, c).unwrap(), "root {c:?}");
            } else {
                assert!(gc.is_identity(), "c {c:?}");
            }
        }
    }

    #[test]
    fn transvections_recompose() {
        let f5 = Field::new(5, 1).unwrap();
        for m in [
            vec![vec![Fq(2), Fq(0)], vec![Fq(0), Fq(3)]],
            vec![vec![Fq(0), Fq(1)], vec![Fq(4), Fq(0)]],
            vec![vec![Fq(1), Fq(2)], vec![Fq(3), Fq(2)]],
        ] {
            let ops = sl_transvections(&f5, &m).unwrap();
            let mut acc = linalg::identity(&f5, 2);
            for (i, j, a) in ops {
                let mut t = linalg::identity(&f5, 2);
                t[i][j] = a;
                acc = linalg::mul(&f5, &acc, &t);
            }
            assert_eq!(acc, m);
        }
        assert!(sl_transvections(&f5, &[vec![Fq(2), Fq(0)], vec![Fq(0), Fq(1)]]).is_err());
    }

    #[test]
    fn nagata_at_its_roots() {
        let f3 = Field::new(3, 1).unwrap();
        let map = nagata_map(&ZPoly::one(), &ZPoly::z(), &f3).unwrap();
        check(&map, &ZPoly::z(), 1);
        check(&map, &ZPoly::z(), 2);
        check(&map, &zp(&f3, &[1, 0, 1]), 2);
        let f2 = Field::new(2, 1).unwrap();
        let map2 = nagata_map(&ZPoly::z(), &zp(&f2, &[1, 1, 1]), &f2).unwrap();
        check(&map2, &zp(&f2, &[1, 1, 1]), 2);
    }

    #[test]
    fn frobenius_commutes_with_specialization() {
        use rand::{Rng as _, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, m) in [(2u64, 3u32), (3, 2)] {
            let base = Field::new(p, 1).unwrap();
            let big = Field::new(p, m).unwrap();
            let emb = Embedding::new(&base, &big).unwrap();
            for _ in 0..10 {
                let mut rand_poly = |deg: usize| {
                    ZPoly::from_coeffs((0..=deg).map(|_| Fq(rng.gen_range(0..p as u32))).collect())
                };
                let (f, mut g) = (rand_poly(2), rand_poly(2));
                if g.is_zero() {
                    g = ZPoly::one();
                }
                let map = nagata_map(&f, &g, &base).unwrap();
                for a in big.elements() {
                    let phi = |x: Fq| big.pow(x, p);
                    let lhs = map.specialize(&emb, phi(a)).unwrap();
                    let rhs = map
                        .specialize(&emb, a)
                        .unwrap()
                        .map_coeffs(&big, |x| Ok(phi(*x)))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn empty_words() {
        let f2 = Field::new(2, 1).unwrap();
        let k = RatFuncField::new(&f2);
        let id = PolyMap::identity(&k, 2);
        assert!(closed_set_mimic(&id, &ZPoly::z(), 1).unwrap().is_empty());
        let map = nagata_map(&ZPoly::one(), &ZPoly::z(), &f2).unwrap();
        let no_root = zp(&f2, &[1, 1, 1]);
        assert!(closed_set_mimic(&map, &no_root, 1).unwrap().is_empty());
        assert!(closed_set_mimic(&map, &zp(&f2, &[0, 0, 1]), 1).is_err());
    }
}
