//! Decomposition of plane automorphisms over a finite field into
//! triangular letters, swaps and one affine letter, by repeatedly cancelling
//! the leading form of the higher-degree component.

use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::{linalg, Gen, Poly, PolyMap, Word};
use crate::ring::Ring;

/// `F = L_1 ∘ ... ∘ L_s ∘ A` with each `L_i` either `(X + c Y^k, Y)` or the
/// swap, and `A` affine.
pub fn jvdk_decompose_dim2(map: &PolyMap<Field>) -> Result<Word<Field>> {
    let f = map.ring().clone();
    if map.n() != 2 {
        return Err(Error::DimensionMismatch(map.n(), 2));
    }
    let jac = map.jacobian_det();
    if jac.is_zero() || !jac.is_constant() {
        return Err(Error::NotAutomorphism(
            "Jacobian determinant is not a nonzero constant".into(),
        ));
    }
    let mut comps = map.components().to_vec();
    let mut w = Word::identity(&f, 2);
    loop {
        let d0 = comps[0].total_degree().unwrap_or(0);
        let d1 = comps[1].total_degree().unwrap_or(0);
        if d0.max(d1) <= 1 {
            break;
        }
        if d0 < d1 {
            comps.swap(0, 1);
            w.push(Gen::Swap { i: 0, j: 1 })?;
            continue;
        }
        let (c, k) = leading_ratio(&f, &comps[0], d0, &comps[1], d1)?;
        w.push(Gen::Elementary {
            i: 0,
            exps: vec![0, k],
            coeff: c,
        })?;
        let sub = comps[1].pow(&f, k).scale(&f, &c);
        comps[0] = comps[0].sub(&f, &sub);
    }
    let rest = PolyMap::new(&f, comps)?;
    let matrix = rest.linear_matrix();
    if linalg::inverse(&f, &matrix).is_none() {
        return Err(Error::NotAutomorphism(
            "affine remainder is singular".into(),
        ));
    }
    w.push(Gen::Affine {
        matrix,
        shift: rest.constant_part(),
    })?;
    Ok(w)
}

/// `(c, k)` with `top(a) = c · top(b)^k`.
fn leading_ratio(f: &Field, a: &Poly<Fq>, da: u32, b: &Poly<Fq>, db: u32) -> Result<(Fq, u32)> {
    let fail = || Error::NotAutomorphism("leading forms do not cancel".into());
    if db == 0 || !da.is_multiple_of(db) {
        return Err(fail());
    }
    let k = da / db;
    let ta = a.homogeneous_part(da);
    let tb = b.homogeneous_part(db).pow(f, k);
    let (mono, lead_b) = tb.terms().iter().next_back().ok_or_else(fail)?;
    let c = Ring::mul(
        f,
        &ta.coeff(f, mono),
        &Ring::inv(f, lead_b).expect("nonzero"),
    );
    if Ring::is_zero(f, &c) || ta != tb.scale(f, &c) {
        return Err(fail());
    }
    Ok((c, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{build, parse_map};
    use rand::{Rng as _, SeedableRng};

    fn random_tame(f: &Field, seed: u64, len: usize) -> Word<Field> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let q = f.q();
        let mut w = Word::identity(f, 2);
        for _ in 0..len {
            let i = rng.gen_range(0..2);
            let unit = Fq(rng.gen_range(1..q));
            let g = match rng.gen_range(0..4) {
                0 => build::t(i, Fq(rng.gen_range(0..q))),
                1 => build::s(i, unit),
                2 => build::swap(0, 1),
                _ => build::e(2, i, &[rng.gen_range(1..4)], unit),
            };
            w.push(g).unwrap();
        }
        w
    }

    #[test]
    fn affine_and_single_triangular() {
        let f3 = Field::new(3, 1).unwrap();
        let a = parse_map("(x1 + 2*x2 + 1, x2)", &f3, 2).unwrap();
        let w = jvdk_decompose_dim2(&a).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.to_map(), a);
        let e = parse_map("(x1 + x2^2, x2)", &f3, 2).unwrap();
        let w = jvdk_decompose_dim2(&e).unwrap();
        assert!(matches!(w.letters()[0].gen, Gen::Elementary { .. }));
        assert_eq!(w.to_map(), e);
    }

    #[test]
    fn round_trip_random_words() {
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = Field::new(p, r).unwrap();
            for seed in 0..60 {
                let m = random_tame(&f, seed, 8).to_map();
                let w = jvdk_decompose_dim2(&m).unwrap();
                assert_eq!(w.to_map(), m, "q={} seed {seed}", f.q());
            }
        }
    }

    #[test]
    fn rejects_non_automorphisms() {
        let f3 = Field::new(3, 1).unwrap();
        let m = parse_map("(x1^2, x2)", &f3, 2).unwrap();
        assert!(matches!(
            jvdk_decompose_dim2(&m),
            Err(Error::NotAutomorphism(_))
        ));
        let m = parse_map("(x1 + x2^2 + x1*x2^3, x2)", &f3, 2).unwrap();
        assert!(jvdk_decompose_dim2(&m).is_err());
    }
}
