//! Exact words over the Derksen alphabet for elementary maps `E_{1,α}`.

use super::vandermonde::vandermonde_alpha;
use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::{build, Word};

/// `S_{1,c} · w · S_{1,c^{-1}}`; turns `X_1 + f` into `X_1 + c f`.
pub fn scaled(w: &Word<Field>, c: Fq) -> Result<Word<Field>> {
    let f = w.ring().clone();
    if c == Fq::ONE {
        return Ok(w.clone());
    }
    let s = Word::from_gen(&f, w.n(), build::s(0, c))?;
    Ok(s.then(w).then(&s.inverse()))
}

/// `T_{j,-t} · w · T_{j,t}`; turns `X_1 + f(X_j)` into `X_1 + f(X_j + t)`.
pub fn shifted(w: &Word<Field>, j: usize, t: Fq) -> Result<Word<Field>> {
    if t.is_zero() {
        return Ok(w.clone());
    }
    let tr = Word::from_gen(w.ring(), w.n(), build::t(j, t))?;
    Ok(w.conj_by(&tr))
}

/// `R_{i,j} · w · R_{i,j}` (0-based coordinates).
pub fn swapped(w: &Word<Field>, i: usize, j: usize) -> Result<Word<Field>> {
    if i == j {
        return Ok(w.clone());
    }
    let r = Word::from_gen(w.ring(), w.n(), build::swap(i, j))?;
    Ok(w.conj_by(&r))
}

fn check_alpha(n: usize, alpha: &[u32]) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    if alpha.len() + 1 != n {
        return Err(Error::DimensionMismatch(alpha.len() + 1, n));
    }
    Ok(())
}

/// Words for `E_{1,α}` with every `α_i <= p-1`, obtained from `ε` by
/// translation conjugates weighted with Vandermonde coefficients.
pub fn small_exponent_word(f: &Field, n: usize, alpha: &[u32]) -> Result<Word<Field>> {
    check_alpha(n, alpha)?;
    let p = f.p();
    if let Some(a) = alpha.iter().find(|&&a| a >= p) {
        return Err(Error::Precondition(format!(
            "exponent {a} exceeds p-1 = {}",
            p - 1
        )));
    }
    let deg: u32 = alpha.iter().sum();
    if deg == 0 {
        return Word::from_gen(f, n, build::t(0, Fq::ONE));
    }
    if deg == 1 {
        return Word::from_gen(f, n, build::e(n, 0, alpha, Fq::ONE));
    }
    let mut cur = Word::from_gen(f, n, build::epsilon(f, n))?;
    for (k, &a) in alpha.iter().enumerate() {
        if a == p - 1 {
            continue;
        }
        let j = k + 1;
        let c = vandermonde_alpha(p, 0, a as u64)?;
        let mut next = Word::identity(f, n);
        for (t, &ct) in c.iter().enumerate() {
            if ct == 0 {
                continue;
            }
            let piece = shifted(&cur, j, f.from_int(t as i64))?;
            next = next.then(&scaled(&piece, Fq(ct))?);
        }
        cur = next;
    }
    Ok(cur)
}

/// Exact word for `E_{1,α}` when `α` has a zero entry, by commutators
/// `[X_1 + X_2 M_1, X_2 + M_2] = X_1 + M_1 M_2`.
pub fn zero_slot_word(f: &Field, n: usize, alpha: &[u32]) -> Result<Word<Field>> {
    check_alpha(n, alpha)?;
    let z = alpha
        .iter()
        .position(|&a| a == 0)
        .ok_or_else(|| Error::Precondition("exponent vector has no zero entry".into()))?;
    let j = z + 1;
    let mut a = alpha.to_vec();
    a.swap(0, z);
    let w = zero_at_two(f, n, &a)?;
    swapped(&w, 1, j)
}

fn zero_at_two(f: &Field, n: usize, alpha: &[u32]) -> Result<Word<Field>> {
    let p = f.p();
    if alpha.iter().all(|&a| a < p) {
        return small_exponent_word(f, n, alpha);
    }
    let mut u = vec![1u32];
    let mut rest = vec![0u32];
    for &a in &alpha[1..] {
        let b = a.min(p - 1);
        u.push(b);
        rest.push(a - b);
    }
    let uw = small_exponent_word(f, n, &u)?;
    let inner = zero_at_two(f, n, &rest)?;
    let vw = swapped(&inner, 0, 1)?;
    Ok(uw.commutator(&vw))
}

/// Exact word over `{T, S, R, ε}` for `E_{1,α}`.
pub fn elementary_in_da_word(f: &Field, n: usize, alpha: &[u32]) -> Result<Word<Field>> {
    check_alpha(n, alpha)?;
    let p = f.p();
    if alpha.iter().all(|&a| a < p) {
        small_exponent_word(f, n, alpha)
    } else if alpha.contains(&0) {
        zero_slot_word(f, n, alpha)
    } else {
        Err(Error::Unsupported(format!(
            "E_1,{alpha:?} has no zero exponent and an exponent above p-1"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{parse_map, Gen};

    fn da_only(w: &Word<Field>) -> bool {
        w.is_derksen()
    }

    fn target(f: &Field, n: usize, alpha: &[u32]) -> crate::maps::PolyMap<Field> {
        Word::from_gen(f, n, build::e(n, 0, alpha, Fq::ONE))
            .unwrap()
            .to_map()
    }

    #[test]
    fn documented_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let w = elementary_in_da_word(&f3, 3, &[1, 2]).unwrap();
        assert!(da_only(&w));
        assert_eq!(
            w.to_map(),
            parse_map("(x1+x2*x3^2, x2, x3)", &f3, 3).unwrap()
        );

        let eps = elementary_in_da_word(&f3, 3, &[2, 2]).unwrap();
        assert_eq!(eps.len(), 1);
        assert_eq!(eps.letters()[0].gen, build::epsilon(&f3, 3));

        let t = elementary_in_da_word(&f3, 3, &[0, 0]).unwrap();
        assert!(matches!(t.letters()[0].gen, Gen::Translate { i: 0, .. }));
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn all_small_exponents_recompose() {
        for (p, r, n) in [(2, 1, 3), (3, 1, 3), (2, 2, 4), (5, 1, 3), (3, 1, 4)] {
            let f = Field::new(p, r).unwrap();
            let p = p as u32;
            let total = (p as usize).pow(n as u32 - 1);
            for code in 0..total {
                let alpha: Vec<u32> = (0..n - 1)
                    .map(|k| (code / (p as usize).pow(k as u32)) as u32 % p)
                    .collect();
                let w = elementary_in_da_word(&f, n, &alpha).unwrap();
                assert!(da_only(&w));
                assert_eq!(w.to_map(), target(&f, n, &alpha), "alpha {alpha:?}");
            }
        }
    }

    #[test]
    fn zero_slot_large_exponents() {
        let f2 = Field::new(2, 1).unwrap();
        for alpha in [[0u32, 3], [3, 0], [0, 5]] {
            let w = elementary_in_da_word(&f2, 3, &alpha).unwrap();
            assert!(da_only(&w));
            assert_eq!(w.to_map(), target(&f2, 3, &alpha));
        }
        let f3 = Field::new(3, 1).unwrap();
        for alpha in [[4u32, 0, 7], [0, 3, 2], [5, 5, 0]] {
            let w = elementary_in_da_word(&f3, 4, &alpha).unwrap();
            assert!(da_only(&w));
            assert_eq!(w.to_map(), target(&f3, 4, &alpha));
        }
    }

    #[test]
    fn unsupported_without_zero() {
        let f2 = Field::new(2, 1).unwrap();
        assert!(matches!(
            elementary_in_da_word(&f2, 3, &[1, 2]),
            Err(Error::Unsupported(_))
        ));
    }
}
