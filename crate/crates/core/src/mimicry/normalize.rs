//! Rewriting a word into strictly triangular letters and coordinate swaps.
//!
//! Translations and diagonal maps are pushed to the left through every other
//! factor. What reaches the left end must be a diagonal map of determinant
//! `±1`, which is then itself written with triangular letters and swaps.

use crate::error::{Error, Result};
use crate::maps::{linalg, Gen, Poly, Word};
use crate::ring::Ring;

/// Working factor. `Perm(σ)` is `X ↦ (X_{σ(0)}, ..., X_{σ(n-1)})`.
#[derive(Clone, Debug)]
enum Factor<E> {
    Shift(Vec<E>),
    Diag(Vec<E>),
    Perm(Vec<usize>),
    /// `X ↦ X + t(X)` with `t_k` in the later variables and `t(0) = 0`.
    Strict(Vec<Poly<E>>),
}

/// Whether `g` is a coordinate swap or a strictly triangular letter.
pub fn is_normal_gen<R: Ring>(r: &R, n: usize, g: &Gen<R::Elem>) -> bool {
    match g {
        Gen::Swap { .. } => true,
        Gen::Jonq { scalars, tails } => {
            scalars.iter().all(|s| r.is_one(s))
                && tails.iter().enumerate().all(|(k, t)| {
                    r.is_zero(&t.constant_term(r)) && t.uses_only(|v| v > k) && t.nvars() == n
                })
        }
        _ => false,
    }
}

pub fn is_normalized<R: Ring>(w: &Word<R>) -> bool {
    w.uses_only(|g| is_normal_gen(w.ring(), w.n(), g))
}

/// `X ↦ X + t(X)` as a letter.
pub fn strict_gen<R: Ring>(r: &R, tails: Vec<Poly<R::Elem>>) -> Gen<R::Elem> {
    Gen::Jonq {
        scalars: vec![r.one(); tails.len()],
        tails,
    }
}

fn swap_perm(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (0..n).collect();
    s.swap(i, j);
    s
}

fn unit<R: Ring>(r: &R, n: usize, i: usize, c: R::Elem) -> Vec<R::Elem> {
    let mut v = vec![r.zero(); n];
    v[i] = c;
    v
}

/// `X_i ↦ X_i + a X_j` with `i < j`.
fn upper<R: Ring>(r: &R, n: usize, i: usize, j: usize, a: R::Elem) -> Factor<R::Elem> {
    let mut tails = vec![Poly::zero(n); n];
    tails[i] = Poly::var(r, n, j).scale(r, &a);
    Factor::Strict(tails)
}

fn to_factors<R: Ring>(r: &R, n: usize, g: &Gen<R::Elem>) -> Result<Vec<Factor<R::Elem>>> {
    Ok(match g {
        Gen::Translate { i, c } => vec![Factor::Shift(unit(r, n, *i, c.clone()))],
        Gen::Scale { i, c } => {
            let mut d = vec![r.one(); n];
            d[*i] = c.clone();
            vec![Factor::Diag(d)]
        }
        Gen::Swap { i, j } => vec![Factor::Perm(swap_perm(n, *i, *j))],
        Gen::Elementary { i, exps, coeff } => {
            if exps.iter().all(|&e| e == 0) {
                return Ok(vec![Factor::Shift(unit(r, n, *i, coeff.clone()))]);
            }
            if exps[..*i].iter().all(|&e| e == 0) {
                let mut tails = vec![Poly::zero(n); n];
                tails[*i] = Poly::monomial(r, n, exps.clone(), coeff.clone());
                return Ok(vec![Factor::Strict(tails)]);
            }
            let mut e = exps.clone();
            e.swap(0, *i);
            let mut tails = vec![Poly::zero(n); n];
            tails[0] = Poly::monomial(r, n, e, coeff.clone());
            let s = swap_perm(n, 0, *i);
            vec![
                Factor::Perm(s.clone()),
                Factor::Strict(tails),
                Factor::Perm(s),
            ]
        }
        Gen::Jonq { scalars, tails } => {
            let inv: Vec<R::Elem> = scalars
                .iter()
                .map(|s| {
                    r.inv(s).ok_or_else(|| {
                        Error::Precondition("triangular scalar is not a unit".into())
                    })
                })
                .collect::<Result<_>>()?;
            let scaled: Vec<Poly<R::Elem>> =
                tails.iter().zip(&inv).map(|(t, s)| t.scale(r, s)).collect();
            let shift: Vec<R::Elem> = scaled.iter().map(|t| t.constant_term(r)).collect();
            let strict = scaled
                .iter()
                .zip(&shift)
                .map(|(t, c)| t.sub(r, &Poly::constant(r, n, c.clone())))
                .collect();
            vec![
                Factor::Diag(scalars.clone()),
                Factor::Shift(shift),
                Factor::Strict(strict),
            ]
        }
        Gen::Affine { matrix, shift } => {
            let mut out = vec![Factor::Shift(shift.clone())];
            out.extend(linear_factors(r, matrix)?);
            out
        }
    })
}

/// `M = P^{-1} W (W L W) W D U` from Gaussian elimination with row pivoting,
/// `W` the reversal of coordinates.
fn linear_factors<R: Ring>(r: &R, m: &[Vec<R::Elem>]) -> Result<Vec<Factor<R::Elem>>> {
    let n = m.len();
    let mut a: Vec<Vec<R::Elem>> = m.to_vec();
    let mut l = linalg::identity(r, n);
    let mut rowp: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let piv = (k..n)
            .find(|&i| !r.is_zero(&a[i][k]))
            .ok_or_else(|| Error::Precondition("singular linear part".into()))?;
        if piv != k {
            a.swap(k, piv);
            rowp.swap(k, piv);
            for c in 0..k {
                let tmp = l[k][c].clone();
                l[k][c] = l[piv][c].clone();
                l[piv][c] = tmp;
            }
        }
        let inv = r.inv(&a[k][k]).expect("nonzero pivot");
        for i in k + 1..n {
            if r.is_zero(&a[i][k]) {
                continue;
            }
            let f = r.mul(&a[i][k], &inv);
            for j in k..n {
                let t = r.mul(&f, &a[k][j]);
                a[i][j] = r.sub(&a[i][j], &t);
            }
            l[i][k] = f;
        }
    }
    let mut p_inv = vec![0; n];
    for (k, &s) in rowp.iter().enumerate() {
        p_inv[s] = k;
    }
    let rev: Vec<usize> = (0..n).rev().collect();
    let mut wlw = vec![Poly::zero(n); n];
    for (k, t) in wlw.iter_mut().enumerate() {
        let row = n - 1 - k;
        for j in 0..row {
            *t = t.add(r, &Poly::var(r, n, n - 1 - j).scale(r, &l[row][j]));
        }
    }
    let d: Vec<R::Elem> = (0..n).map(|k| a[k][k].clone()).collect();
    let mut u = vec![Poly::zero(n); n];
    for (k, t) in u.iter_mut().enumerate() {
        let inv = r.inv(&d[k]).expect("nonzero pivot");
        for j in k + 1..n {
            *t = t.add(r, &Poly::var(r, n, j).scale(r, &r.mul(&a[k][j], &inv)));
        }
    }
    Ok(vec![
        Factor::Perm(p_inv),
        Factor::Perm(rev.clone()),
        Factor::Strict(wlw),
        Factor::Perm(rev),
        Factor::Diag(d),
        Factor::Strict(u),
    ])
}

/// Factors for `diag(d)` with `∏ d = ±1`: blocks `diag(a^{-1}, a)` on
/// neighbouring coordinates and a final sign on the last one.
fn diag_factors<R: Ring>(r: &R, d: &[R::Elem]) -> Result<Vec<Factor<R::Elem>>> {
    let n = d.len();
    if d.iter().all(|x| r.is_one(x)) {
        return Ok(Vec::new());
    }
    if n < 2 {
        return Err(Error::Precondition(
            "a nontrivial diagonal needs n >= 2".into(),
        ));
    }
    let one = r.one();
    let minus_one = r.neg(&one);
    let mut out = Vec::new();
    let mut a = one.clone();
    for k in 0..n - 1 {
        let dk = r
            .inv(&d[k])
            .ok_or_else(|| Error::Precondition("diagonal entry is not a unit".into()))?;
        a = r.mul(&a, &dk);
        if r.is_one(&a) {
            continue;
        }
        let a_inv = r.inv(&a).expect("unit");
        let rr = Factor::Perm(swap_perm(n, k, k + 1));
        out.extend([
            upper(r, n, k, k + 1, a_inv.clone()),
            rr.clone(),
            upper(r, n, k, k + 1, r.sub(&one, &a)),
            rr.clone(),
            upper(r, n, k, k + 1, minus_one.clone()),
            rr.clone(),
            upper(r, n, k, k + 1, r.sub(&one, &a_inv)),
            rr,
        ]);
    }
    let sign = r.mul(&d[n - 1], &r.inv(&a).expect("unit"));
    if r.is_one(&sign) {
        return Ok(out);
    }
    if sign != minus_one {
        return Err(Error::Precondition(
            "linear part does not have determinant ±1".into(),
        ));
    }
    let rr = Factor::Perm(swap_perm(n, n - 2, n - 1));
    out.extend([
        upper(r, n, n - 2, n - 1, one.clone()),
        rr.clone(),
        upper(r, n, n - 2, n - 1, minus_one),
        rr.clone(),
        upper(r, n, n - 2, n - 1, one),
        rr,
    ]);
    Ok(out)
}

/// Swaps `S_1 ... S_k` with `S_1 ∘ ... ∘ S_k = Perm(σ)`.
pub(crate) fn perm_swaps(sigma: &[usize]) -> Vec<(usize, usize)> {
    let mut s = sigma.to_vec();
    let mut out = Vec::new();
    for k in 0..s.len() {
        if s[k] == k {
            continue;
        }
        let j = s.iter().position(|&x| x == k).expect("permutation");
        out.push((k, j));
        s.swap(k, j);
    }
    out
}

fn emit<R: Ring>(r: &R, n: usize, factors: &[Factor<R::Elem>]) -> Result<Word<R>> {
    let mut w = Word::identity(r, n);
    for f in factors {
        match f {
            Factor::Perm(s) => {
                for (i, j) in perm_swaps(s) {
                    w.push(Gen::Swap { i, j })?;
                }
            }
            Factor::Strict(t) => {
                if t.iter().any(|p| !p.is_zero()) {
                    w.push(strict_gen(r, t.clone()))?;
                }
            }
            _ => unreachable!("only swaps and strict factors are emitted"),
        }
    }
    Ok(w)
}

/// Word for `diag(d)` over swaps and linear strictly triangular letters.
pub fn diagonal_word<R: Ring>(r: &R, d: &[R::Elem]) -> Result<Word<R>> {
    emit(r, d.len(), &diag_factors(r, d)?)
}

/// Rewrite `w` using only coordinate swaps and strictly triangular letters.
///
/// The composed map must fix the origin and its linear part must have
/// determinant `±1`.
pub fn normalize_word<R: Ring>(w: &Word<R>) -> Result<Word<R>> {
    let r = w.ring();
    let n = w.n();
    let mut factors = Vec::new();
    for g in w.resolved() {
        factors.extend(to_factors(r, n, &g)?);
    }
    let mut b = vec![r.zero(); n];
    let mut d = vec![r.one(); n];
    let mut out = Vec::new();
    // invariant: the processed suffix equals τ_b ∘ diag(d) ∘ reverse(out)
    for f in factors.into_iter().rev() {
        match f {
            Factor::Shift(c) => {
                for (x, y) in b.iter_mut().zip(&c) {
                    *x = r.add(x, y);
                }
            }
            Factor::Diag(e) => {
                for k in 0..n {
                    b[k] = r.mul(&b[k], &e[k]);
                    d[k] = r.mul(&d[k], &e[k]);
                }
            }
            Factor::Perm(s) => {
                b = s.iter().map(|&j| b[j].clone()).collect();
                d = s.iter().map(|&j| d[j].clone()).collect();
                out.push(Factor::Perm(s));
            }
            Factor::Strict(t) => {
                let subs: Vec<Poly<R::Elem>> = (0..n)
                    .map(|j| {
                        Poly::var(r, n, j)
                            .scale(r, &d[j])
                            .add(r, &Poly::constant(r, n, b[j].clone()))
                    })
                    .collect();
                let mut conj = Vec::with_capacity(n);
                let mut tb = Vec::with_capacity(n);
                for (k, tk) in t.iter().enumerate() {
                    let at_b = tk.eval(r, &b);
                    let shifted = tk
                        .substitute(r, &subs)
                        .sub(r, &Poly::constant(r, n, at_b.clone()));
                    conj.push(shifted.scale(r, &r.inv(&d[k]).expect("unit diagonal")));
                    tb.push(at_b);
                }
                for (x, y) in b.iter_mut().zip(&tb) {
                    *x = r.add(x, y);
                }
                out.push(Factor::Strict(conj));
            }
        }
    }
    if b.iter().any(|x| !r.is_zero(x)) {
        return Err(Error::Precondition(
            "the map does not fix the origin".into(),
        ));
    }
    out.reverse();
    let mut all = diag_factors(r, &d)?;
    all.extend(out);
    emit(r, n, &all)
}
