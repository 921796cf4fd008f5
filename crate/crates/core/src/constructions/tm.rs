//! The gadget `T_m ∈ DA_n(F_q)` whose induced bijection on points with
//! `u_n != 0` is `ψ(u) = (u_1 u_n^{-1}, u_2 u_n, u_3, ..., u_n)`.

use super::da::{elementary_in_da_word, swapped};
use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::{build, Word};
use crate::perms::{induced_word, Domain};

fn h_letter(f: &Field, n: usize) -> Result<Word<Field>> {
    Word::from_gen(f, n, build::swap(0, 1))
}

/// `G = E_{1,(1,0,...,0)} = X_1 + X_2`.
fn g_letter(f: &Field, n: usize) -> Result<Word<Field>> {
    let mut a = vec![0u32; n - 1];
    a[0] = 1;
    Word::from_gen(f, n, build::e(n, 0, &a, Fq::ONE))
}

fn s_minus_one(f: &Field, n: usize) -> Result<Word<Field>> {
    Word::from_gen(f, n, build::s(0, f.from_int(-1)))
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "the scaling gadget needs n >= 3, got {n}"
        )));
    }
    Ok(())
}

/// Exponent data in characteristic two for `F_{q^m}` with `q = 2^r`: the
/// total degree `M = r m` and `k = 2^{2M-1}`.
pub fn char2_exponents(f: &Field, m: u32) -> (u32, u64) {
    let total = f.r() * m;
    (total, 1u64 << (2 * total - 1))
}

/// `B_m = (A H)^{k}` in characteristic two.
pub fn char2_block_word(f: &Field, n: usize, m: u32) -> Result<Word<Field>> {
    check_n(n)?;
    if !f.char_is_two() {
        return Err(Error::Precondition("characteristic is not two".into()));
    }
    let (_, k) = char2_exponents(f, m);
    let mut a = vec![0u32; n - 1];
    a[0] = 1;
    a[n - 2] = 1;
    let aw = elementary_in_da_word(f, n, &a)?;
    Ok(aw.then(&h_letter(f, n)?).pow(k))
}

/// A word for `T_m` over the Derksen alphabet.
pub fn build_tm_word(f: &Field, n: usize, m: u32) -> Result<Word<Field>> {
    check_n(n)?;
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let h = h_letter(f, n)?;
    let g = g_letter(f, n)?;
    if f.char_is_two() {
        let fw = h.then(&g);
        let b = char2_block_word(f, n, m)?;
        let half = fw.then(&b).then(&fw);
        return Ok(half.then(&half));
    }
    let big_q = (f.q() as u64)
        .checked_pow(m)
        .ok_or_else(|| Error::Unsupported("q^m overflows".into()))?;
    let mut am = vec![0u32; n - 1];
    am[0] = 1;
    am[n - 2] = (big_q - 2) as u32;
    let a_m = elementary_in_da_word(f, n, &am).map_err(|e| match e {
        Error::Unsupported(_) => Error::Unsupported(format!(
            "A_m = E_1,{am:?} is not reachable by an exact Derksen word for n = {n}"
        )),
        other => other,
    })?;
    let mut bm = vec![0u32; n - 1];
    bm[0] = 1;
    bm[n - 2] = 1;
    let e11 = elementary_in_da_word(f, n, &bm)?;
    let s = s_minus_one(f, n)?;
    let b = g.then(&s).then(&e11).then(&s);
    let c_m = g.then(&s).then(&a_m).then(&s);
    Ok(a_m
        .then(&h)
        .then(&b)
        .then(&h)
        .then(&g.inverse())
        .then(&h)
        .then(&c_m)
        .then(&h))
}

/// `T_{m,i} = R_{i,n} T_m R_{i,n}` (0-based `i`), acting as `ψ` with the
/// roles of `u_n` and `u_i` exchanged.
pub fn tm_at(tm: &Word<Field>, i: usize) -> Result<Word<Field>> {
    swapped(tm, i, tm.n() - 1)
}

/// `tm^{-1} · w · tm`.
pub fn tm_conjugate(w: &Word<Field>, tm: &Word<Field>) -> Word<Field> {
    w.conj_by(tm)
}

/// `ψ` at a point of `F_Q^n` with `u_n != 0`.
pub fn psi(f: &Field, u: &[Fq]) -> Result<Vec<Fq>> {
    let n = u.len();
    let un = u[n - 1];
    let inv = f.inv(un)?;
    let mut v = u.to_vec();
    v[0] = f.mul(u[0], inv);
    v[1] = f.mul(u[1], un);
    Ok(v)
}

/// Whether the induced bijection of `w` agrees with `ψ` on every point of
/// `dom` with nonzero last coordinate.
pub fn agrees_with_psi(w: &Word<Field>, dom: &Domain) -> Result<bool> {
    let perm = induced_word(w, dom)?;
    let f = dom.field();
    let last = dom.n() - 1;
    for i in dom.punctured(last) {
        let u = dom.point(i);
        if perm.apply(i) != dom.index(&psi(f, &u)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
