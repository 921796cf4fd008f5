use std::fmt;
use std::hash::Hash;

use super::linalg;
use super::map::PolyMap;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::fields::{Embedding, Field, Fq, RatFuncField};
use crate::ring::Ring;

/// One generator of the automorphism alphabet. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gen<E> {
    /// `X_i -> X_i + c`.
    Translate { i: usize, c: E },
    /// `X_i -> c X_i`, `c` a unit.
    Scale { i: usize, c: E },
    /// Exchange `X_i` and `X_j`.
    Swap { i: usize, j: usize },
    /// `X_i -> X_i + coeff * X^exps`, with `exps[i] = 0`.
    Elementary { i: usize, exps: Vec<u32>, coeff: E },
    /// Triangular: `X_i -> s_i X_i + t_i(X_{i+1}, ..., X_n)`.
    Jonq {
        scalars: Vec<E>,
        tails: Vec<Poly<E>>,
    },
    /// `X -> M X + b`.
    Affine { matrix: Vec<Vec<E>>, shift: Vec<E> },
}

impl<E: Clone + Eq + Hash + fmt::Debug> Gen<E> {
    pub fn is_affine(&self) -> bool {
        match self {
            Gen::Translate { .. } | Gen::Scale { .. } | Gen::Swap { .. } | Gen::Affine { .. } => {
                true
            }
            Gen::Elementary { exps, .. } => exps.iter().sum::<u32>() <= 1,
            Gen::Jonq { tails, .. } => tails.iter().all(|t| t.total_degree().unwrap_or(0) <= 1),
        }
    }

    /// Whether this is an affine letter or an elementary letter (the tame
    /// alphabet).
    pub fn is_tame_letter(&self) -> bool {
        !matches!(self, Gen::Jonq { .. })
    }

    pub fn validate<R: Ring<Elem = E>>(&self, r: &R, n: usize) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedGenerator(m));
        let idx = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::VariableOutOfRange { index: i + 1, n })
            }
        };
        match self {
            Gen::Translate { i, .. } => idx(*i),
            Gen::Scale { i, c } => {
                idx(*i)?;
                if r.inv(c).is_none() {
                    return bad("scale by a non-unit".into());
                }
                Ok(())
            }
            Gen::Swap { i, j } => {
                idx(*i)?;
                idx(*j)
            }
            Gen::Elementary { i, exps, coeff } => {
                idx(*i)?;
                if exps.len() != n || exps[*i] != 0 {
                    return bad(format!(
                        "elementary exponent vector {exps:?} for coordinate {}",
                        i + 1
                    ));
                }
                if r.is_zero(coeff) {
                    return bad("elementary with zero coefficient".into());
                }
                Ok(())
            }
            Gen::Jonq { scalars, tails } => {
                if scalars.len() != n || tails.len() != n {
                    return bad("triangular data of wrong length".into());
                }
                for (k, (s, t)) in scalars.iter().zip(tails).enumerate() {
                    if r.inv(s).is_none() {
                        return bad("triangular scalar not a unit".into());
                    }
                    if t.nvars() != n || !t.uses_only(|v| v > k) {
                        return bad(format!("tail {} depends on earlier variables", k + 1));
                    }
                }
                Ok(())
            }
            Gen::Affine { matrix, shift } => {
                if matrix.len() != n || shift.len() != n || matrix.iter().any(|row| row.len() != n)
                {
                    return bad("affine data of wrong size".into());
                }
                if linalg::inverse(r, matrix).is_none() {
                    return bad("affine matrix is singular".into());
                }
                Ok(())
            }
        }
    }

    /// The inverse generator (exact, symbolic).
    pub fn inverse<R: Ring<Elem = E>>(&self, r: &R, n: usize) -> Gen<E> {
        match self {
            Gen::Translate { i, c } => Gen::Translate { i: *i, c: r.neg(c) },
            Gen::Scale { i, c } => Gen::Scale {
                i: *i,
                c: r.inv(c).expect("validated unit"),
            },
            Gen::Swap { i, j } => Gen::Swap { i: *i, j: *j },
            Gen::Elementary { i, exps, coeff } => Gen::Elementary {
                i: *i,
                exps: exps.clone(),
                coeff: r.neg(coeff),
            },
            Gen::Jonq { scalars, tails } => {
                // back-substitution from the last coordinate upward:
                // X_k = s_k^{-1} (Y_k - t_k(X_{k+1..n}))
                let mut xs: Vec<Poly<E>> = vec![Poly::zero(n); n];
                let mut inv_tails = vec![Poly::zero(n); n];
                let inv_scalars: Vec<E> = scalars
                    .iter()
                    .map(|s| r.inv(s).expect("validated unit"))
                    .collect();
                for k in (0..n).rev() {
                    let mut subs: Vec<Poly<E>> = xs.clone();
                    for (v, s) in subs.iter_mut().enumerate().take(k + 1) {
                        *s = Poly::var(r, n, v);
                    }
                    let t = tails[k].substitute(r, &subs);
                    inv_tails[k] = t.scale(r, &inv_scalars[k]).neg(r);
                    xs[k] = Poly::var(r, n, k)
                        .scale(r, &inv_scalars[k])
                        .add(r, &inv_tails[k]);
                }
                Gen::Jonq {
                    scalars: inv_scalars,
                    tails: inv_tails,
                }
            }
            Gen::Affine { matrix, shift } => {
                let inv = linalg::inverse(r, matrix).expect("validated invertible");
                let b = linalg::mul_vec(r, &inv, shift);
                Gen::Affine {
                    matrix: inv,
                    shift: b.iter().map(|x| r.neg(x)).collect(),
                }
            }
        }
    }

    /// `self ∘ G` where `G` is given by its components.
    pub fn apply_to<R: Ring<Elem = E>>(&self, r: &R, comps: &mut [Poly<E>]) {
        let n = comps.len();
        match self {
            Gen::Translate { i, c } => {
                comps[*i] = comps[*i].add(r, &Poly::constant(r, n, c.clone()));
            }
            Gen::Scale { i, c } => comps[*i] = comps[*i].scale(r, c),
            Gen::Swap { i, j } => comps.swap(*i, *j),
            Gen::Elementary { i, exps, coeff } => {
                let mut t = Poly::constant(r, n, coeff.clone());
                for (j, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t = t.mul(r, &comps[j].pow(r, e));
                    }
                }
                comps[*i] = comps[*i].add(r, &t);
            }
            Gen::Jonq { scalars, tails } => {
                let new: Vec<Poly<E>> = (0..n)
                    .map(|k| {
                        comps[k]
                            .scale(r, &scalars[k])
                            .add(r, &tails[k].substitute(r, comps))
                    })
                    .collect();
                comps.clone_from_slice(&new);
            }
            Gen::Affine { matrix, shift } => {
                let new: Vec<Poly<E>> = (0..n)
                    .map(|k| {
                        let mut acc = Poly::constant(r, n, shift[k].clone());
                        for (j, m) in matrix[k].iter().enumerate() {
                            acc = acc.add(r, &comps[j].scale(r, m));
                        }
                        acc
                    })
                    .collect();
                comps.clone_from_slice(&new);
            }
        }
    }

    /// Apply to a point of the coefficient ring in place.
    pub fn apply_point<R: Ring<Elem = E>>(&self, r: &R, u: &mut [E]) {
        match self {
            Gen::Translate { i, c } => u[*i] = r.add(&u[*i], c),
            Gen::Scale { i, c } => u[*i] = r.mul(&u[*i], c),
            Gen::Swap { i, j } => u.swap(*i, *j),
            Gen::Elementary { i, exps, coeff } => {
                let mut t = coeff.clone();
                for (j, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t = r.mul(&t, &r.pow(&u[j], e as u64));
                    }
                }
                u[*i] = r.add(&u[*i], &t);
            }
            Gen::Jonq { scalars, tails } => {
                let new: Vec<E> = (0..u.len())
                    .map(|k| r.add(&r.mul(&scalars[k], &u[k]), &tails[k].eval(r, u)))
                    .collect();
                u.clone_from_slice(&new);
            }
            Gen::Affine { matrix, shift } => {
                let mut new = linalg::mul_vec(r, matrix, u);
                for (x, b) in new.iter_mut().zip(shift) {
                    *x = r.add(x, b);
                }
                u.clone_from_slice(&new);
            }
        }
    }

    pub fn map_coeffs<F: Clone + Eq + Hash + fmt::Debug, S: Ring<Elem = F>>(
        &self,
        s: &S,
        f: &mut impl FnMut(&E) -> Result<F>,
    ) -> Result<Gen<F>> {
        Ok(match self {
            Gen::Translate { i, c } => Gen::Translate { i: *i, c: f(c)? },
            Gen::Scale { i, c } => Gen::Scale { i: *i, c: f(c)? },
            Gen::Swap { i, j } => Gen::Swap { i: *i, j: *j },
            Gen::Elementary { i, exps, coeff } => Gen::Elementary {
                i: *i,
                exps: exps.clone(),
                coeff: f(coeff)?,
            },
            Gen::Jonq { scalars, tails } => Gen::Jonq {
                scalars: scalars.iter().map(&mut *f).collect::<Result<_>>()?,
                tails: tails
                    .iter()
                    .map(|t| t.map_coeffs(s, &mut *f))
                    .collect::<Result<_>>()?,
            },
            Gen::Affine { matrix, shift } => Gen::Affine {
                matrix: matrix
                    .iter()
                    .map(|row| row.iter().map(&mut *f).collect::<Result<_>>())
                    .collect::<Result<_>>()?,
                shift: shift.iter().map(&mut *f).collect::<Result<_>>()?,
            },
        })
    }

    pub fn render<R: Ring<Elem = E>>(&self, r: &R) -> String {
        match self {
            Gen::Translate { i, c } => format!("T{}[{}]", i + 1, r.render(c)),
            Gen::Scale { i, c } => format!("S{}[{}]", i + 1, r.render(c)),
            Gen::Swap { i, j } => format!("R{},{}", i + 1, j + 1),
            Gen::Elementary { i, exps, coeff } => {
                let a: Vec<String> = exps
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| k != i)
                    .map(|(_, e)| e.to_string())
                    .collect();
                if r.is_one(coeff) {
                    format!("E{}({})", i + 1, a.join(","))
                } else {
                    format!("E{}({})[{}]", i + 1, a.join(","), r.render(coeff))
                }
            }
            Gen::Jonq { scalars, tails } => {
                let parts: Vec<String> = scalars
                    .iter()
                    .zip(tails)
                    .enumerate()
                    .map(|(k, (s, t))| format!("{}*x{} + {}", r.render(s), k + 1, t.render(r)))
                    .collect();
                format!("J({})", parts.join(", "))
            }
            Gen::Affine { matrix, shift } => {
                let rows: Vec<String> = matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| r.render(x))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                let b: Vec<String> = shift.iter().map(|x| r.render(x)).collect();
                format!("A[{}|{}]", rows.join("; "), b.join(" "))
            }
        }
    }
}

/// A generator with an exponent of `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter<E> {
    pub gen: Gen<E>,
    pub inverse: bool,
}

/// A formal product of generators. The product `F G` is the composition
/// `F ∘ G`, so the rightmost letter acts first on points.
#[derive(Clone)]
pub struct Word<R: Ring> {
    ring: R,
    n: usize,
    letters: Vec<Letter<R::Elem>>,
}

impl<R: Ring> PartialEq for Word<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.letters == other.letters
    }
}

impl<R: Ring> fmt::Debug for Word<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[n={}]({})", self.n, self.render())
    }
}

impl<R: Ring> Word<R> {
    pub fn identity(ring: &R, n: usize) -> Self {
        Word {
            ring: ring.clone(),
            n,
            letters: Vec::new(),
        }
    }

    pub fn from_gen(ring: &R, n: usize, gen: Gen<R::Elem>) -> Result<Self> {
        let mut w = Self::identity(ring, n);
        w.push(gen)?;
        Ok(w)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter<R::Elem>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, gen: Gen<R::Elem>) -> Result<()> {
        self.push_letter(Letter {
            gen,
            inverse: false,
        })
    }

    pub fn push_inv(&mut self, gen: Gen<R::Elem>) -> Result<()> {
        self.push_letter(Letter { gen, inverse: true })
    }

    pub fn push_letter(&mut self, l: Letter<R::Elem>) -> Result<()> {
        l.gen.validate(&self.ring, self.n)?;
        self.letters.push(l);
        Ok(())
    }

    /// `self · other` (apply `other` first).
    pub fn then(&self, other: &Word<R>) -> Word<R> {
        assert_eq!(self.n, other.n, "word dimension mismatch");
        let mut w = self.clone();
        w.letters.extend(other.letters.iter().cloned());
        w
    }

    pub fn mul(&self, other: &Word<R>) -> Word<R> {
        self.then(other)
    }

    pub fn inverse(&self) -> Word<R> {
        Word {
            ring: self.ring.clone(),
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen.clone(),
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u64) -> Word<R> {
        let mut w = Word::identity(&self.ring, self.n);
        for _ in 0..k {
            w = w.then(self);
        }
        w
    }

    /// `a^{-1} · self · a`.
    pub fn conj_by(&self, a: &Word<R>) -> Word<R> {
        a.inverse().then(self).then(a)
    }

    /// The commutator `self^{-1} · other^{-1} · self · other`.
    pub fn commutator(&self, other: &Word<R>) -> Word<R> {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    /// Letters with formal inverses resolved into explicit generators.
    pub fn resolved(&self) -> Vec<Gen<R::Elem>> {
        self.letters
            .iter()
            .map(|l| {
                if l.inverse {
                    l.gen.inverse(&self.ring, self.n)
                } else {
                    l.gen.clone()
                }
            })
            .collect()
    }

    pub fn to_map(&self) -> PolyMap<R> {
        let r = &self.ring;
        let mut comps: Vec<Poly<R::Elem>> = (0..self.n).map(|i| Poly::var(r, self.n, i)).collect();
        for g in self.resolved().iter().rev() {
            g.apply_to(r, &mut comps);
        }
        PolyMap::new(r, comps).expect("consistent dimensions")
    }

    pub fn eval(&self, point: &[R::Elem]) -> Vec<R::Elem> {
        let mut u = point.to_vec();
        for g in self.resolved().iter().rev() {
            g.apply_point(&self.ring, &mut u);
        }
        u
    }

    pub fn map_coeffs<S: Ring>(
        &self,
        s: &S,
        mut f: impl FnMut(&R::Elem) -> Result<S::Elem>,
    ) -> Result<Word<S>> {
        let mut w = Word::identity(s, self.n);
        for l in &self.letters {
            w.letters.push(Letter {
                gen: l.gen.map_coeffs(s, &mut f)?,
                inverse: l.inverse,
            });
        }
        Ok(w)
    }

    pub fn uses_only(&self, pred: impl Fn(&Gen<R::Elem>) -> bool) -> bool {
        self.letters.iter().all(|l| pred(&l.gen))
    }

    pub fn render(&self) -> String {
        if self.letters.is_empty() {
            return "id".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let g = l.gen.render(&self.ring);
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Word<Field> {
    /// Whether every letter is affine or the Derksen letter
    /// `E_{1,(p-1,...,p-1)}` with coefficient one.
    pub fn is_derksen(&self) -> bool {
        let p = self.ring.p();
        self.uses_only(|g| is_derksen_letter(g, p, self.n))
    }

    /// The same word over `emb.dst()`.
    pub fn embed(&self, emb: &Embedding) -> Result<Word<Field>> {
        if *emb.src() != self.ring {
            return Err(Error::FieldMismatch);
        }
        self.map_coeffs(emb.dst(), |a| Ok(emb.map(*a)))
    }

    pub fn to_param(&self) -> Word<RatFuncField> {
        let k = RatFuncField::new(&self.ring);
        self.map_coeffs(&k, |a| Ok(k.constant(*a))).unwrap()
    }
}

impl Word<RatFuncField> {
    /// Substitute `Z = c` in every letter.
    pub fn specialize(&self, emb: &Embedding, c: Fq) -> Result<Word<Field>> {
        self.map_coeffs(emb.dst(), |a| a.eval(emb, c))
    }
}

pub fn is_derksen_letter(g: &Gen<Fq>, p: u32, n: usize) -> bool {
    match g {
        Gen::Elementary { i, exps, coeff } if !g.is_affine() => {
            *i == 0 && *coeff == Fq::ONE && exps[1..].iter().all(|&e| e == p - 1) && exps.len() == n
        }
        g => g.is_affine(),
    }
}

/// Convenience constructors over a field.
pub mod build {
    use super::*;

    pub fn t(i: usize, c: Fq) -> Gen<Fq> {
        Gen::Translate { i, c }
    }

    pub fn s(i: usize, c: Fq) -> Gen<Fq> {
        Gen::Scale { i, c }
    }

    pub fn swap(i: usize, j: usize) -> Gen<Fq> {
        Gen::Swap { i, j }
    }

    /// `E_{i,α}` with `α` listing the exponents of the other variables in order.
    pub fn e(n: usize, i: usize, alpha: &[u32], coeff: Fq) -> Gen<Fq> {
        Gen::Elementary {
            i,
            exps: full_exps(n, i, alpha),
            coeff,
        }
    }

    /// Spread an `(n-1)`-vector into a length-`n` vector with a zero at `i`.
    pub fn full_exps(n: usize, i: usize, alpha: &[u32]) -> Vec<u32> {
        assert_eq!(alpha.len() + 1, n, "exponent vector length");
        let mut out = Vec::with_capacity(n);
        let mut it = alpha.iter();
        for k in 0..n {
            out.push(if k == i { 0 } else { *it.next().unwrap() });
        }
        out
    }

    /// The Derksen letter `ε = E_{1,(p-1,...,p-1)}`.
    pub fn epsilon(f: &Field, n: usize) -> Gen<Fq> {
        e(n, 0, &vec![f.p() - 1; n - 1], Fq::ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn word_times_inverse_is_identity() {
        let f = Field::new(3, 1).unwrap();
        let mut w = Word::identity(&f, 3);
        w.push(e(3, 0, &[1, 2], Fq(2))).unwrap();
        w.push(swap(0, 2)).unwrap();
        w.push(s(1, Fq(2))).unwrap();
        w.push(t(2, Fq(1))).unwrap();
        w.push(Gen::Affine {
            matrix: vec![
                vec![Fq(1), Fq(1), Fq(0)],
                vec![Fq(0), Fq(1), Fq(2)],
                vec![Fq(1), Fq(0), Fq(0)],
            ],
            shift: vec![Fq(0), Fq(1), Fq(2)],
        })
        .unwrap();
        assert!(w.then(&w.inverse()).to_map().is_identity());
        assert!(w.inverse().then(&w).to_map().is_identity());
    }

    #[test]
    fn jonq_inverse_by_back_substitution() {
        let f = Field::new(5, 1).unwrap();
        let n = 3;
        let x2 = Poly::var(&f, n, 1);
        let x3 = Poly::var(&f, n, 2);
        let g = Gen::Jonq {
            scalars: vec![Fq(2), Fq(3), Fq(4)],
            tails: vec![
                x2.mul(&f, &x3).add(&f, &x3.pow(&f, 3)),
                x3.pow(&f, 2).add(&f, &Poly::one(&f, n)),
                Poly::constant(&f, n, Fq(1)),
            ],
        };
        let mut w = Word::identity(&f, n);
        w.push(g.clone()).unwrap();
        w.push_inv(g).unwrap();
        assert!(w.to_map().is_identity());
        let bad = Gen::Jonq {
            scalars: vec![Fq(1); 3],
            tails: vec![Poly::zero(n), x2, Poly::zero(n)],
        };
        assert!(Word::from_gen(&f, n, bad).is_err());
    }

    #[test]
    fn scale_pair_cancels() {
        let f = Field::new(7, 1).unwrap();
        let mut w = Word::identity(&f, 2);
        w.push(s(0, Fq(3))).unwrap();
        w.push(s(0, Fq(5))).unwrap();
        assert!(w.to_map().is_identity());
    }

    #[test]
    fn eval_matches_to_map() {
        let f = Field::new(2, 2).unwrap();
        let mut w = Word::identity(&f, 2);
        w.push(e(2, 0, &[3], Fq(2))).unwrap();
        w.push(swap(0, 1)).unwrap();
        w.push(t(0, Fq(3))).unwrap();
        let m = w.to_map();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(w.eval(&[a, b]), m.eval(&[a, b]).unwrap());
            }
        }
    }

    #[test]
    fn derksen_alphabet() {
        let f = Field::new(3, 1).unwrap();
        let mut w = Word::from_gen(&f, 3, epsilon(&f, 3)).unwrap();
        w.push_inv(swap(0, 1)).unwrap();
        assert!(w.is_derksen());
        w.push(e(3, 0, &[1, 0], Fq(1))).unwrap();
        assert!(w.is_derksen());
        w.push(e(3, 0, &[1, 1], Fq(1))).unwrap();
        assert!(!w.is_derksen());
    }
}
