use std::collections::BTreeMap;
use std::hash::Hash;

use crate::ring::Ring;

pub type Monomial = Vec<u32>;

/// Sparse polynomial in `nvars` variables with coefficients of type `E`.
///
/// Coefficient arithmetic is supplied per call by a [`Ring`]. Exponents are
/// never reduced modulo the field size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    nvars: usize,
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + Eq + Hash + std::fmt::Debug> Poly<E> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<R: Ring<Elem = E>>(r: &R, nvars: usize, c: E) -> Self {
        Self::monomial(r, nvars, vec![0; nvars], c)
    }

    pub fn one<R: Ring<Elem = E>>(r: &R, nvars: usize) -> Self {
        Self::constant(r, nvars, r.one())
    }

    /// The variable `X_{i+1}` (0-based index `i`).
    pub fn var<R: Ring<Elem = E>>(r: &R, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(r, nvars, e, r.one())
    }

    pub fn monomial<R: Ring<Elem = E>>(r: &R, nvars: usize, exps: Monomial, c: E) -> Self {
        debug_assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !r.is_zero(&c) {
            terms.insert(exps, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms<R: Ring<Elem = E>>(
        r: &R,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, E)>,
    ) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            p.add_term(r, e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, E> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff<R: Ring<Elem = E>>(&self, r: &R, exps: &[u32]) -> E {
        self.terms.get(exps).cloned().unwrap_or_else(|| r.zero())
    }

    pub fn constant_term<R: Ring<Elem = E>>(&self, r: &R) -> E {
        self.coeff(r, &vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Whether only variables with index in `allowed` occur.
    pub fn uses_only(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().enumerate().all(|(i, &x)| x == 0 || allowed(i)))
    }

    pub fn add_term<R: Ring<Elem = E>>(&mut self, r: &R, exps: Monomial, c: E) {
        if r.is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = r.add(o.get(), &c);
                if r.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(r, e.clone(), c.clone());
        }
        out
    }

    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), r.neg(c)))
                .collect(),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(r, e.clone(), r.neg(c));
        }
        out
    }

    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, c: &E) -> Self {
        if r.is_zero(c) {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(r, e.clone(), r.mul(a, c));
        }
        out
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(r, e, r.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow<R: Ring<Elem = E>>(&self, r: &R, mut e: u32) -> Self {
        let mut acc = Poly::one(r, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(r, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(r, &base);
            }
        }
        acc
    }

    /// Substitute `subs[j]` for the variable `X_{j+1}`.
    pub fn substitute<R: Ring<Elem = E>>(&self, r: &R, subs: &[Poly<E>]) -> Poly<E> {
        assert_eq!(subs.len(), self.nvars, "substitution arity");
        let out_vars = subs.first().map_or(0, |s| s.nvars);
        let mut cache: Vec<Vec<Poly<E>>> = subs
            .iter()
            .map(|s| vec![Poly::one(r, out_vars), s.clone()])
            .collect();
        let mut out = Poly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(r, out_vars, c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                while cache[j].len() <= k {
                    let next = cache[j].last().unwrap().mul(r, &subs[j]);
                    cache[j].push(next);
                }
                term = term.mul(r, &cache[j][k]);
            }
            out = out.add(r, &term);
        }
        out
    }

    /// Evaluate in a ring `s`, mapping coefficients through `coeff`.
    pub fn eval_in<S: Ring>(
        &self,
        s: &S,
        mut coeff: impl FnMut(&E) -> S::Elem,
        point: &[S::Elem],
    ) -> S::Elem {
        let mut acc = s.zero();
        for (e, c) in &self.terms {
            let mut t = coeff(c);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = s.mul(&t, &s.pow(&point[j], k as u64));
                }
            }
            acc = s.add(&acc, &t);
        }
        acc
    }

    pub fn eval<R: Ring<Elem = E>>(&self, r: &R, point: &[E]) -> E {
        self.eval_in(r, |c| c.clone(), point)
    }

    pub fn map_coeffs<F: Clone + Eq + Hash + std::fmt::Debug, S: Ring<Elem = F>>(
        &self,
        s: &S,
        mut f: impl FnMut(&E) -> crate::Result<F>,
    ) -> crate::Result<Poly<F>> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(s, e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Partial derivative with respect to `X_{var+1}`.
    pub fn derivative<R: Ring<Elem = E>>(&self, r: &R, var: usize) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(r, d, r.mul(c, &r.from_int(e[var] as i64)));
        }
        out
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in canonical graded-lex order, `x1 > x2 > ...`, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &E)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn render<R: Ring<Elem = E>>(&self, r: &R) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, x)
                    }
                })
                .collect();
            let cs = r.render(c);
            let cs = if cs.contains(' ') || cs.contains('/') {
                format!("({cs})")
            } else {
                cs
            };
            if vars.is_empty() {
                out.push_str(&cs);
            } else if r.is_one(c) {
                out.push_str(&vars.join("*"));
            } else {
                out.push_str(&cs);
                out.push('*');
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}
