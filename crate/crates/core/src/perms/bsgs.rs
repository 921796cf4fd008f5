//! Deterministic Schreier–Sims: base and strong generating set.

use num_bigint::BigUint;

use super::perm::Perm;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Level {
    /// Indices into the strong generator list fixing all earlier base points.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `trans[b]` maps this level's base point to `b`.
    trans: Vec<Option<Perm>>,
    /// Per orbit position: how many of `gens` have had their Schreier
    /// generator verified.
    done: Vec<usize>,
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, gens: &[Perm]) -> Result<Self> {
        let mut b = Bsgs {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            generators: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            b.add_generator(g.clone())?;
        }
        Ok(b)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, &[]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    /// The generators supplied by the caller (non-redundant ones only).
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Basic orbit lengths; the order is their product.
    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.orbit.len() as u64).collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes()
            .iter()
            .fold(BigUint::from(1u32), |acc, &k| acc * k)
    }

    /// Order as a sorted prime factorisation `(p, e)`.
    pub fn order_factored(&self) -> Vec<(u64, u32)> {
        let mut fac = std::collections::BTreeMap::new();
        for k in self.orbit_sizes() {
            for p in crate::fields::prime_factors(k) {
                let mut m = k;
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                *fac.entry(p).or_insert(0) += e;
            }
        }
        fac.into_iter().collect()
    }

    pub fn add_generator(&mut self, g: Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DimensionMismatch(g.degree(), self.degree));
        }
        if self.contains(&g) {
            return Ok(false);
        }
        self.generators.push(g.clone());
        self.insert_strong(g);
        self.complete();
        Ok(true)
    }

    /// Sift `g` through the stabiliser chain starting at `from`. Returns the
    /// residue and the level at which sifting stopped.
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(self.base[l]);
            match &level.trans[b] {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, l) = self.sift(g.clone(), 0);
        l == self.levels.len() && r.is_identity()
    }

    /// Add a nontrivial element fixing the base points before its first
    /// moved base point `k` to levels `0..=k`, extending the base if needed.
    /// Returns `k`.
    fn insert_strong(&mut self, h: Perm) -> usize {
        let k = match self.base.iter().position(|&b| h.apply(b) != b) {
            Some(k) => k,
            None => {
                let b = h.first_moved().expect("nontrivial residue");
                self.base.push(b);
                let mut trans = vec![None; self.degree];
                trans[b] = Some(Perm::identity(self.degree));
                self.levels.push(Level {
                    gens: Vec::new(),
                    orbit: vec![b],
                    trans,
                    done: vec![0],
                });
                self.base.len() - 1
            }
        };
        let idx = self.strong.len();
        self.strong.push(h);
        for l in 0..=k {
            self.levels[l].gens.push(idx);
            self.extend_orbit(l);
        }
        k
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut pos = 0;
        while pos < level.orbit.len() {
            let beta = level.orbit[pos];
            for &gi in &level.gens {
                let s = &self.strong[gi];
                let y = s.apply(beta);
                if level.trans[y].is_none() {
                    let u = s.compose(level.trans[beta].as_ref().unwrap());
                    level.trans[y] = Some(u);
                    level.orbit.push(y);
                    level.done.push(0);
                }
            }
            pos += 1;
        }
    }

    /// Verify Schreier generators level by level, top down, adding sift
    /// residues until every level is complete.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            match self.find_residue(l) {
                None => i -= 1,
                Some(h) => {
                    let k = self.insert_strong(h);
                    i = k + 1;
                }
            }
        }
    }

    fn find_residue(&mut self, l: usize) -> Option<Perm> {
        let mut pos = 0;
        while pos < self.levels[l].orbit.len() {
            while self.levels[l].done[pos] < self.levels[l].gens.len() {
                let level = &self.levels[l];
                let gi = level.gens[level.done[pos]];
                let beta = level.orbit[pos];
                let s = &self.strong[gi];
                let y = s.apply(beta);
                let h = level.trans[y]
                    .as_ref()
                    .unwrap()
                    .inverse()
                    .compose(s)
                    .compose(level.trans[beta].as_ref().unwrap());
                self.levels[l].done[pos] += 1;
                let (r, _) = self.sift(h, l + 1);
                if !r.is_identity() {
                    return Some(r);
                }
            }
            pos += 1;
        }
        None
    }

    /// Normality test against a generating set of an overgroup.
    pub fn is_normalized_by(&self, gens: &[Perm]) -> bool {
        self.strong
            .iter()
            .all(|x| gens.iter().all(|g| self.contains(&x.conjugate_by(g))))
    }

    /// Whether every strong generator of `h` lies in `self`.
    pub fn contains_group(&self, h: &Bsgs) -> bool {
        h.strong.iter().all(|x| self.contains(x))
    }
}

/// Normal closure of `⟨hgens⟩` in `⟨ggens⟩` by a deterministic sweep.
pub fn normal_closure(degree: usize, hgens: &[Perm], ggens: &[Perm]) -> Result<Bsgs> {
    let mut n = Bsgs::new(degree, hgens)?;
    loop {
        let mut changed = false;
        let current = n.strong.clone();
        for x in &current {
            for g in ggens {
                if n.add_generator(x.conjugate_by(g))? {
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(n);
        }
    }
}

/// `[G : H]`, after checking `H <= G`.
pub fn index(g: &Bsgs, h: &Bsgs) -> Result<BigUint> {
    if !g.contains_group(h) {
        return Err(Error::NotSubgroup);
    }
    Ok(g.order() / h.order())
}

/// Cardinality of `⟨gens⟩` by breadth-first closure; `None` past `limit`.
pub fn brute_force_order(degree: usize, gens: &[Perm], limit: usize) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    let id = Perm::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push(y);
            }
        }
    }
    Some(seen.len())
}
