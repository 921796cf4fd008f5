use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, ..., D-1}`, stored as its image table.
///
/// Products follow function composition: `f.compose(&g)` is `x -> f(g(x))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::NotBijective(i));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::IndexOutOfRange {
                        index: a.max(b) as u64,
                        size: degree as u64,
                    });
                }
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `g^{-1} ∘ self ∘ g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().compose(self).compose(g)
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut c = vec![start as u32];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x as u32);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn num_cycles_including_fixed(&self) -> usize {
        let fixed = self
            .images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 == x)
            .count();
        fixed + self.cycles().len()
    }

    /// `(-1)^(D - #cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.num_cycles_including_fixed()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1u64, |acc, c| {
            acc / gcd(acc, c.len() as u64) * c.len() as u64
        })
    }

    /// Cycle notation, `()` for the identity.
    pub fn render_cycles(&self) -> String {
        let c = self.cycles();
        if c.is_empty() {
            return "()".into();
        }
        c.iter()
            .map(|cy| {
                let s: Vec<String> = cy.iter().map(|x| x.to_string()).collect();
                format!("({})", s.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.render_cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inversion_parity(p: &Perm) -> i8 {
        let im = p.images();
        let mut inv = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Perm::identity(5).sign(), 1);
        let t = Perm::from_cycles(5, &[&[1, 3]]).unwrap();
        assert_eq!(t.sign(), -1);
        assert_eq!(t.render_cycles(), "(1 3)");
        assert_eq!(Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap().sign(), 1);
    }

    #[test]
    fn sign_matches_inversions_exhaustively_on_s4() {
        let mut all = Vec::new();
        let mut v = vec![0u32, 1, 2, 3];
        permute(&mut v, 0, &mut all);
        for a in &all {
            assert_eq!(a.sign(), inversion_parity(a));
            for b in &all {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
        assert_eq!(all.len(), 24);
    }

    fn permute(v: &mut Vec<u32>, k: usize, out: &mut Vec<Perm>) {
        if k == v.len() {
            out.push(Perm::from_images(v.clone()).unwrap());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, out);
            v.swap(k, i);
        }
    }

    #[test]
    fn composition_convention() {
        let f = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let g = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // (f∘g)(1) = f(2) = 2
        assert_eq!(f.compose(&g).apply(1), 2);
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }
}
