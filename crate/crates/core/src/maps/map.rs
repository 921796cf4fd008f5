use std::fmt;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::fields::{Embedding, Field, Fq, RatFunc, RatFuncField};
use crate::ring::Ring;

/// An `n`-tuple of polynomials over a coefficient ring, read as the map
/// `u -> (F_1(u), ..., F_n(u))`.
#[derive(Clone)]
pub struct PolyMap<R: Ring> {
    ring: R,
    comps: Vec<Poly<R::Elem>>,
}

/// A polynomial map whose coefficients are rational functions in `Z`.
pub type ParamPolyMap = PolyMap<RatFuncField>;

impl<R: Ring> PartialEq for PolyMap<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.comps == other.comps
    }
}

impl<R: Ring> fmt::Debug for PolyMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Shape flags of a polynomial map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Shape {
    pub is_affine: bool,
    pub is_triangular: bool,
    pub is_strictly_jonquiere: bool,
}

impl<R: Ring> PolyMap<R> {
    pub fn new(ring: &R, comps: Vec<Poly<R::Elem>>) -> Result<Self> {
        let n = comps.len();
        for c in &comps {
            if c.nvars() != n {
                return Err(Error::DimensionMismatch(c.nvars(), n));
            }
        }
        Ok(PolyMap {
            ring: ring.clone(),
            comps,
        })
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        PolyMap {
            ring: ring.clone(),
            comps: (0..n).map(|i| Poly::var(ring, n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn components(&self) -> &[Poly<R::Elem>] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Poly<R::Elem> {
        &self.comps[i]
    }

    pub fn into_components(self) -> Vec<Poly<R::Elem>> {
        self.comps
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ring, self.n())
    }

    /// `self ∘ other`: substitute the components of `other` into `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        if self.ring != other.ring {
            return Err(Error::FieldMismatch);
        }
        Ok(PolyMap {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .map(|c| c.substitute(&self.ring, &other.comps))
                .collect(),
        })
    }

    pub fn eval(&self, point: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if point.len() != self.n() {
            return Err(Error::DimensionMismatch(point.len(), self.n()));
        }
        Ok(self
            .comps
            .iter()
            .map(|c| c.eval(&self.ring, point))
            .collect())
    }

    pub fn map_coeffs<S: Ring>(
        &self,
        s: &S,
        mut f: impl FnMut(&R::Elem) -> Result<S::Elem>,
    ) -> Result<PolyMap<S>> {
        let comps = self
            .comps
            .iter()
            .map(|c| c.map_coeffs(s, &mut f))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(s, comps)
    }

    /// Constant part `F(0)`.
    pub fn constant_part(&self) -> Vec<R::Elem> {
        self.comps
            .iter()
            .map(|c| c.constant_term(&self.ring))
            .collect()
    }

    /// Coefficient matrix of the degree-one part, row `i` for component `i`.
    pub fn linear_matrix(&self) -> Vec<Vec<R::Elem>> {
        let n = self.n();
        self.comps
            .iter()
            .map(|c| {
                (0..n)
                    .map(|j| {
                        let mut e = vec![0; n];
                        e[j] = 1;
                        c.coeff(&self.ring, &e)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.comps
            .iter()
            .filter_map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn shape(&self) -> Shape {
        let r = &self.ring;
        let n = self.n();
        let is_affine = self.max_degree() <= 1;
        let mut is_triangular = true;
        let mut unit_diagonal = true;
        for (i, c) in self.comps.iter().enumerate() {
            let mut own = vec![0; n];
            own[i] = 1;
            let diag = c.coeff(r, &own);
            if r.inv(&diag).is_none() {
                is_triangular = false;
            }
            if !r.is_one(&diag) {
                unit_diagonal = false;
            }
            for e in c.terms().keys() {
                if *e == own {
                    continue;
                }
                if e[..=i].iter().any(|&x| x > 0) {
                    is_triangular = false;
                }
            }
        }
        let fixes_origin = self.constant_part().iter().all(|c| r.is_zero(c));
        Shape {
            is_affine,
            is_triangular,
            is_strictly_jonquiere: is_triangular && fixes_origin && unit_diagonal,
        }
    }

    /// Jacobian determinant as a polynomial.
    pub fn jacobian_det(&self) -> Poly<R::Elem> {
        let r = &self.ring;
        let n = self.n();
        let jac: Vec<Vec<Poly<R::Elem>>> = self
            .comps
            .iter()
            .map(|c| (0..n).map(|j| c.derivative(r, j)).collect())
            .collect();
        det_poly(r, n, &jac, &mut vec![false; n], 0)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.comps.iter().map(|c| c.render(&self.ring)).collect();
        format!("({})", parts.join(", "))
    }
}

fn det_poly<R: Ring>(
    r: &R,
    n: usize,
    m: &[Vec<Poly<R::Elem>>],
    used: &mut Vec<bool>,
    row: usize,
) -> Poly<R::Elem> {
    if row == n {
        return Poly::one(r, n);
    }
    let mut acc = Poly::zero(n);
    let mut sign_pos = true;
    for col in 0..n {
        if used[col] {
            continue;
        }
        if !m[row][col].is_zero() {
            used[col] = true;
            let minor = det_poly(r, n, m, used, row + 1);
            used[col] = false;
            let t = m[row][col].mul(r, &minor);
            acc = if sign_pos {
                acc.add(r, &t)
            } else {
                acc.sub(r, &t)
            };
        }
        sign_pos = !sign_pos;
    }
    acc
}

impl PolyMap<Field> {
    /// Evaluate at a point of `emb.dst()^n`, coefficients mapped through `emb`.
    pub fn evaluate(&self, emb: &Embedding, point: &[Fq]) -> Result<Vec<Fq>> {
        if *emb.src() != self.ring {
            return Err(Error::FieldMismatch);
        }
        if point.len() != self.n() {
            return Err(Error::DimensionMismatch(point.len(), self.n()));
        }
        let dst = emb.dst();
        Ok(self
            .comps
            .iter()
            .map(|c| c.eval_in(dst, |a| emb.map(*a), point))
            .collect())
    }

    /// The same map with coefficients pushed into `emb.dst()`.
    pub fn embed(&self, emb: &Embedding) -> Result<PolyMap<Field>> {
        if *emb.src() != self.ring {
            return Err(Error::FieldMismatch);
        }
        self.map_coeffs(emb.dst(), |a| Ok(emb.map(*a)))
    }

    /// Constant-coefficient lift into `F_q(Z)`.
    pub fn to_param(&self) -> ParamPolyMap {
        let k = RatFuncField::new(&self.ring);
        self.map_coeffs(&k, |a| Ok(k.constant(*a))).unwrap()
    }
}

impl ParamPolyMap {
    /// `F_c`: substitute `Z = c` for `c` in `emb.dst()`.
    pub fn specialize(&self, emb: &Embedding, c: Fq) -> Result<PolyMap<Field>> {
        if *emb.src() != *self.ring.base() {
            return Err(Error::FieldMismatch);
        }
        self.map_coeffs(emb.dst(), |a: &RatFunc| a.eval(emb, c))
    }

    /// Evaluate the map `(F, Z)` at `(u, c)`.
    pub fn evaluate_at(&self, emb: &Embedding, point: &[Fq], c: Fq) -> Result<Vec<Fq>> {
        let fc = self.specialize(emb, c)?;
        fc.evaluate(&Embedding::identity(emb.dst()), point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    #[test]
    fn compose_orientation_is_substitution() {
        let f = Field::new(3, 1).unwrap();
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        // F = (x + y^2, y), G = (x, y + x)
        let fm = PolyMap::new(&f, vec![x.add(&f, &y.pow(&f, 2)), y.clone()]).unwrap();
        let gm = PolyMap::new(&f, vec![x.clone(), y.add(&f, &x)]).unwrap();
        let fg = fm.compose(&gm).unwrap();
        let emb = Embedding::identity(&f);
        for a in f.elements() {
            for b in f.elements() {
                let u = [a, b];
                let inner = gm.evaluate(&emb, &u).unwrap();
                assert_eq!(
                    fg.evaluate(&emb, &u).unwrap(),
                    fm.evaluate(&emb, &inner).unwrap()
                );
            }
        }
    }

    #[test]
    fn shape_flags() {
        let f = f2();
        let id = PolyMap::identity(&f, 2);
        let s = id.shape();
        assert!(s.is_affine && s.is_triangular && s.is_strictly_jonquiere);
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        let e = PolyMap::new(&f, vec![x.add(&f, &y.pow(&f, 2)), y.clone()]).unwrap();
        let s = e.shape();
        assert!(!s.is_affine && s.is_triangular && s.is_strictly_jonquiere);
        let t = PolyMap::new(&f, vec![x.add(&f, &Poly::one(&f, 2)), y.clone()]).unwrap();
        let s = t.shape();
        assert!(s.is_affine && s.is_triangular && !s.is_strictly_jonquiere);
        let sw = PolyMap::new(&f, vec![y, x]).unwrap();
        assert!(!sw.shape().is_triangular);
    }

    #[test]
    fn evaluate_elementary_example() {
        let f = f2();
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        let e = PolyMap::new(&f, vec![x.add(&f, &y.pow(&f, 2)), y]).unwrap();
        let emb = Embedding::identity(&f);
        assert_eq!(
            e.evaluate(&emb, &[Fq(0), Fq(1)]).unwrap(),
            vec![Fq(1), Fq(1)]
        );
    }

    #[test]
    fn jacobian_of_elementary_is_one() {
        let f = Field::new(3, 1).unwrap();
        let x = Poly::var(&f, 2, 0);
        let y = Poly::var(&f, 2, 1);
        let e = PolyMap::new(&f, vec![x.add(&f, &y.pow(&f, 4)), y.scale(&f, &Fq(2))]).unwrap();
        assert_eq!(e.jacobian_det(), Poly::constant(&f, 2, Fq(2)));
    }
}
