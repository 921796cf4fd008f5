use std::fmt;
use std::hash::Hash;

use crate::fields::{Field, Fq, RatFunc, RatFuncField, ZPoly};

/// Commutative coefficient ring for polynomials and polynomial maps.
///
/// Implemented by [`Field`] (finite fields) and
/// [`RatFuncField`] (rational functions in `Z`).
pub trait Ring: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + Eq + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u32;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

impl Ring for Field {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        Fq::ZERO
    }

    fn one(&self) -> Fq {
        Fq::ONE
    }

    fn is_zero(&self, a: &Fq) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        (**self).add(*a, *b)
    }

    fn neg(&self, a: &Fq) -> Fq {
        (**self).neg(*a)
    }

    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        (**self).mul(*a, *b)
    }

    fn inv(&self, a: &Fq) -> Option<Fq> {
        (**self).inv(*a).ok()
    }

    fn from_int(&self, n: i64) -> Fq {
        (**self).from_int(n)
    }

    fn characteristic(&self) -> u32 {
        self.p()
    }

    fn render(&self, a: &Fq) -> String {
        (**self).render(*a)
    }

    fn pow(&self, a: &Fq, e: u64) -> Fq {
        (**self).pow(*a, e)
    }
}

impl Ring for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::from_poly(ZPoly::zero())
    }

    fn one(&self) -> RatFunc {
        RatFunc::from_poly(ZPoly::one())
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num().is_zero()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let f = self.base();
        if a.den() == b.den() {
            return RatFunc::new(a.num().add(b.num(), f), a.den().clone(), f).unwrap();
        }
        let num = a.num().mul(b.den(), f).add(&b.num().mul(a.den(), f), f);
        RatFunc::new(num, a.den().mul(b.den(), f), f).unwrap()
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc::new(a.num().neg(self.base()), a.den().clone(), self.base()).unwrap()
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let f = self.base();
        if a.den().is_one() && b.den().is_one() {
            return RatFunc::from_poly(a.num().mul(b.num(), f));
        }
        RatFunc::new(a.num().mul(b.num(), f), a.den().mul(b.den(), f), f).unwrap()
    }

    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num().is_zero() {
            return None;
        }
        RatFunc::new(a.den().clone(), a.num().clone(), self.base()).ok()
    }

    fn from_int(&self, n: i64) -> RatFunc {
        self.constant(self.base().from_int(n))
    }

    fn characteristic(&self) -> u32 {
        self.base().p()
    }

    fn render(&self, a: &RatFunc) -> String {
        if a.den().is_one() {
            a.num().render(self.base())
        } else {
            format!(
                "({})/({})",
                a.num().render(self.base()),
                a.den().render(self.base())
            )
        }
    }
}
