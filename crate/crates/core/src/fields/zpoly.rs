//! Univariate polynomials in the distinguished variable `Z` and reduced
//! rational functions over a finite field.

use std::fmt;

use super::{Embedding, Field, Fq};
use crate::error::{Error, Result};

/// Polynomial in `Z`, coefficient of `Z^0` first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly(Vec<Fq>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![Fq::ONE])
    }

    pub fn constant(c: Fq) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `Z`.
    pub fn z() -> Self {
        ZPoly(vec![Fq::ZERO, Fq::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0] == Fq::ONE
    }

    /// Degree, with `deg 0 = -1`.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn leading(&self) -> Fq {
        self.0.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.0.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn add(&self, other: &ZPoly, f: &Field) -> ZPoly {
        let len = self.0.len().max(other.0.len());
        ZPoly::from_coeffs(
            (0..len)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, f: &Field) -> ZPoly {
        ZPoly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &ZPoly, f: &Field) -> ZPoly {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: Fq, f: &Field) -> ZPoly {
        ZPoly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &ZPoly, f: &Field) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![Fq::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        ZPoly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> ZPoly {
        let mut acc = ZPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn div_rem(&self, d: &ZPoly, f: &Field) -> Result<(ZPoly, ZPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead_inv = f.inv(d.leading())?;
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        if rem.len() <= dd {
            return Ok((ZPoly::zero(), self.clone()));
        }
        let mut quot = vec![Fq::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &b) in d.0.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b));
            }
        }
        Ok((ZPoly::from_coeffs(quot), ZPoly::from_coeffs(rem)))
    }

    pub fn monic(&self, f: &Field) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(f.inv(self.leading()).unwrap(), f)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &ZPoly, f: &Field) -> ZPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, f).unwrap();
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &Field) -> ZPoly {
        ZPoly::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    /// Squarefree part: the monic product of the distinct irreducible factors.
    pub fn radical(&self, f: &Field) -> ZPoly {
        if self.degree() <= 0 {
            return ZPoly::one();
        }
        let d = self.derivative(f);
        if d.is_zero() {
            // self = h(Z^p); over a perfect field self = (h')^p
            let p = f.p() as usize;
            let root_exp = (f.q() / f.p()) as u64;
            let h: Vec<Fq> = self
                .0
                .iter()
                .step_by(p)
                .map(|&c| f.pow(c, root_exp))
                .collect();
            return ZPoly::from_coeffs(h).radical(f);
        }
        let c = self.gcd(&d, f);
        let w = self.div_rem(&c, f).unwrap().0.monic(f);
        let rc = c.radical(f);
        let g = w.gcd(&rc, f);
        w.mul(&rc, f).div_rem(&g, f).unwrap().0.monic(f)
    }

    /// Evaluate at a point of a field that `f` embeds into.
    pub fn eval(&self, emb: &Embedding, c: Fq) -> Fq {
        let d = emb.dst();
        let mut acc = Fq::ZERO;
        for &a in self.0.iter().rev() {
            acc = d.add(d.mul(acc, c), emb.map(a));
        }
        acc
    }

    /// Roots in the destination field of `emb`, ascending by index.
    pub fn roots(&self, emb: &Embedding) -> Vec<Fq> {
        emb.dst()
            .elements()
            .filter(|&c| self.eval(emb, c).is_zero())
            .collect()
    }

    /// Minimal polynomial over the source field of an element of the
    /// destination field: the product over its Frobenius orbit.
    pub fn min_poly(emb: &Embedding, alpha: Fq) -> ZPoly {
        let dst = emb.dst();
        let q = emb.src().q() as u64;
        let mut orbit = vec![alpha];
        let mut cur = dst.pow(alpha, q);
        while cur != alpha {
            orbit.push(cur);
            cur = dst.pow(cur, q);
        }
        let mut prod = vec![Fq::ONE];
        for &root in &orbit {
            let mut next = vec![Fq::ZERO; prod.len() + 1];
            for (i, &c) in prod.iter().enumerate() {
                next[i + 1] = dst.add(next[i + 1], c);
                next[i] = dst.sub(next[i], dst.mul(c, root));
            }
            prod = next;
        }
        ZPoly::from_coeffs(
            prod.into_iter()
                .map(|c| emb.preimage(c).expect("Frobenius-stable coefficients"))
                .collect(),
        )
    }

    /// Irreducibility by trial division against monic polynomials of degree
    /// at most half the degree.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let n = self.degree();
        if n <= 0 {
            return false;
        }
        for d in 1..=(n / 2) as u32 {
            let count = (f.q() as u64).pow(d);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d as usize + 1);
                let mut x = idx;
                for _ in 0..d {
                    c.push(Fq((x % f.q() as u64) as u32));
                    x /= f.q() as u64;
                }
                c.push(Fq::ONE);
                let g = ZPoly::from_coeffs(c);
                if self.div_rem(&g, f).unwrap().1.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = render_coeff(f, c);
            let t = match i {
                0 => cs,
                _ => {
                    let v = if i == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{i}")
                    };
                    if c == Fq::ONE {
                        v
                    } else {
                        format!("{cs}*{v}")
                    }
                }
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

/// Coefficient rendering shared with the map grammar: prime-subfield
/// elements as integers, others as `#digits`.
pub(crate) fn render_coeff(f: &Field, c: Fq) -> String {
    match f.to_prime(c) {
        Some(v) => v.to_string(),
        None => format!("#{}", f.render(c)),
    }
}

/// A reduced fraction of polynomials in `Z`: monic denominator, coprime
/// numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub fn new(num: ZPoly, den: ZPoly, f: &Field) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(ZPoly::zero()));
        }
        let g = num.gcd(&den, f);
        let num = num.div_rem(&g, f)?.0;
        let den = den.div_rem(&g, f)?.0;
        let lead = f.inv(den.leading())?;
        Ok(RatFunc {
            num: num.scale(lead, f),
            den: den.scale(lead, f),
        })
    }

    pub fn from_poly(p: ZPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn eval(&self, emb: &Embedding, c: Fq) -> Result<Fq> {
        let d = self.den.eval(emb, c);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        emb.dst().div(self.num.eval(emb, c), d)
    }
}

/// The field `F_q(Z)` as a coefficient ring.
#[derive(Clone, PartialEq)]
pub struct RatFuncField {
    base: Field,
}

impl fmt::Debug for RatFuncField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(Z)", self.base)
    }
}

impl RatFuncField {
    pub fn new(base: &Field) -> Self {
        Self { base: base.clone() }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn poly(&self, p: ZPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    pub fn constant(&self, c: Fq) -> RatFunc {
        RatFunc::from_poly(ZPoly::constant(c))
    }

    pub fn frac(&self, num: ZPoly, den: ZPoly) -> Result<RatFunc> {
        RatFunc::new(num, den, &self.base)
    }
}
