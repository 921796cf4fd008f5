//! Exact arithmetic in the finite fields `F_{p^r}`.
//!
//! Elements are stored as their canonical index `sum coeffs[i] * p^i`, where
//! `coeffs` are the coordinates in the power basis `1, x, ..., x^{r-1}` of
//! `F_p[x] / (modulus)`. The index doubles as the per-coordinate value in the
//! point codec, so a point of `F_Q^n` maps to an integer without conversion.

mod codec;
mod embed;
mod zpoly;

pub use codec::PointCodec;
pub use embed::Embedding;
pub(crate) use zpoly::render_coeff;
pub use zpoly::{RatFunc, RatFuncField, ZPoly};

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper bound on the number of field elements.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// A field element, as its canonical index in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Fq(pub u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Static data of `F_{p^r}`: the defining modulus and log/antilog tables.
pub struct FieldCtx {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, coefficient of `x^0` first, length `r + 1`.
    modulus: Vec<u32>,
    primitive: Fq,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Shared handle to a [`FieldCtx`]. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldCtx>);

impl Deref for Field {
    type Target = FieldCtx;

    fn deref(&self) -> &FieldCtx {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.p == other.p && self.r == other.r && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.r)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.r)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over Z/pZ, used only while setting up a field.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let v = (a[shift + i] + p - (lead * c) % p) % p;
            a[shift + i] = v;
        }
        poly_trim(&mut a);
    }
    a
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
    poly_rem(&prod, m, p)
}

fn digits_of(index: u32, p: u32, r: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(r as usize);
    let mut x = index;
    for _ in 0..r {
        v.push(x % p);
        x /= p;
    }
    v
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Irreducibility of a monic polynomial over Z/pZ by trial division against
/// every monic polynomial of degree at most half its degree.
pub fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = digits_of(idx as u32, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// `F_{p^r}` with the default size bound.
    pub fn new(p: u64, r: u32) -> Result<Field> {
        Self::with_bound(p, r, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, r: u32, bound: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if q > bound as u128 || q > u32::MAX as u128 {
            return Err(Error::FieldTooLarge { p, r, bound });
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = Self::smallest_irreducible(p, r);
        // primitive element: smallest index whose order is q - 1
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let pow_slow = |base: &[u32], mut e: u64| -> Vec<u32> {
            let mut acc = vec![1u32];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(&acc, &b, &modulus, p);
                }
                b = poly_mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let mut primitive = 1u32;
        if q > 2 {
            for cand in 2..q {
                let digits = digits_of(cand, p, r);
                let mut g = digits.clone();
                poly_trim(&mut g);
                if factors.iter().all(|&l| pow_slow(&g, order / l) != vec![1]) {
                    primitive = cand;
                    break;
                }
            }
        }
        let mut g = digits_of(primitive, p, r);
        poly_trim(&mut g);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for i in 0..order as u32 {
            let mut d = cur.clone();
            d.resize(r as usize, 0);
            let idx = index_of(&d, p);
            exp.push(idx);
            log[idx as usize] = i;
            cur = poly_mulmod(&cur, &g, &modulus, p);
        }
        Ok(Field(Arc::new(FieldCtx {
            p,
            r,
            q,
            modulus,
            primitive: Fq(primitive),
            exp,
            log,
        })))
    }

    /// Parse a field spec such as `"2^2"` or `"7"`.
    pub fn parse_spec(spec: &str) -> Result<Field> {
        let bad = |m: &str| Error::Syntax {
            offset: 0,
            message: format!("bad field spec {spec:?}: {m}"),
        };
        let (p, r) = match spec.trim().split_once('^') {
            Some((p, r)) => (
                p.trim().parse::<u64>().map_err(|_| bad("prime"))?,
                r.trim().parse::<u32>().map_err(|_| bad("degree"))?,
            ),
            None => (spec.trim().parse::<u64>().map_err(|_| bad("prime"))?, 1),
        };
        Field::new(p, r)
    }

    /// Lexicographically smallest monic irreducible of degree `r`, with
    /// coefficients compared from the constant term upward.
    fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
        let count = (p as u64).pow(r);
        for idx in 0..count {
            // constant term is the most significant digit of the enumeration
            let mut f: Vec<u32> = (0..r)
                .map(|j| ((idx / (p as u64).pow(r - 1 - j)) % p as u64) as u32)
                .collect();
            f.push(1);
            if is_irreducible_mod_p(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn same(&self, other: &Field) -> bool {
        self == other
    }
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Fq {
        self.primitive
    }

    pub fn char_is_two(&self) -> bool {
        self.p == 2
    }

    /// The element whose power-basis coordinates are `coeffs`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fq> {
        if coeffs.len() != self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Precondition(format!(
                "expected {} residues mod {}",
                self.r, self.p
            )));
        }
        Ok(Fq(index_of(coeffs, self.p)))
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        digits_of(a.0, self.p, self.r)
    }

    pub fn element(&self, index: u32) -> Result<Fq> {
        if index >= self.q {
            return Err(Error::IndexOutOfRange {
                index: index as u64,
                size: self.q as u64,
            });
        }
        Ok(Fq(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> {
        (1..self.q).map(Fq)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p as i64) as u32)
    }

    /// Inverse of `from_int` on the prime subfield.
    pub fn to_prime(&self, a: Fq) -> Option<u32> {
        (a.0 < self.p).then_some(a.0)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if self.r == 1 {
            return Fq((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Fq(out)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Fq(out)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let n = self.q - 1;
        let s = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        Fq(self.exp[(s % n as u64) as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        Ok(Fq(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `0^0 = 1`.
    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut acc = Fq::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Discrete logarithm to the primitive element; `None` for zero.
    pub fn log(&self, a: Fq) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    pub fn exp(&self, k: u64) -> Fq {
        Fq(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    /// Base-p digit string, constant coordinate first, trailing zero digits
    /// dropped. Digits are `:`-separated when `p > 10`.
    pub fn render(&self, a: Fq) -> String {
        let mut d = self.coeffs(a);
        while d.len() > 1 && d.last() == Some(&0) {
            d.pop();
        }
        let sep = if self.p > 10 { ":" } else { "" };
        d.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn parse_element(&self, s: &str) -> Result<Fq> {
        let bad = || Error::Syntax {
            offset: 0,
            message: format!("bad element digits {s:?} for F_{}", self.q),
        };
        let digits: Vec<u32> = if self.p > 10 {
            s.split(':')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if digits.is_empty()
            || digits.len() > self.r as usize
            || digits.iter().any(|&d| d >= self.p)
        {
            return Err(bad());
        }
        let mut d = digits;
        d.resize(self.r as usize, 0);
        Ok(Fq(index_of(&d, self.p)))
    }

    /// The generator `x` of the power basis (equal to 1's index times p when r > 1).
    pub fn generator(&self) -> Fq {
        if self.r == 1 {
            // F_p = F_p[x]/(x - c): the class of x is -modulus[0]
            Fq((self.p - self.modulus[0]) % self.p)
        } else {
            Fq(self.p)
        }
    }
}

/// A field element bundled with its field, for checked arithmetic across
/// contexts.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fq,
}

/// Operation selector for [`FieldElement::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: &Field, value: Fq) -> Self {
        Self {
            field: field.clone(),
            value,
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: &[u32]) -> Result<Self> {
        Ok(Self::new(field, field.from_coeffs(coeffs)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn apply(&self, op: FieldOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            FieldOp::Add => f.add(a, b),
            FieldOp::Sub => f.sub(a, b),
            FieldOp::Mul => f.mul(a, b),
            FieldOp::Div => f.div(a, b)?,
        };
        Ok(Self::new(f, value))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        Self::new(&self.field, self.field.pow(self.value, e))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(Self::new(&self.field, self.field.inv(self.value)?))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.field.render(self.value), self.field)
    }
}
