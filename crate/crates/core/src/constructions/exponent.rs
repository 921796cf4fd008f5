//! The exponent moves `ρ(α, β) = (α, β + α + 1)` and `τ(α, β) = (β, α)`
//! on `(Z/MZ)^2`, and a solver that reaches a target from a diagonal start.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::prime_factors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentPair {
    pub a: u64,
    pub b: u64,
    pub modulus: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    Rho,
    Tau,
}

impl ExponentPair {
    pub fn new(a: u64, b: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Precondition("modulus must be positive".into()));
        }
        Ok(ExponentPair {
            a: a % modulus,
            b: b % modulus,
            modulus,
        })
    }

    pub fn rho(self) -> Self {
        let m = self.modulus;
        ExponentPair {
            b: (self.b + self.a + 1) % m,
            ..self
        }
    }

    pub fn tau(self) -> Self {
        ExponentPair {
            a: self.b,
            b: self.a,
            ..self
        }
    }

    pub fn apply(self, s: Step) -> Self {
        match s {
            Step::Rho => self.rho(),
            Step::Tau => self.tau(),
        }
    }

    /// `gcd(a+1, b+1, M)`, preserved by both moves.
    pub fn stratum(&self) -> u64 {
        let m = self.modulus;
        gcd(gcd((self.a + 1) % m, (self.b + 1) % m), m)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` modulo `m` (`gcd(a, m) = 1`); zero when `m = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// `t` with `gcd(a + t b, m) = gcd(a, b, m)`: the product of the primes
/// dividing `m/d` but not `a/d`.
pub fn lemd_t(a: u64, b: u64, m: u64) -> u64 {
    let d = gcd(gcd(a, b), m);
    if d == 0 {
        return 1;
    }
    let (a1, m1) = (a / d, m / d);
    prime_factors(m1)
        .into_iter()
        .filter(|&p| a1 % p != 0)
        .product()
}

pub fn replay(start: ExponentPair, steps: &[Step]) -> ExponentPair {
    steps.iter().fold(start, |x, &s| x.apply(s))
}

/// Moves, in the order they are applied, carrying the diagonal `start`
/// to `target`. The shape is `ρ^{k1}, τ, ρ^{k2}, τ, ρ^{k3}, τ` with `t`
/// from [`lemd_t`] and `k3 ≡ -t`.
pub fn exponent_reach_word(target: ExponentPair, start: ExponentPair) -> Result<Vec<Step>> {
    let m = target.modulus;
    if start.modulus != m {
        return Err(Error::Precondition("moduli differ".into()));
    }
    if start.a != start.b {
        return Err(Error::Precondition("start must be diagonal".into()));
    }
    if target == start {
        return Ok(Vec::new());
    }
    let d = target.stratum();
    if start.stratum() != d {
        return Err(Error::Precondition(format!(
            "start lies in stratum {} but the target in stratum {d}",
            start.stratum()
        )));
    }
    let x = (target.a + 1) % m;
    let y = (target.b + 1) % m;
    let s = (start.a + 1) % m;
    let m1 = m / d;
    let t = lemd_t(x / d, y / d, m1);
    let g = (x as u128 + t as u128 * y as u128) % m as u128;
    let g = g as u64;
    let g1 = (g / d) % m1;
    let s_inv = mod_inverse((s / d) % m1, m1).expect("start unit in its stratum");
    let g_inv = mod_inverse(g1, m1)
        .ok_or_else(|| Error::Verification(format!("gcd({g}, {m}) differs from {d}")))?;
    let k1 = (g1 * s_inv + m1 - 1) % m1;
    let k2 = ((y + m - s) % m / d) % m1 * g_inv % m1;
    let m3 = m / gcd(y, m);
    let k3 = (m3 - t % m3) % m3;
    let mut steps = Vec::new();
    for k in [k1, k2, k3] {
        steps.extend(std::iter::repeat_n(Step::Rho, k as usize));
        steps.push(Step::Tau);
    }
    let reached = replay(start, &steps);
    if reached != target {
        return Err(Error::Verification(format!(
            "replay reached {reached:?}, expected {target:?}"
        )));
    }
    Ok(steps)
}
