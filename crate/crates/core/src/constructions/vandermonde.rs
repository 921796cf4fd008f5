//! Coefficients `α ∈ F_p^p` with `Σ α_i (Y+i)^{kp+p-1} = Y^l + P(Y)`,
//! `deg P < kp`.

use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::linalg;

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binom_mod(n: u64, k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p64, k % p64);
        if b > a {
            return 0;
        }
        acc = acc * small_binom(a, b, p64) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

fn small_binom(a: u64, b: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 0..b {
        num = num * ((a - j) % p) % p;
        den = den * ((j + 1) % p) % p;
    }
    num * modpow(den, p - 2, p) % p
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `i^e mod p` with `0^0 = 1`.
pub fn pow_mod(i: u64, e: u64, p: u32) -> u32 {
    modpow(i, e, p as u64) as u32
}

/// The vector `α` for `kp <= l < kp + p`, as residues in `[0, p)`.
pub fn vandermonde_alpha(p: u32, k: u64, l: u64) -> Result<Vec<u32>> {
    let p64 = p as u64;
    let lo = k * p64;
    if l < lo || l >= lo + p64 {
        return Err(Error::Precondition(format!(
            "exponent {l} outside [{lo}, {})",
            lo + p64
        )));
    }
    let fp = Field::new(p64, 1)?;
    let big = lo + p64 - 1;
    // Row j0 collects the coefficient of Y^{kp + j0}.
    let m: Vec<Vec<Fq>> = (0..p64)
        .map(|j0| {
            let j = lo + j0;
            let b = binom_mod(big, j, p);
            (0..p64)
                .map(|i| Fq(b * pow_mod(i, big - j, p) % p))
                .collect()
        })
        .collect();
    let inv = linalg::inverse(&fp, &m).expect("Lucas-nonzero diagonal times Vandermonde");
    let col = (l - lo) as usize;
    Ok(inv.iter().map(|row| row[col].0).collect())
}

/// Coefficient of `Y^e` in `Σ α_i (Y+i)^K`, reduced mod `p`.
pub fn combined_coeff(alpha: &[u32], big: u64, e: u64, p: u32) -> u32 {
    if e > big {
        return 0;
    }
    let b = binom_mod(big, e, p) as u64;
    let p64 = p as u64;
    alpha.iter().enumerate().fold(0u64, |acc, (i, &a)| {
        (acc + a as u64 * b % p64 * pow_mod(i as u64, big - e, p) as u64) % p64
    }) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dense expansion of `Σ α_i (Y+i)^K` over `F_p` by repeated multiplication.
    fn expand(alpha: &[u32], big: usize, p: u32) -> Vec<u32> {
        let mut total = vec![0u32; big + 1];
        for (i, &a) in alpha.iter().enumerate() {
            let mut poly = vec![1u32];
            for _ in 0..big {
                let mut next = vec![0u32; poly.len() + 1];
                for (d, &c) in poly.iter().enumerate() {
                    next[d + 1] = (next[d + 1] + c) % p;
                    next[d] = (next[d] + c * (i as u32 % p)) % p;
                }
                poly = next;
            }
            for (d, c) in poly.iter().enumerate() {
                total[d] = (total[d] + a * c) % p;
            }
        }
        total
    }

    #[test]
    fn documented_examples() {
        assert_eq!(vandermonde_alpha(2, 1, 3).unwrap(), vec![1, 0]);
        assert_eq!(vandermonde_alpha(2, 1, 2).unwrap(), vec![1, 1]);
        assert!(vandermonde_alpha(3, 0, 5).is_err());
    }

    #[test]
    fn identity_against_expansion() {
        for p in [2u32, 3, 5] {
            for k in 0..4u64 {
                let big = (k * p as u64 + p as u64 - 1) as usize;
                for l in k * p as u64..(k + 1) * p as u64 {
                    let a = vandermonde_alpha(p, k, l).unwrap();
                    let e = expand(&a, big, p);
                    for (d, &c) in e.iter().enumerate() {
                        let d = d as u64;
                        if d >= k * p as u64 {
                            assert_eq!(c, u32::from(d == l), "p={p} k={k} l={l} d={d}");
                        } else {
                            assert_eq!(c, combined_coeff(&a, big as u64, d, p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lucas_small_cases() {
        assert_eq!(binom_mod(5, 2, 3), 1);
        assert_eq!(binom_mod(4, 2, 2), 0);
        assert_eq!(binom_mod(7, 3, 5), 0);
        assert_eq!(binom_mod(6, 3, 7), 6);
    }
}
