use super::Fq;
use crate::error::{Error, Result};

/// Enumeration of `F_Q^n`: a point `(u_1, ..., u_n)` has index
/// `sum index(u_i) * Q^(n-i)`, so `u_1` is the most significant digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointCodec {
    q: u64,
    n: usize,
    size: u64,
}

impl PointCodec {
    pub fn new(q: u32, n: usize) -> Result<Self> {
        let size = (q as u64)
            .checked_pow(n as u32)
            .ok_or(Error::DomainTooLarge(u64::MAX))?;
        Ok(Self {
            q: q as u64,
            n,
            size,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn encode(&self, point: &[Fq]) -> Result<u64> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch(point.len(), self.n));
        }
        let mut idx = 0u64;
        for u in point {
            if u.0 as u64 >= self.q {
                return Err(Error::IndexOutOfRange {
                    index: u.0 as u64,
                    size: self.q,
                });
            }
            idx = idx * self.q + u.0 as u64;
        }
        Ok(idx)
    }

    pub fn decode(&self, index: u64) -> Result<Vec<Fq>> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.size,
            });
        }
        let mut out = vec![Fq::ZERO; self.n];
        self.decode_into(index, &mut out);
        Ok(out)
    }

    /// Unchecked decode into a caller buffer of length `n`.
    pub fn decode_into(&self, mut index: u64, out: &mut [Fq]) {
        for slot in out.iter_mut().rev() {
            *slot = Fq((index % self.q) as u32);
            index /= self.q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_examples() {
        let c = PointCodec::new(2, 3).unwrap();
        assert_eq!(c.encode(&[Fq(0), Fq(0), Fq(0)]).unwrap(), 0);
        assert_eq!(c.encode(&[Fq(1), Fq(0), Fq(1)]).unwrap(), 5);
        assert!(c.decode(8).is_err());
    }

    #[test]
    fn roundtrip_small_domains() {
        for &(q, n) in &[(2u32, 3usize), (4, 3), (16, 3), (3, 2), (8, 4)] {
            let c = PointCodec::new(q, n).unwrap();
            assert!(c.size() <= 4096);
            for i in 0..c.size() {
                assert_eq!(c.encode(&c.decode(i).unwrap()).unwrap(), i);
            }
        }
    }
}
