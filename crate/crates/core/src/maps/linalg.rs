//! Dense matrices over a [`Ring`] that is a field.

use crate::ring::Ring;

pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<R: Ring>(r: &R, n: usize) -> Matrix<R::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { r.one() } else { r.zero() })
                .collect()
        })
        .collect()
}

pub fn mul<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let n = a.len();
    let m = b.first().map_or(0, |row| row.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = r.zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !r.is_zero(&a[i][k]) && !r.is_zero(&bk[j]) {
                            acc = r.add(&acc, &r.mul(&a[i][k], &bk[j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mul_vec<R: Ring>(r: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)))
        })
        .collect()
}

/// Gauss–Jordan inverse; `None` if singular.
pub fn inverse<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> Option<Matrix<R::Elem>> {
    let n = a.len();
    let mut m: Vec<Vec<R::Elem>> = a.clone();
    let mut inv = identity(r, n);
    for col in 0..n {
        let piv = (col..n).find(|&i| !r.is_zero(&m[i][col]))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let s = r.inv(&m[col][col])?;
        for j in 0..n {
            m[col][j] = r.mul(&m[col][j], &s);
            inv[col][j] = r.mul(&inv[col][j], &s);
        }
        for i in 0..n {
            if i == col || r.is_zero(&m[i][col]) {
                continue;
            }
            let f = m[i][col].clone();
            for j in 0..n {
                m[i][j] = r.sub(&m[i][j], &r.mul(&f, &m[col][j]));
                inv[i][j] = r.sub(&inv[i][j], &r.mul(&f, &inv[col][j]));
            }
        }
    }
    Some(inv)
}

pub fn det<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let n = a.len();
    let mut m = a.clone();
    let mut d = r.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !r.is_zero(&m[i][col])) else {
            return r.zero();
        };
        if piv != col {
            m.swap(col, piv);
            d = r.neg(&d);
        }
        d = r.mul(&d, &m[col][col]);
        let s = r.inv(&m[col][col]).expect("nonzero pivot in a field");
        for i in col + 1..n {
            if r.is_zero(&m[i][col]) {
                continue;
            }
            let f = r.mul(&m[i][col], &s);
            for j in col..n {
                m[i][j] = r.sub(&m[i][j], &r.mul(&f, &m[col][j]));
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Field, Fq};

    #[test]
    fn inverse_roundtrip_f5() {
        let f = Field::new(5, 1).unwrap();
        let a = vec![
            vec![Fq(1), Fq(2), Fq(0)],
            vec![Fq(0), Fq(1), Fq(3)],
            vec![Fq(4), Fq(0), Fq(2)],
        ];
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mul(&f, &a, &inv), identity(&f, 3));
        assert!(!f.is_zero(&det(&f, &a)));
        let sing = vec![vec![Fq(1), Fq(2)], vec![Fq(2), Fq(4)]];
        assert!(inverse(&f, &sing).is_none());
        assert_eq!(det(&f, &sing), Fq(0));
    }
}
