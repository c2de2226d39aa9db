use std::sync::Arc;

use super::{PadicError, PadicInt, PadicRing};
use crate::ff::Fq;

pub type PadicMatrix = Vec<Vec<PadicInt>>;

pub fn identity(ring: &Arc<PadicRing>, n: usize) -> PadicMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect()
}

pub fn lift_matrix(ring: &Arc<PadicRing>, m: &[Vec<Fq>]) -> PadicMatrix {
    m.iter()
        .map(|r| r.iter().map(|x| ring.lift(x)).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<PadicInt>], b: &[Vec<PadicInt>]) -> PadicMatrix {
    let ring = a[0][0].ring().clone();
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut acc = ring.zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            acc = acc + x.clone() * b[k][j].clone();
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<PadicInt>], v: &[PadicInt]) -> Vec<PadicInt> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(v[0].ring().zero(), |acc, (x, y)| {
                acc + x.clone() * y.clone()
            })
        })
        .collect()
}

/// Inverse of a matrix whose reduction mod `p` is invertible.
pub fn inverse(a: &[Vec<PadicInt>]) -> Result<PadicMatrix, PadicError> {
    let n = a.len();
    let ring = a[0][0].ring().clone();
    let mut m: PadicMatrix = a.to_vec();
    let mut inv = identity(&ring, n);
    for c in 0..n {
        let piv = (c..n)
            .find(|&i| m[i][c].is_unit())
            .ok_or(PadicError::SingularMatrix)?;
        m.swap(c, piv);
        inv.swap(c, piv);
        let s = m[c][c].inv()?;
        for j in 0..n {
            m[c][j] = m[c][j].clone() * s.clone();
            inv[c][j] = inv[c][j].clone() * s.clone();
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    m[i][j] = m[i][j].clone() - f.clone() * m[c][j].clone();
                    inv[i][j] = inv[i][j].clone() - f.clone() * inv[c][j].clone();
                }
            }
        }
    }
    Ok(inv)
}
