//! Dense linear algebra over `F_q`. Matrices are row-major `Vec<Vec<Fq>>`.

use std::sync::Arc;

use crate::ff::{Fq, FqField};

pub type Matrix = Vec<Vec<Fq>>;

pub fn identity(field: &Arc<FqField>, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let field = a[0][0].field().clone();
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut acc = field.zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            acc += x * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[Fq]) -> Vec<Fq> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].field().zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Reduced row echelon form (zero rows dropped) and pivot columns.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = a.clone();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &f * &m[r][j];
                    m[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let field = a[0][0].field().clone();
    let aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let (m, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of `{v : a v = 0}`, `cols` being the number of columns of `a`.
pub fn kernel(a: &Matrix, cols: usize, field: &Arc<FqField>) -> Vec<Vec<Fq>> {
    let (m, piv) = if a.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        rref(a)
    };
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Extends independent `rows` to an invertible square matrix by appending
/// unit vectors, taken in index order.
pub fn complete_basis(rows: &Matrix, n: usize, field: &Arc<FqField>) -> Matrix {
    let mut out = rows.clone();
    for i in 0..n {
        if out.len() == n {
            break;
        }
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        out.push(e);
        if rank(&out) < out.len() {
            out.pop();
        }
    }
    debug_assert_eq!(out.len(), n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let f = FqField::prime(7).unwrap();
        let m: Matrix = vec![
            vec![f.int(1), f.int(2), f.int(3)],
            vec![f.int(0), f.int(1), f.int(4)],
            vec![f.int(5), f.int(6), f.int(0)],
        ];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(&f, 3));
        let sing: Matrix = vec![
            vec![f.int(1), f.int(2), f.int(3)],
            vec![f.int(2), f.int(4), f.int(6)],
        ];
        assert!(inverse(&vec![sing[0].clone(), sing[1].clone(), sing[0].clone()]).is_none());
        let k = kernel(&sing, 3, &f);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&sing, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn basis_completion_is_invertible() {
        let f = FqField::prime(5).unwrap();
        let rows: Matrix = vec![vec![f.int(0), f.int(1), f.int(1), f.int(0)]];
        let full = complete_basis(&rows, 4, &f);
        assert_eq!(full[0], rows[0]);
        assert!(inverse(&full).is_some());
    }
}
