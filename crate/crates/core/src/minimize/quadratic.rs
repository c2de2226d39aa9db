//! Quadratic forms over `F_q`, `q` odd: Gram matrices, radicals and maximal
//! totally isotropic subspaces.

use crate::ff::Fq;
use crate::forms::FqForm;
use crate::linalg::{self, Matrix};

/// The matrix of the polar bilinear form `B(x, y) = g(x+y) - g(x) - g(y)`.
pub fn gram(g: &FqForm) -> Matrix {
    let n = g.nvars();
    let field = g.field();
    let mut m = vec![vec![field.zero(); n]; n];
    for (mono, c) in g.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| mono[i] > 0).collect();
        match idx.as_slice() {
            [i] => m[*i][*i] = c * &field.int(2),
            [i, j] => {
                m[*i][*j] = c.clone();
                m[*j][*i] = c.clone();
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    m
}

fn bil(gm: &Matrix, x: &[Fq], y: &[Fq]) -> Fq {
    let gy = linalg::mat_vec(gm, y);
    x.iter()
        .zip(&gy)
        .fold(x[0].field().zero(), |acc, (a, b)| acc + a * b)
}

fn qval(gm: &Matrix, x: &[Fq]) -> Fq {
    let half = x[0].field().int(2).inv().expect("odd characteristic");
    bil(gm, x, x) * half
}

fn axpy(a: &Fq, x: &[Fq], y: &[Fq]) -> Vec<Fq> {
    x.iter().zip(y).map(|(xi, yi)| a * xi + yi).collect()
}

/// Rank of the polar form.
pub fn rank(g: &FqForm) -> usize {
    linalg::rank(&gram(g))
}

/// A basis of a maximal subspace on which `g` vanishes identically.
/// Requires odd characteristic.
pub fn maximal_isotropic(g: &FqForm) -> Vec<Vec<Fq>> {
    let field = g.field().clone();
    assert!(
        field.characteristic() % 2 == 1,
        "odd characteristic required"
    );
    let n = g.nvars();
    let gm = gram(g);
    let radical = linalg::kernel(&gm, n, &field);
    // a complement of the radical carries a nondegenerate form
    let mut comp: Vec<Vec<Fq>> = Vec::new();
    let mut span = radical.clone();
    for i in 0..n {
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        span.push(e.clone());
        if linalg::rank(&span) == span.len() {
            comp.push(e);
        } else {
            span.pop();
        }
    }
    let mut iso = radical;
    while comp.len() >= 2 {
        let Some(v) = isotropic_vector(&gm, &comp) else {
            break;
        };
        let w0 = comp
            .iter()
            .find(|c| !bil(&gm, &v, c).is_zero())
            .expect("nondegenerate")
            .clone();
        let b = bil(&gm, &v, &w0);
        let w = w0
            .iter()
            .map(|x| x * &b.inv().expect("nonzero"))
            .collect::<Vec<_>>();
        let gw = qval(&gm, &w);
        let w = axpy(&(-gw), &v, &w);
        let projected: Vec<Vec<Fq>> = comp
            .iter()
            .map(|c| {
                let c1 = axpy(&(-bil(&gm, c, &w)), &v, c);
                axpy(&(-bil(&gm, c, &v)), &w, &c1)
            })
            .collect();
        let (basis, _) = linalg::rref(&projected);
        comp = basis;
        iso.push(v);
    }
    iso
}

/// A nonzero isotropic vector in the span of `basis`, if one exists.
fn isotropic_vector(gm: &Matrix, basis: &[Vec<Fq>]) -> Option<Vec<Fq>> {
    if let Some(v) = basis.iter().find(|b| qval(gm, b).is_zero()) {
        return Some(v.clone());
    }
    let orth = orthogonalize(gm, basis);
    let a: Vec<Fq> = orth.iter().map(|u| qval(gm, u)).collect();
    let field = a[0].field().clone();
    let neg_inv_a1 = -a[1].inv().expect("nonzero");
    if orth.len() == 2 {
        // a0 + a1 t^2 = 0
        let t = (&a[0] * &neg_inv_a1).sqrt().expect("odd")?;
        return Some(axpy(&t, &orth[1], &orth[0]));
    }
    // a0 s^2 + a1 t^2 + a2 = 0 always has a solution
    for s in field.elements() {
        let rhs = (&a[0] * &s.square() + &a[2]) * &neg_inv_a1;
        if let Some(t) = rhs.sqrt().expect("odd") {
            let v = axpy(&s, &orth[0], &orth[2]);
            return Some(axpy(&t, &orth[1], &v));
        }
    }
    unreachable!("ternary forms over finite fields are isotropic")
}

/// Orthogonal basis of the span of a basis carrying a nondegenerate form.
fn orthogonalize(gm: &Matrix, basis: &[Vec<Fq>]) -> Vec<Vec<Fq>> {
    let mut rest: Vec<Vec<Fq>> = basis.to_vec();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let pos = rest.iter().position(|u| !qval(gm, u).is_zero());
        let u = match pos {
            Some(i) => rest.remove(i),
            None => {
                // some pair has B(u, w) != 0, and then g(u + w) = B(u, w)
                let (i, j) = (0..rest.len())
                    .flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !bil(gm, &rest[i], &rest[j]).is_zero())
                    .expect("nondegenerate");
                let one = rest[0][0].field().one();
                let u = axpy(&one, &rest[i], &rest[j]);
                rest.remove(j);
                u
            }
        };
        let guu = bil(gm, &u, &u);
        let inv = guu.inv().expect("anisotropic pivot");
        rest = rest
            .iter()
            .map(|c| axpy(&(-(bil(gm, c, &u) * &inv)), &u, c))
            .collect();
        let (basis, _) = if rest.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            linalg::rref(&rest)
        };
        rest = basis;
        out.push(u);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FqField;
    use crate::forms::Form;

    fn vanishes_on(g: &FqForm, basis: &[Vec<Fq>]) -> bool {
        let n = g.nvars();
        let m: Matrix = (0..n)
            .map(|i| basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        g.restrict(&m).unwrap().is_zero()
    }

    #[test]
    fn hyperbolic_sum_has_half_dimensional_isotropic_space() {
        let f = FqField::prime(7).unwrap();
        let g = Form::from_terms(
            &f,
            4,
            2,
            [([1u8, 1, 0, 0], f.one()), ([0, 0, 1, 1], f.one())],
        )
        .unwrap();
        let iso = maximal_isotropic(&g);
        assert_eq!(iso.len(), 2);
        assert!(vanishes_on(&g, &iso));
    }

    #[test]
    fn anisotropic_plane() {
        // x^2 + y^2 over F_7 has no isotropic vector
        let f = FqField::prime(7).unwrap();
        let g = Form::from_terms(&f, 2, 2, [([2u8, 0], f.one()), ([0, 2], f.one())]).unwrap();
        assert!(maximal_isotropic(&g).is_empty());
    }

    #[test]
    fn radical_is_included() {
        let f = FqField::prime(5).unwrap();
        let g = Form::from_terms(&f, 3, 2, [([2u8, 0, 0], f.one())]).unwrap();
        let iso = maximal_isotropic(&g);
        assert_eq!(iso.len(), 2);
        assert!(vanishes_on(&g, &iso));
    }

    #[test]
    fn sum_of_three_squares_is_isotropic() {
        let f = FqField::prime(11).unwrap();
        let g = Form::from_terms(
            &f,
            3,
            2,
            [
                ([2u8, 0, 0], f.one()),
                ([0, 2, 0], f.one()),
                ([0, 0, 2], f.one()),
            ],
        )
        .unwrap();
        let iso = maximal_isotropic(&g);
        assert_eq!(iso.len(), 1);
        assert!(vanishes_on(&g, &iso));
    }
}
