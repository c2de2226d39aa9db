//! Bringing the system into one of the two shapes
//! `g = x1 x2 + g2(x3, …)` with `f = f(x2, …)` or
//! `f = x1 f2(x3, …) + f3(x2, …)`.

use super::search::is_zero_vec;
use crate::ff::Fq;
use crate::forms::{Form, FqForm};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `f` does not involve `x1`.
    Deg0,
    /// `f = x1 f2 + f3` with `f2 ≠ 0` free of `x1, x2`.
    Deg1,
}

#[derive(Debug, Clone)]
pub struct NormalizedSystem {
    /// Zeros `y` of the normalized system give zeros `tau · y` of the input.
    pub tau: Matrix,
    pub shape: Shape,
    pub f: FqForm,
    pub g: FqForm,
    /// Coefficient of `x1` in `f` (zero in the `Deg0` shape).
    pub f2: FqForm,
    /// The part of `f` free of `x1`.
    pub f3: FqForm,
    /// `g - x1 x2`.
    pub g2: FqForm,
}

#[derive(Debug, Clone)]
pub enum Normalized {
    /// The common zero was already nonsingular.
    Nonsingular(Vec<Fq>),
    System(NormalizedSystem),
}

fn linear_part(p: &FqForm) -> Vec<Fq> {
    let n = p.nvars();
    (0..n)
        .map(|i| {
            let mut m = vec![0u8; n];
            m[i] = 1;
            p.coeff(&m)
        })
        .collect()
}

fn linear_form(c: &[Fq]) -> FqForm {
    let field = c[0].field();
    let n = c.len();
    Form::from_terms(
        field,
        n,
        1,
        (0..n).map(|i| {
            let mut m = vec![0u8; n];
            m[i] = 1;
            (m, c[i].clone())
        }),
    )
    .expect("linear")
}

/// `(x1-coefficient of degree k)` as a form of degree `d - k`.
fn x1_part(f: &FqForm, k: usize) -> FqForm {
    Form::new(f.poly().coeff_in(0, k), f.degree() - k).expect("homogeneous")
}

/// The coefficients of `x_i x_j`, `j > 1`, and of `x_i^2` in a quadratic.
fn row_of(q: &FqForm, i: usize) -> (Fq, Vec<Fq>) {
    let n = q.nvars();
    let mut sq = vec![0u8; n];
    sq[i] = 2;
    let rest = (0..n)
        .map(|j| {
            if j <= i {
                return q.field().zero();
            }
            let mut m = vec![0u8; n];
            m[i] = 1;
            m[j] = 1;
            q.coeff(&m)
        })
        .collect();
    (q.coeff(&sq), rest)
}

/// Normalizes around a common zero `e1` with `∇g(e1) ≠ 0`.
pub fn normalize(f: &FqForm, g: &FqForm, e1: &[Fq]) -> Normalized {
    let n = f.nvars();
    let field = f.field().clone();
    debug_assert!(!is_zero_vec(&g.gradient(e1).unwrap()));

    // e1 becomes the first unit vector
    let t1 = linalg::transpose(&linalg::complete_basis(&vec![e1.to_vec()], n, &field));
    let mut tau = t1.clone();
    let mut f = f.substitute_linear(&t1).expect("square");
    let mut g = g.substitute_linear(&t1).expect("square");

    let g1 = linear_part(&x1_part(&g, 1));
    let f1 = linear_part(&x1_part(&f, 2));
    if linalg::rank(&vec![f1.clone(), g1.clone()]) == 2 {
        return Normalized::Nonsingular(e1.to_vec());
    }
    let j = g1.iter().position(|c| !c.is_zero()).expect("∇g(e1) ≠ 0");
    let lambda = (&f1[j] * &g1[j].inv().expect("nonzero")).clone();
    let x1 = linear_form(&unit(&field, n, 0));
    f = f.sub(&x1.mul(&g).scale(&lambda));

    // g1 becomes x2: new coordinates y = N x on x2..xn with first row g1
    let rows: Matrix = vec![g1[1..].to_vec()];
    let nmat = linalg::complete_basis(&rows, n - 1, &field);
    let ninv = linalg::inverse(&nmat).expect("completed basis");
    let mut t2 = linalg::identity(&field, n);
    for i in 1..n {
        for k in 1..n {
            t2[i][k] = ninv[i - 1][k - 1].clone();
        }
    }
    f = f.substitute_linear(&t2).expect("square");
    g = g.substitute_linear(&t2).expect("square");
    tau = linalg::mat_mul(&tau, &t2);

    // x1 -> x1 - λ' x2 - L(x3, …) absorbs the x2 terms of g2
    let g2 = x1_part(&g, 0);
    let (lam2, l) = row_of(&g2, 1);
    let mut t3 = linalg::identity(&field, n);
    t3[0][1] = -lam2;
    for k in 2..n {
        t3[0][k] = -&l[k];
    }
    f = f.substitute_linear(&t3).expect("square");
    g = g.substitute_linear(&t3).expect("square");
    tau = linalg::mat_mul(&tau, &t3);
    let g2 = x1_part(&g, 0);
    debug_assert!(!g2.poly().depends_on(1));

    let mut f2 = x1_part(&f, 1);
    if !f2.is_zero() {
        // subtract (a x2 + M(x3, …)) g so that f2 loses x2
        let (a, m) = row_of(&f2, 1);
        let mut lc = m;
        lc[1] = a;
        let lf = linear_form(&lc);
        f = f.sub(&lf.mul(&g));
        f2 = x1_part(&f, 1);
    }
    let f3 = x1_part(&f, 0);
    let shape = if f2.is_zero() {
        Shape::Deg0
    } else {
        Shape::Deg1
    };
    Normalized::System(NormalizedSystem {
        tau,
        shape,
        f,
        g,
        f2,
        f3,
        g2,
    })
}

pub(crate) fn unit(field: &std::sync::Arc<crate::ff::FqField>, n: usize, i: usize) -> Vec<Fq> {
    (0..n)
        .map(|j| if i == j { field.one() } else { field.zero() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FqField;

    fn form(field: &std::sync::Arc<FqField>, n: usize, d: usize, terms: &[(&[u8], i64)]) -> FqForm {
        Form::from_terms(
            field,
            n,
            d,
            terms.iter().map(|(m, c)| (m.to_vec(), field.int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn completes_the_quadratic() {
        // g = x1 x2 + x2^2 + x3 x4 with zero e1
        let f7 = FqField::prime(7).unwrap();
        let g = form(
            &f7,
            4,
            2,
            &[(&[1, 1, 0, 0], 1), (&[0, 2, 0, 0], 1), (&[0, 0, 1, 1], 1)],
        );
        let f = form(
            &f7,
            4,
            3,
            &[(&[0, 0, 3, 0], 1), (&[0, 0, 0, 3], 2), (&[0, 3, 0, 0], 1)],
        );
        let e1 = unit(&f7, 4, 0);
        let Normalized::System(ns) = normalize(&f, &g, &e1) else {
            panic!("e1 is singular for f")
        };
        assert_eq!(ns.g2, form(&f7, 4, 2, &[(&[0, 0, 1, 1], 1)]));
        assert_eq!(ns.shape, Shape::Deg0);
        let expect = form(&f7, 4, 2, &[(&[1, 1, 0, 0], 1)]).add(&ns.g2);
        assert_eq!(ns.g, expect);
    }

    #[test]
    fn independent_gradients_return_early() {
        let f7 = FqField::prime(7).unwrap();
        let g = form(&f7, 3, 2, &[(&[1, 1, 0], 1), (&[0, 0, 2], 1)]);
        let f = form(&f7, 3, 3, &[(&[2, 0, 1], 1), (&[0, 3, 0], 1)]);
        let e1 = unit(&f7, 3, 0);
        assert!(matches!(normalize(&f, &g, &e1), Normalized::Nonsingular(_)));
    }

    #[test]
    fn deg1_shape_purges_x2() {
        let f11 = FqField::prime(11).unwrap();
        let g = form(&f11, 4, 2, &[(&[1, 1, 0, 0], 1), (&[0, 0, 1, 1], 1)]);
        let f = form(
            &f11,
            4,
            3,
            &[
                (&[1, 2, 0, 0], 3),
                (&[1, 1, 1, 0], 2),
                (&[1, 0, 2, 0], 1),
                (&[0, 0, 0, 3], 1),
            ],
        );
        let e1 = unit(&f11, 4, 0);
        let Normalized::System(ns) = normalize(&f, &g, &e1) else {
            panic!()
        };
        assert_eq!(ns.shape, Shape::Deg1);
        assert!(!ns.f2.poly().depends_on(1) && !ns.f2.poly().depends_on(0));
        // zeros correspond: f = g = 0 on the same points up to tau
        let x1 = linear_form(&unit(&f11, 4, 0));
        assert_eq!(ns.f, x1.mul(&ns.f2).add(&ns.f3));
    }
}
