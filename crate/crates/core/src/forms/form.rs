use std::fmt;
use std::sync::Arc;

use super::poly::{Monomial, Poly};
use super::FormError;
use crate::ff::{Fq, FqField};
use crate::poly::BiPoly;
use crate::scalar::Scalar;

/// Largest degree a form may have.
pub const MAX_DEGREE: usize = 8;

/// A homogeneous polynomial of degree `d` in `n` variables.
#[derive(Clone, PartialEq)]
pub struct Form<R: Scalar> {
    poly: Poly<R>,
    d: usize,
}

impl<R: Scalar> fmt::Debug for Form<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Form[d={}, n={}]({:?})",
            self.d,
            self.poly.nvars(),
            self.poly
        )
    }
}

impl<R: Scalar> Form<R> {
    /// Wraps `poly`, checking that every term has degree `d`.
    pub fn new(poly: Poly<R>, d: usize) -> Result<Self, FormError> {
        if d > MAX_DEGREE {
            return Err(FormError::DegreeTooLarge(d));
        }
        if poly
            .terms()
            .any(|(m, _)| m.iter().map(|&e| e as usize).sum::<usize>() != d)
        {
            return Err(FormError::NotHomogeneous(d));
        }
        Ok(Form { poly, d })
    }

    pub fn zero(ctx: &R::Ctx, n: usize, d: usize) -> Self {
        Form {
            poly: Poly::zero(ctx, n),
            d,
        }
    }

    pub fn from_terms<I, M>(ctx: &R::Ctx, n: usize, d: usize, terms: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (M, R)>,
        M: AsRef<[u8]>,
    {
        Self::new(Poly::from_terms(ctx, n, terms)?, d)
    }

    pub fn poly(&self) -> &Poly<R> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<R> {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn ctx(&self) -> &R::Ctx {
        self.poly.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.poly.terms()
    }

    pub fn coeff(&self, m: &[u8]) -> R {
        self.poly.coeff(m)
    }

    pub fn evaluate(&self, x: &[R]) -> Result<R, FormError> {
        self.poly.evaluate(x)
    }

    pub fn gradient(&self, x: &[R]) -> Result<Vec<R>, FormError> {
        self.poly.gradient(x)
    }

    pub fn partial(&self, i: usize) -> Form<R> {
        Form {
            poly: self.poly.partial(i),
            d: self.d.saturating_sub(1),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.d, o.d, "degree mismatch");
        Form {
            poly: self.poly.add(&o.poly),
            d: self.d,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.d, o.d, "degree mismatch");
        Form {
            poly: self.poly.sub(&o.poly),
            d: self.d,
        }
    }

    pub fn neg(&self) -> Self {
        Form {
            poly: self.poly.neg(),
            d: self.d,
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Form {
            poly: self.poly.scale(s),
            d: self.d,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Form {
            poly: self.poly.mul(&o.poly),
            d: self.d + o.d,
        }
    }

    /// `F(τx)` for a square `n × n` matrix `τ`.
    pub fn substitute_linear(&self, tau: &[Vec<R>]) -> Result<Self, FormError> {
        let n = self.nvars();
        if tau.len() != n || tau.iter().any(|r| r.len() != n) {
            return Err(FormError::DimensionMismatch {
                expected: n,
                found: tau.len(),
            });
        }
        self.restrict(tau)
    }

    /// `F(Ay)` for an `n × m` matrix `A`: the restriction of `F` to the
    /// column space of `A`, in coordinates `y`.
    pub fn restrict(&self, a: &[Vec<R>]) -> Result<Self, FormError> {
        let poly = self.poly.substitute_matrix(a)?;
        Ok(Form { poly, d: self.d })
    }

    /// Exact quotient by another form.
    pub fn divide_exact(&self, o: &Self) -> Option<Self> {
        if o.d > self.d {
            return None;
        }
        if self.is_zero() {
            return Some(Form::zero(self.ctx(), self.nvars(), self.d - o.d));
        }
        let poly = self.poly.divide_exact(&o.poly)?;
        Some(Form {
            poly,
            d: self.d - o.d,
        })
    }

    pub fn embed_vars(&self, m: usize, map: &[usize]) -> Self {
        Form {
            poly: self.poly.embed_vars(m, map),
            d: self.d,
        }
    }

    pub fn map_coeffs<S: Scalar>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Form<S> {
        Form {
            poly: self.poly.map_coeffs(ctx, f),
            d: self.d,
        }
    }
}

pub type FqForm = Form<Fq>;

impl Form<Fq> {
    pub fn field(&self) -> &Arc<FqField> {
        self.ctx()
    }

    /// The restriction to the plane through `a` spanned by `b, c` as the
    /// ternary form `F(Xa + Yb + Zc)`.
    pub fn ternary(&self, a: &[Fq], b: &[Fq], c: &[Fq]) -> Result<Self, FormError> {
        let n = self.nvars();
        if a.len() != n || b.len() != n || c.len() != n {
            return Err(FormError::DimensionMismatch {
                expected: n,
                found: a.len(),
            });
        }
        let mat: Vec<Vec<Fq>> = (0..n)
            .map(|i| vec![a[i].clone(), b[i].clone(), c[i].clone()])
            .collect();
        self.restrict(&mat)
    }

    /// Dehomogenises a ternary form at `Z = 1` into a polynomial in `X, Y`.
    pub fn dehomogenize_ternary(&self) -> BiPoly {
        assert_eq!(self.nvars(), 3, "ternary form expected");
        let terms: Vec<(usize, usize, Fq)> = self
            .terms()
            .map(|(m, c)| (m[0] as usize, m[1] as usize, c.clone()))
            .collect();
        BiPoly::from_terms(self.field(), &terms)
    }
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<u8>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u8;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// `Z^d · P(X/Z, Y/Z)` for a polynomial in two variables of degree `<= d`.
pub fn homogenize(p: &BiPoly, d: usize) -> Form<Fq> {
    let field = p.field();
    let terms: Vec<([u8; 3], Fq)> = p
        .terms()
        .map(|(i, j, c)| ([i as u8, j as u8, (d - i - j) as u8], c))
        .collect();
    Form::from_terms(field, 3, d, terms).expect("total degree bounded by d")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Arc<FqField> {
        FqField::prime(7).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        let f = f7();
        let r = Form::from_terms(&f, 2, 2, [([2u8, 0], f.int(1)), ([1, 0], f.int(1))]);
        assert!(matches!(r, Err(FormError::NotHomogeneous(2))));
    }

    #[test]
    fn permutation_swaps_variables() {
        let f = f7();
        let g = Form::from_terms(&f, 3, 3, [([2u8, 0, 1], f.int(1))]).unwrap();
        let (o, zz) = (f.one(), f.zero());
        let tau = vec![
            vec![zz.clone(), o.clone(), zz.clone()],
            vec![o.clone(), zz.clone(), zz.clone()],
            vec![zz.clone(), zz.clone(), o.clone()],
        ];
        let h = g.substitute_linear(&tau).unwrap();
        assert_eq!(
            h,
            Form::from_terms(&f, 3, 3, [([0u8, 2, 1], f.int(1))]).unwrap()
        );
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = f7();
        let p = BiPoly::from_terms(&f, &[(2, 0, f.int(1)), (0, 1, f.int(3)), (0, 0, f.int(5))]);
        let h = homogenize(&p, 3);
        assert_eq!(h.degree(), 3);
        assert_eq!(h.dehomogenize_ternary(), p);
    }
}
