use std::sync::Arc;

use rand::Rng;

use super::poly::Poly;
use super::FormError;
use crate::ff::{Fq, FqField};
use crate::poly::BiPoly;
use crate::scalar::Scalar;

/// Parameters `ξ_0, …, ξ_{3n}` of the affine plane
/// `x_0 = ξ_0 + X`, `x_i = ξ_i + ξ_{n+i} X + ξ_{2n+i} Y` (`1 <= i <= n`)
/// in a space with coordinates `x_0, …, x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceParams<R: Scalar> {
    xi: Vec<R>,
}

impl<R: Scalar> SliceParams<R> {
    /// Parameters for a polynomial in `n + 1` variables.
    pub fn new(xi: Vec<R>, n: usize) -> Result<Self, FormError> {
        if xi.len() != 3 * n + 1 {
            return Err(FormError::SliceLength {
                expected: 3 * n + 1,
                found: xi.len(),
            });
        }
        Ok(SliceParams { xi })
    }

    pub fn xi(&self) -> &[R] {
        &self.xi
    }

    /// The `n` with `3n + 1 = len`.
    pub fn n(&self) -> usize {
        (self.xi.len() - 1) / 3
    }

    /// The affine coordinate functions `x_i(X, Y)` as `(const, X, Y)`.
    pub fn coordinate(&self, i: usize) -> (R, R, R) {
        let n = self.n();
        let z = R::zero(&self.xi[0].context());
        if i == 0 {
            (self.xi[0].clone(), R::one(&self.xi[0].context()), z)
        } else {
            (
                self.xi[i].clone(),
                self.xi[n + i].clone(),
                self.xi[2 * n + i].clone(),
            )
        }
    }

    /// The plane point with parameters `(X, Y)`.
    pub fn point(&self, x: &R, y: &R) -> Vec<R> {
        (0..=self.n())
            .map(|i| {
                let (a, b, c) = self.coordinate(i);
                a + b * x.clone() + c * y.clone()
            })
            .collect()
    }
}

impl SliceParams<Fq> {
    pub fn random<G: Rng + ?Sized>(field: &Arc<FqField>, n: usize, rng: &mut G) -> Self {
        SliceParams {
            xi: (0..3 * n + 1).map(|_| field.random(rng)).collect(),
        }
    }
}

impl<R: Scalar> Poly<R> {
    /// The restriction to the plane of `xi`, as a polynomial in `(X, Y)`.
    pub fn slice(&self, xi: &SliceParams<R>) -> Result<Poly<R>, FormError> {
        if self.nvars() != xi.n() + 1 {
            return Err(FormError::SliceLength {
                expected: 3 * (self.nvars().max(1) - 1) + 1,
                found: xi.xi.len(),
            });
        }
        let subs: Vec<Poly<R>> = (0..self.nvars())
            .map(|i| {
                let (a, b, c) = xi.coordinate(i);
                Poly::from_terms(self.ctx(), 2, [([0u8, 0], a), ([1, 0], b), ([0, 1], c)])
                    .expect("two variables")
            })
            .collect();
        self.substitute(&subs)
    }
}

impl Poly<Fq> {
    /// `slice` converted to the dense bivariate type used for factoring.
    pub fn slice_bipoly(&self, xi: &SliceParams<Fq>) -> Result<BiPoly, FormError> {
        let s = self.slice(xi)?;
        Ok(to_bipoly(&s))
    }
}

/// A polynomial in two variables as a `BiPoly` (first variable is `X`).
pub fn to_bipoly(p: &Poly<Fq>) -> BiPoly {
    assert_eq!(p.nvars(), 2);
    let terms: Vec<(usize, usize, Fq)> = p
        .terms()
        .map(|(m, c)| (m[0] as usize, m[1] as usize, c.clone()))
        .collect();
    BiPoly::from_terms(p.ctx(), &terms)
}
