use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::uni::{poly_order, UniPoly};
use crate::ff::{Fq, FqField};

/// Dense polynomial in `F_q[X, Y]`, stored as a polynomial in `Y` whose
/// coefficients are polynomials in `X`: `rows[j]` multiplies `Y^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: Arc<FqField>,
    rows: Vec<UniPoly>,
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|(i, j, c)| format!("({c})X^{i}Y^{j}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl BiPoly {
    pub fn new(field: &Arc<FqField>, mut rows: Vec<UniPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly {
            field: field.clone(),
            rows,
        }
    }

    pub fn zero(field: &Arc<FqField>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Arc<FqField>) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Fq) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![UniPoly::constant(c)])
    }

    pub fn x(field: &Arc<FqField>) -> Self {
        Self::new(field, vec![UniPoly::x(field)])
    }

    pub fn y(field: &Arc<FqField>) -> Self {
        Self::new(field, vec![UniPoly::zero(field), UniPoly::one(field)])
    }

    /// Builds from `(i, j, c)` triples meaning `c·X^i·Y^j`; repeated
    /// monomials are summed.
    pub fn from_terms(field: &Arc<FqField>, terms: &[(usize, usize, Fq)]) -> Self {
        let mut acc = Self::zero(field);
        for (i, j, c) in terms {
            acc = acc.add(&Self::monomial(c.clone(), *i, *j));
        }
        acc
    }

    pub fn monomial(c: Fq, i: usize, j: usize) -> Self {
        let field = c.field().clone();
        let mut rows = vec![UniPoly::zero(&field); j];
        rows.push(UniPoly::monomial(c, i));
        Self::new(&field, rows)
    }

    /// A polynomial in `X` alone.
    pub fn from_x(p: &UniPoly) -> Self {
        Self::new(p.field(), vec![p.clone()])
    }

    /// A polynomial in `Y` alone.
    pub fn from_y(p: &UniPoly) -> Self {
        Self::new(
            p.field(),
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(c.clone()))
                .collect(),
        )
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.len() <= 1 && self.rows.first().map_or(true, |r| r.deg() == 0)
    }

    pub fn coeff(&self, i: usize, j: usize) -> Fq {
        self.rows
            .get(j)
            .map_or_else(|| self.field.zero(), |r| r.coeff(i))
    }

    /// Nonzero terms `(i, j, c)`, in increasing `(j, i)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Fq)> + '_ {
        self.rows.iter().enumerate().flat_map(|(j, r)| {
            r.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i, j, c.clone()))
        })
    }

    pub fn deg_y(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn deg_x(&self) -> usize {
        self.rows.iter().map(|r| r.deg()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    /// Leading coefficient in `Y`, a polynomial in `X`.
    pub fn lc_y(&self) -> UniPoly {
        self.rows
            .last()
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(&self.field))
    }

    pub fn eval(&self, x: &Fq, y: &Fq) -> Fq {
        let mut acc = self.field.zero();
        for r in self.rows.iter().rev() {
            acc = acc * y + r.eval(x);
        }
        acc
    }

    /// `P(a, Y)` as a polynomial in `Y`.
    pub fn eval_x(&self, a: &Fq) -> UniPoly {
        UniPoly::new(&self.field, self.rows.iter().map(|r| r.eval(a)).collect())
    }

    /// `P(X, b)` as a polynomial in `X`.
    pub fn eval_y(&self, b: &Fq) -> UniPoly {
        let mut acc = UniPoly::zero(&self.field);
        for r in self.rows.iter().rev() {
            acc = acc.scale(b).add(r);
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.rows.len().max(o.rows.len());
        let z = UniPoly::zero(&self.field);
        Self::new(
            &self.field,
            (0..n)
                .map(|j| {
                    self.rows
                        .get(j)
                        .unwrap_or(&z)
                        .add(o.rows.get(j).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.rows.iter().map(|r| r.neg()).collect())
    }

    pub fn scale(&self, c: &Fq) -> Self {
        Self::new(&self.field, self.rows.iter().map(|r| r.scale(c)).collect())
    }

    /// Multiplication by a polynomial in `X`.
    pub fn mul_x_poly(&self, p: &UniPoly) -> Self {
        Self::new(&self.field, self.rows.iter().map(|r| r.mul(p)).collect())
    }

    /// Multiplication by `Y^k`.
    pub fn shift_y(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut rows = vec![UniPoly::zero(&self.field); k];
        rows.extend(self.rows.iter().cloned());
        Self::new(&self.field, rows)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut rows = vec![UniPoly::zero(&self.field); self.rows.len() + o.rows.len() - 1];
        for (a, ra) in self.rows.iter().enumerate() {
            if ra.is_zero() {
                continue;
            }
            for (b, rb) in o.rows.iter().enumerate() {
                rows[a + b] = rows[a + b].add(&ra.mul(rb));
            }
        }
        Self::new(&self.field, rows)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Drops every term with `X`-degree `>= k`.
    pub fn trunc_x(&self, k: usize) -> Self {
        Self::new(
            &self.field,
            self.rows.iter().map(|r| r.truncate(k)).collect(),
        )
    }

    /// The coefficient of `X^i`, as a polynomial in `Y`.
    pub fn x_coeff(&self, i: usize) -> UniPoly {
        UniPoly::new(&self.field, self.rows.iter().map(|r| r.coeff(i)).collect())
    }

    /// Adds `X^i · p(Y)`.
    pub fn add_x_layer(&self, i: usize, p: &UniPoly) -> Self {
        self.add(&Self::from_y(p).mul_x_poly(&UniPoly::monomial(self.field.one(), i)))
    }

    pub fn partial_x(&self) -> Self {
        Self::new(
            &self.field,
            self.rows.iter().map(|r| r.derivative()).collect(),
        )
    }

    pub fn partial_y(&self) -> Self {
        let p = self.field.characteristic();
        Self::new(
            &self.field,
            self.rows
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, r)| r.scale(&self.field.int((j as u64 % p) as i64)))
                .collect(),
        )
    }

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap(&self) -> Self {
        let mut terms: Vec<(usize, usize, Fq)> = self.terms().map(|(i, j, c)| (j, i, c)).collect();
        terms.sort_by_key(|t| (t.1, t.0));
        Self::from_terms(&self.field, &terms)
    }

    /// `P(s(X, Y), Y)`.
    pub fn substitute_x(&self, s: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for (j, r) in self.rows.iter().enumerate() {
            let mut acc = Self::zero(&self.field);
            for c in r.coeffs().iter().rev() {
                acc = acc.mul(s).add(&Self::constant(c.clone()));
            }
            out = out.add(&acc.shift_y(j));
        }
        out
    }

    /// `P(X + c·Y, Y)`.
    pub fn shear(&self, c: &Fq) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        self.substitute_x(&Self::x(&self.field).add(&Self::monomial(c.clone(), 0, 1)))
    }

    /// `P(X + a, Y)`.
    pub fn translate_x(&self, a: &Fq) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        self.substitute_x(&Self::x(&self.field).add(&Self::constant(a.clone())))
    }

    pub fn map_coeffs(&self, field: &Arc<FqField>, f: impl Fn(&Fq) -> Fq) -> Self {
        Self::new(
            field,
            self.rows.iter().map(|r| r.map_coeffs(field, &f)).collect(),
        )
    }

    /// Scales so that the leading coefficient of the top `Y`-row is 1.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc_y().lc();
        self.scale(&lc.inv().expect("nonzero"))
    }

    /// The `gcd` of the `X`-coefficients, monic.
    pub fn content_x(&self) -> UniPoly {
        let mut g = UniPoly::zero(&self.field);
        for r in &self.rows {
            g = g.gcd(r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every row by a polynomial in `X` that divides all of them.
    pub fn div_x_poly(&self, d: &UniPoly) -> Self {
        Self::new(
            &self.field,
            self.rows
                .iter()
                .map(|r| r.div_exact(d).expect("content divides every row"))
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_x_poly(&self.content_x())
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dy = d.deg_y();
        let lc = d.lc_y();
        let mut r = self.clone();
        let mut q = Self::zero(&self.field);
        while !r.is_zero() {
            if r.deg_y() < dy {
                return None;
            }
            let shift = r.deg_y() - dy;
            let t = r.lc_y().div_exact(&lc)?;
            let term = Self::from_x(&t).shift_y(shift);
            r = r.sub(&term.mul(d));
            q = q.add(&term);
        }
        Some(q)
    }

    /// Pseudo-remainder of `self` by `b` with respect to `Y`.
    fn prem(&self, b: &Self) -> Self {
        let lb = b.lc_y();
        let db = b.deg_y();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_y() >= db {
            let shift = r.deg_y() - db;
            let lr = r.lc_y();
            r = r.mul_x_poly(&lb).sub(&b.mul_x_poly(&lr).shift_y(shift));
        }
        r
    }

    /// Normalized greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalize();
        }
        if o.is_zero() {
            return self.normalize();
        }
        let cont = self.content_x().gcd(&o.content_x());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.deg_y() < b.deg_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        let a = if a.deg_y() == 0 {
            Self::one(&self.field)
        } else {
            a
        };
        a.mul_x_poly(&cont).normalize()
    }

    /// For a polynomial in `X^p, Y^p`, the `p`-th root.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.field.characteristic() as usize;
        let e = self.field.order() / p as u128;
        let terms: Vec<(usize, usize, Fq)> = self
            .terms()
            .map(|(i, j, c)| {
                debug_assert!(i % p == 0 && j % p == 0);
                (i / p, j / p, c.pow(e))
            })
            .collect();
        Self::from_terms(&self.field, &terms)
    }

    /// The Frobenius `c -> c^{e}` applied to every coefficient.
    pub(crate) fn pow_coeffs(&self, e: u128) -> Self {
        self.map_coeffs(&self.field.clone(), |c| c.pow(e))
    }
}

/// Deterministic order used to list factors.
pub(crate) fn bipoly_order(a: &BiPoly, b: &BiPoly) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then(a.rows.len().cmp(&b.rows.len()))
        .then_with(|| {
            for (ra, rb) in a.rows.iter().zip(&b.rows).rev() {
                let o = poly_order(ra, rb);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
}
