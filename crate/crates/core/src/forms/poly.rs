use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::FormError;
use crate::scalar::Scalar;

/// Exponent vector. Ordered lexicographically, which is the lex monomial
/// order with `x_1 > x_2 > …`.
pub type Monomial = SmallVec<[u8; 16]>;

/// Largest number of variables a polynomial may have.
pub const MAX_VARS: usize = 64;

/// Sparse multivariate polynomial, not necessarily homogeneous. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq)]
pub struct Poly<R: Scalar> {
    ctx: R::Ctx,
    n: usize,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Scalar> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{c:?}*{m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub(crate) fn unit_monomial(n: usize, i: usize) -> Monomial {
    let mut m = Monomial::from_elem(0, n);
    m[i] = 1;
    m
}

impl<R: Scalar> Poly<R> {
    pub fn zero(ctx: &R::Ctx, n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly {
            ctx: ctx.clone(),
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &R::Ctx, n: usize, c: R) -> Self {
        let mut p = Self::zero(ctx, n);
        p.add_term(Monomial::from_elem(0, n), c);
        p
    }

    pub fn one(ctx: &R::Ctx, n: usize) -> Self {
        Self::constant(ctx, n, R::one(ctx))
    }

    /// The variable `x_i` (zero-based).
    pub fn var(ctx: &R::Ctx, n: usize, i: usize) -> Self {
        let mut p = Self::zero(ctx, n);
        p.add_term(unit_monomial(n, i), R::one(ctx));
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear(ctx: &R::Ctx, coeffs: &[R]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(ctx, n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(unit_monomial(n, i), c.clone());
        }
        p
    }

    pub fn from_terms<I, M>(ctx: &R::Ctx, n: usize, terms: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (M, R)>,
        M: AsRef<[u8]>,
    {
        let mut p = Self::zero(ctx, n);
        for (m, c) in terms {
            let m = m.as_ref();
            if m.len() != n {
                return Err(FormError::DimensionMismatch {
                    expected: n,
                    found: m.len(),
                });
            }
            p.add_term(Monomial::from_slice(m), c);
        }
        Ok(p)
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u8]) -> R {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        debug_assert_eq!(m.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
    }

    /// The common degree of all terms, if there is one (`None` for zero).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self
            .terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum::<usize>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn degree_in(&self, i: usize) -> usize {
        self.terms.keys().map(|m| m[i] as usize).max().unwrap_or(0)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m[i] > 0)
    }

    /// The coefficient of `x_i^k`, as a polynomial not involving `x_i`.
    pub fn coeff_in(&self, i: usize, k: usize) -> Self {
        let mut p = Self::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            if m[i] as usize == k {
                let mut m = m.clone();
                m[i] = 0;
                p.add_term(m, c.clone());
            }
        }
        p
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        let mut p = Self::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            if m.iter().map(|&e| e as usize).sum::<usize>() == d {
                p.add_term(m.clone(), c.clone());
            }
        }
        p
    }

    fn check_same(&self, o: &Self) {
        assert_eq!(self.n, o.n, "variable count mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same(o);
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut p = Self::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone() * s.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_same(o);
        let mut p = Self::zero(&self.ctx, self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m: Monomial = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                p.add_term(m, ca.clone() * cb.clone());
            }
        }
        p
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.ctx, self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn check_point(&self, x: &[R]) -> Result<(), FormError> {
        if x.len() != self.n {
            return Err(FormError::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[R]) -> Result<R, FormError> {
        self.check_point(x)?;
        let powers = self.power_table(x);
        let mut acc = R::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t * powers[i][e as usize].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    fn power_table(&self, x: &[R]) -> Vec<Vec<R>> {
        (0..self.n)
            .map(|i| {
                let top = self.degree_in(i);
                let mut v = Vec::with_capacity(top + 1);
                v.push(R::one(&self.ctx));
                for k in 1..=top {
                    let next = v[k - 1].clone() * x[i].clone();
                    v.push(next);
                }
                v
            })
            .collect()
    }

    /// Formal partial derivative in `x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            p.add_term(m2, c.clone() * R::from_int(&self.ctx, m[i] as i64));
        }
        p
    }

    pub fn gradient(&self, x: &[R]) -> Result<Vec<R>, FormError> {
        self.check_point(x)?;
        (0..self.n).map(|i| self.partial(i).evaluate(x)).collect()
    }

    /// Replaces `x_i` by `subs[i]`; all substitutes share one variable set.
    pub fn substitute(&self, subs: &[Poly<R>]) -> Result<Self, FormError> {
        if subs.len() != self.n {
            return Err(FormError::DimensionMismatch {
                expected: self.n,
                found: subs.len(),
            });
        }
        let m = subs.first().map_or(0, |s| s.n);
        let mut powers: Vec<Vec<Poly<R>>> = Vec::with_capacity(self.n);
        for (i, s) in subs.iter().enumerate() {
            let top = self.degree_in(i);
            let mut v = vec![Poly::one(&self.ctx, m)];
            for k in 1..=top {
                let next = v[k - 1].mul(s);
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = Poly::zero(&self.ctx, m);
        for (mono, c) in &self.terms {
            let mut t = Poly::constant(&self.ctx, m, c.clone());
            for (i, &e) in mono.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// `p(A y)` for an `n × m` matrix `A`, a polynomial in `m` variables.
    pub fn substitute_matrix(&self, a: &[Vec<R>]) -> Result<Self, FormError> {
        if a.len() != self.n {
            return Err(FormError::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        let subs: Vec<Poly<R>> = a.iter().map(|row| Poly::linear(&self.ctx, row)).collect();
        self.substitute(&subs)
    }

    /// Renames `x_i` to `y_{map[i]}` in a polynomial ring with `m` variables.
    pub fn embed_vars(&self, m: usize, map: &[usize]) -> Self {
        let mut p = Poly::zero(&self.ctx, m);
        for (mono, c) in &self.terms {
            let mut m2 = Monomial::from_elem(0, m);
            for (i, &e) in mono.iter().enumerate() {
                if e > 0 {
                    m2[map[i]] += e;
                }
            }
            p.add_term(m2, c.clone());
        }
        p
    }

    pub fn map_coeffs<S: Scalar>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Poly<S> {
        let mut p = Poly::zero(ctx, self.n);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        self.check_same(d);
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Poly::zero(&self.ctx, self.n);
        while let Some((rm, rc)) = r.leading() {
            if rm.iter().zip(dm.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let m: Monomial = rm.iter().zip(dm.iter()).map(|(a, b)| a - b).collect();
            let c = rc.checked_div(&dc)?;
            let mut t = Poly::zero(&self.ctx, self.n);
            t.add_term(m, c);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }
}
