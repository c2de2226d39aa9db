use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::{Fq, FqField};

/// Dense univariate polynomial over `F_q`, coefficients low to high, with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Arc<FqField>,
    c: Vec<Fq>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl UniPoly {
    pub fn new(field: &Arc<FqField>, mut c: Vec<Fq>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly {
            field: field.clone(),
            c,
        }
    }

    pub fn from_ints(field: &Arc<FqField>, c: &[i64]) -> Self {
        Self::new(field, c.iter().map(|&v| field.int(v)).collect())
    }

    pub fn zero(field: &Arc<FqField>) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Arc<FqField>) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Fq) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    pub fn x(field: &Arc<FqField>) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `c · x^deg`.
    pub fn monomial(c: Fq, deg: usize) -> Self {
        let field = c.field().clone();
        let mut v = vec![field.zero(); deg];
        v.push(c);
        Self::new(&field, v)
    }

    /// `x - a`.
    pub fn linear_root(a: &Fq) -> Self {
        let field = a.field().clone();
        Self::new(&field, vec![-a, field.one()])
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.c.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Fq {
        self.c.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Fq) -> Fq {
        let mut acc = self.field.zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Fq) -> Self {
        Self::new(&self.field, self.c.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            &self.field,
            (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            &self.field,
            (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.c.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(&self.field, out)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field.zero(); k];
        v.extend(self.c.iter().cloned());
        Self::new(&self.field, v)
    }

    /// Keeps the terms of degree `< k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::new(&self.field, self.c.iter().take(k).cloned().collect())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.c.len() < d.c.len() {
            return (Self::zero(&self.field), self.clone());
        }
        let lc_inv = d.lc().inv().expect("nonzero");
        let mut r = self.c.clone();
        let mut q = vec![self.field.zero(); self.c.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let t = &r[i] * &lc_inv;
            for j in 0..=dd {
                let s = &t * &d.c[j];
                r[i - dd + j] -= s;
            }
            q[i - dd] = t;
        }
        r.truncate(dd);
        (Self::new(&self.field, q), Self::new(&self.field, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    c * &self
                        .field
                        .int((i as u64 % self.field.characteristic()) as i64)
                })
                .collect(),
        )
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m);
            }
        }
        acc
    }

    /// Applies a map to every coefficient (e.g. a field embedding).
    pub fn map_coeffs(&self, field: &Arc<FqField>, f: impl Fn(&Fq) -> Fq) -> Self {
        Self::new(field, self.c.iter().map(f).collect())
    }

    /// For `f(x) = g(x^p)`, returns `g^{1/p}` so that `result^p = f`.
    fn pth_root(&self) -> Self {
        let p = self.field.characteristic() as usize;
        let root_exp = self.field.order() / p as u128;
        let c = self.c.iter().step_by(p).map(|c| c.pow(root_exp)).collect();
        Self::new(&self.field, c)
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g_i, m_i)`
    /// with `self = ∏ g_i^{m_i}` and the `g_i` square-free, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.deg() == 0 {
            return out;
        }
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c).expect("gcd divides");
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).expect("gcd divides");
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_exact(&w).expect("divides");
        }
        if !c.is_one() {
            let p = self.field.characteristic() as usize;
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// `(g_d, d)` where `g_d` is the product of the degree-`d` irreducibles.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let q = self.field.order();
        let x = Self::x(&self.field);
        let mut f = self.clone();
        let mut h = x.rem(&f);
        let mut out = Vec::new();
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.powmod(q, &f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                f = f.div_exact(&g).expect("divides");
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Splits a monic square-free product of degree-`d` irreducibles
    /// (Cantor–Zassenhaus; trace map in characteristic 2).
    pub fn equal_degree<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Self> {
        let n = self.deg();
        if n == d {
            return vec![self.clone()];
        }
        let q = self.field.order();
        loop {
            let r = Self::new(
                &self.field,
                (0..n).map(|_| self.field.random(rng)).collect(),
            );
            if r.deg() == 0 {
                continue;
            }
            let s = if self.field.characteristic() == 2 {
                let mut t = r.rem(self);
                let mut acc = t.clone();
                let steps = self.field.degree() * d;
                for _ in 1..steps {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let mut w = r.rem(self);
                let mut acc = w.clone();
                for _ in 1..d {
                    w = w.powmod(q, self);
                    acc = acc.mulmod(&w, self);
                }
                acc.powmod((q - 1) / 2, self).sub(&Self::one(&self.field))
            };
            let g = self.gcd(&s);
            if g.deg() > 0 && g.deg() < n {
                let h = self.div_exact(&g).expect("divides");
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization: leading coefficient and sorted monic
    /// irreducible factors with multiplicities.
    pub fn factor(&self) -> (Fq, Vec<(Self, usize)>) {
        assert!(!self.is_zero(), "cannot factor zero");
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_fac7);
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
        (self.lc(), out)
    }

    pub fn is_irreducible(&self) -> bool {
        let (_, f) = self.factor();
        f.len() == 1 && f[0].1 == 1
    }

    /// Distinct roots in `F_q`, sorted by index.
    pub fn roots(&self) -> Vec<Fq> {
        if self.is_zero() {
            panic!("every element is a root of the zero polynomial");
        }
        if self.deg() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let x = Self::x(&self.field);
        let xq = x.powmod(self.field.order(), &f);
        let g = f.gcd(&xq.sub(&x));
        if g.deg() == 0 {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0007_2007);
        let mut roots: Vec<Fq> = g
            .equal_degree(1, &mut rng)
            .into_iter()
            .map(|l| -l.coeff(0))
            .collect();
        roots.sort();
        roots
    }
}

/// Total order used to present factor lists canonically.
pub(crate) fn poly_order(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.c.len()
        .cmp(&b.c.len())
        .then_with(|| a.c.iter().rev().cmp(b.c.iter().rev()))
}
