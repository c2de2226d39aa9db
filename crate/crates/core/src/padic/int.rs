use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::{PadicError, PadicRing};
use crate::ff::Fq;
use crate::scalar::Scalar;

/// An element of `O_K / p^N`, stored as `k` coordinates in `[0, p^N)` in
/// the basis `1, t, …, t^{k-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    ring: Arc<PadicRing>,
    c: Vec<BigUint>,
}

impl PadicInt {
    pub(crate) fn from_coords(ring: &Arc<PadicRing>, c: Vec<BigUint>) -> Self {
        debug_assert_eq!(c.len(), ring.degree());
        PadicInt {
            ring: ring.clone(),
            c,
        }
    }

    pub fn ring(&self) -> &Arc<PadicRing> {
        &self.ring
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.c
    }

    pub fn precision(&self) -> usize {
        self.ring.precision()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Largest `s <= N` with `p^s` dividing every coordinate.
    pub fn valuation(&self) -> usize {
        let p = BigUint::from(self.ring.p());
        self.c
            .iter()
            .map(|x| {
                if x.is_zero() {
                    return self.precision();
                }
                let mut v = 0;
                let mut y = x.clone();
                loop {
                    let (q, r) = y.div_rem(&p);
                    if !r.is_zero() {
                        break v;
                    }
                    y = q;
                    v += 1;
                }
            })
            .min()
            .unwrap_or(self.precision())
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == 0
    }

    /// The image in the residue field.
    pub fn reduce(&self) -> Fq {
        let p = BigUint::from(self.ring.p());
        let coords: Vec<i64> = self
            .c
            .iter()
            .map(|x| {
                let r = x % &p;
                r.to_u64_digits().first().copied().unwrap_or(0) as i64
            })
            .collect();
        self.ring
            .residue_field()
            .element(&coords)
            .expect("coordinate count matches")
    }

    /// Reinterprets at another precision: truncation when lowering,
    /// canonical representative when raising.
    pub fn with_ring(&self, ring: &Arc<PadicRing>) -> PadicInt {
        assert_eq!(ring.residue_field(), self.ring.residue_field());
        PadicInt {
            ring: ring.clone(),
            c: self.c.iter().map(|x| x % ring.modulus()).collect(),
        }
    }

    /// `self / p^e`, which lives at precision `N - e`.
    pub fn div_p_pow(&self, e: usize) -> Result<PadicInt, PadicError> {
        if e == 0 {
            return Ok(self.clone());
        }
        if e >= self.precision() {
            return Err(PadicError::PrecisionExhausted {
                needed: e + 1,
                available: self.precision(),
            });
        }
        if self.valuation() < e {
            return Err(PadicError::NotDivisible);
        }
        let ring = self.ring.with_precision(self.precision() - e)?;
        let pe = BigUint::from(self.ring.p()).pow(e as u32);
        Ok(PadicInt {
            c: self.c.iter().map(|x| (x / &pe) % ring.modulus()).collect(),
            ring,
        })
    }

    /// `self · p^e` at the same precision.
    pub fn mul_p_pow(&self, e: usize) -> PadicInt {
        self.clone() * self.ring.p_power(e)
    }

    /// Inverse of a unit, by Newton iteration from the residue inverse.
    pub fn inv(&self) -> Result<PadicInt, PadicError> {
        let r = self.reduce();
        let r_inv = r.inv().map_err(|_| PadicError::NotUnit)?;
        let mut x = self.ring.lift(&r_inv);
        let two = self.ring.int(2);
        let mut correct = 1;
        while correct < self.precision() {
            x = x.clone() * (two.clone() - self.clone() * x);
            correct *= 2;
        }
        debug_assert!((self.clone() * x.clone()).is_one_padic());
        Ok(x)
    }

    fn is_one_padic(&self) -> bool {
        self.c[0] == BigUint::from(1u32) % self.ring.modulus()
            && self.c[1..].iter().all(|x| x.is_zero())
    }

    fn same_ring(&self, o: &PadicInt) {
        assert!(
            Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring,
            "p-adic ring mismatch: {:?} vs {:?}",
            self.ring,
            o.ring
        );
    }
}

fn sub_mod(a: &BigUint, b: &BigUint, m: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

impl Add for PadicInt {
    type Output = PadicInt;
    fn add(self, o: PadicInt) -> PadicInt {
        self.same_ring(&o);
        let m = self.ring.modulus();
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| {
                let s = a + b;
                if &s >= m {
                    s - m
                } else {
                    s
                }
            })
            .collect();
        PadicInt { ring: self.ring, c }
    }
}

impl Sub for PadicInt {
    type Output = PadicInt;
    fn sub(self, o: PadicInt) -> PadicInt {
        self.same_ring(&o);
        let m = self.ring.modulus();
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| sub_mod(a, b, m))
            .collect();
        PadicInt { ring: self.ring, c }
    }
}

impl Neg for PadicInt {
    type Output = PadicInt;
    fn neg(self) -> PadicInt {
        let m = self.ring.modulus();
        let c = self
            .c
            .iter()
            .map(|a| if a.is_zero() { a.clone() } else { m - a })
            .collect();
        PadicInt { ring: self.ring, c }
    }
}

impl Mul for PadicInt {
    type Output = PadicInt;
    fn mul(self, o: PadicInt) -> PadicInt {
        self.same_ring(&o);
        let m = self.ring.modulus();
        let k = self.c.len();
        if k == 1 {
            let c = vec![(&self.c[0] * &o.c[0]) % m];
            return PadicInt { ring: self.ring, c };
        }
        let mut prod = vec![BigUint::zero(); 2 * k - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        let modulus = self.ring.residue_field().modulus();
        for x in prod.iter_mut() {
            *x %= m;
        }
        for i in (k..2 * k - 1).rev() {
            let lead = std::mem::take(&mut prod[i]);
            if lead.is_zero() {
                continue;
            }
            for (j, &mj) in modulus.iter().take(k).enumerate() {
                if mj != 0 {
                    let s = (&lead * mj) % m;
                    prod[i - k + j] = sub_mod(&prod[i - k + j], &s, m);
                }
            }
        }
        prod.truncate(k);
        PadicInt {
            ring: self.ring,
            c: prod,
        }
    }
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Decimal for prime residue fields, comma-separated coordinates otherwise.
impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Scalar for PadicInt {
    type Ctx = Arc<PadicRing>;

    fn context(&self) -> Arc<PadicRing> {
        self.ring.clone()
    }
    fn zero(ctx: &Arc<PadicRing>) -> Self {
        ctx.zero()
    }
    fn one(ctx: &Arc<PadicRing>) -> Self {
        ctx.one()
    }
    fn from_int(ctx: &Arc<PadicRing>, v: i64) -> Self {
        ctx.int(v)
    }
    fn is_zero(&self) -> bool {
        PadicInt::is_zero(self)
    }
    fn inv_int(ctx: &Arc<PadicRing>, n: u64) -> Option<Self> {
        (n % ctx.p() != 0).then(|| ctx.int(n as i64).inv().expect("unit"))
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().ok().map(|i| self.clone() * i)
    }
}
