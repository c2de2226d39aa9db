use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use smallvec::SmallVec;

use super::{FfError, FqField};
use crate::scalar::Scalar;

/// An element of `F_q`, stored as its canonical coordinate vector.
#[derive(Clone)]
pub struct Fq {
    field: Arc<FqField>,
    rep: SmallVec<[u64; 4]>,
}

impl Fq {
    pub(crate) fn from_parts(field: Arc<FqField>, rep: SmallVec<[u64; 4]>) -> Self {
        debug_assert_eq!(rep.len(), field.degree());
        Fq { field, rep }
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.rep[0] == 1 && self.rep[1..].iter().all(|&c| c == 0)
    }

    /// Position of this element in `FqField::from_index` order.
    pub fn index(&self) -> u128 {
        let p = self.field.characteristic() as u128;
        self.rep
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * p + c as u128)
    }

    /// The prime-field value, if this element lies in `F_p`.
    pub fn as_prime(&self) -> Option<u64> {
        self.rep[1..].iter().all(|&c| c == 0).then_some(self.rep[0])
    }

    fn same_field(&self, other: &Fq) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    fn check(&self, other: &Fq) {
        assert!(
            self.same_field(other),
            "field mismatch: {:?} vs {:?}",
            self.field,
            other.field
        );
    }

    pub fn checked_add(&self, other: &Fq) -> Result<Fq, FfError> {
        self.same_field(other)
            .then(|| self.add_ref(other))
            .ok_or(FfError::FieldMismatch)
    }

    pub fn checked_mul(&self, other: &Fq) -> Result<Fq, FfError> {
        self.same_field(other)
            .then(|| self.mul_ref(other))
            .ok_or(FfError::FieldMismatch)
    }

    fn add_ref(&self, other: &Fq) -> Fq {
        let p = self.field.characteristic();
        let rep = self
            .rep
            .iter()
            .zip(other.rep.iter())
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        Fq::from_parts(self.field.clone(), rep)
    }

    fn sub_ref(&self, other: &Fq) -> Fq {
        let p = self.field.characteristic();
        let rep = self
            .rep
            .iter()
            .zip(other.rep.iter())
            .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
            .collect();
        Fq::from_parts(self.field.clone(), rep)
    }

    fn mul_ref(&self, other: &Fq) -> Fq {
        let p = self.field.characteristic();
        let k = self.rep.len();
        if k == 1 {
            let mut rep = SmallVec::new();
            rep.push(self.rep[0] * other.rep[0] % p);
            return Fq::from_parts(self.field.clone(), rep);
        }
        let mut c = vec![0u64; 2 * k - 1];
        for (i, &a) in self.rep.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.rep.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        Fq::from_parts(self.field.clone(), self.field.reduce_poly(c))
    }

    pub fn square(&self) -> Fq {
        self.mul_ref(self)
    }

    pub fn pow(&self, mut e: u128) -> Fq {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self) -> Fq {
        if self.rep.len() == 1 {
            return self.clone();
        }
        self.pow(self.field.characteristic() as u128)
    }

    pub fn inv(&self) -> Result<Fq, FfError> {
        if self.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        if self.rep.len() == 1 {
            let p = self.field.characteristic();
            let inv = super::field::fp_poly::inv(self.rep[0], p);
            return Ok(Fq::from_parts(
                self.field.clone(),
                SmallVec::from_elem(inv, 1),
            ));
        }
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn div(&self, other: &Fq) -> Result<Fq, FfError> {
        self.check(other);
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Quadratic character: `Some(true)` for nonzero squares, `Some(false)`
    /// for non-squares, `None` for zero. Odd characteristic only.
    pub fn legendre(&self) -> Result<Option<bool>, FfError> {
        if self.field.characteristic() == 2 {
            return Err(FfError::EvenCharacteristic);
        }
        if self.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.pow((self.field.order() - 1) / 2).is_one()))
    }

    pub fn is_square(&self) -> Result<bool, FfError> {
        Ok(self.legendre()? != Some(false))
    }

    /// Square roots by Tonelli–Shanks: empty for non-residues, `[0]` for
    /// zero, otherwise `[r, -r]` ordered by index.
    pub fn sqrts(&self) -> Result<Vec<Fq>, FfError> {
        match self.legendre()? {
            None => return Ok(vec![self.clone()]),
            Some(false) => return Ok(Vec::new()),
            Some(true) => {}
        }
        let q = self.field.order();
        let mut t = q - 1;
        let mut s = 0u32;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = (2..q)
            .map(|i| self.field.from_index(i))
            .find(|c| c.legendre() == Ok(Some(false)))
            .expect("odd field has a non-residue");
        let mut m = s;
        let mut c = z.pow(t);
        let mut tt = self.pow(t);
        let mut r = self.pow(t.div_ceil(2));
        while !tt.is_one() {
            let mut i = 0;
            let mut probe = tt.clone();
            while !probe.is_one() {
                probe = probe.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.square();
            }
            m = i;
            c = b.square();
            tt = tt.mul_ref(&c);
            r = r.mul_ref(&b);
        }
        let neg = -r.clone();
        let mut roots = vec![r, neg];
        roots.sort_by_key(|x| x.index());
        Ok(roots)
    }

    /// One square root (the one of smaller index), if any.
    pub fn sqrt(&self) -> Result<Option<Fq>, FfError> {
        Ok(self.sqrts()?.into_iter().next())
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.same_field(other)
    }
}

impl Eq for Fq {}

impl Hash for Fq {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl PartialOrd for Fq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fq {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prime-field elements print as integers, extension elements as their
/// comma-separated coordinates (low to high).
impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.len() == 1 {
            write!(f, "{}", self.rep[0])
        } else {
            let parts: Vec<String> = self.rep.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident, $atr:ident, $am:ident) => {
        impl $tr for Fq {
            type Output = Fq;
            fn $m(self, rhs: Fq) -> Fq {
                self.check(&rhs);
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a Fq> for &'a Fq {
            type Output = Fq;
            fn $m(self, rhs: &'a Fq) -> Fq {
                self.check(rhs);
                self.$imp(rhs)
            }
        }
        impl<'a> $tr<&'a Fq> for Fq {
            type Output = Fq;
            fn $m(self, rhs: &'a Fq) -> Fq {
                self.check(rhs);
                self.$imp(rhs)
            }
        }
        impl $atr for Fq {
            fn $am(&mut self, rhs: Fq) {
                self.check(&rhs);
                *self = self.$imp(&rhs);
            }
        }
        impl<'a> $atr<&'a Fq> for Fq {
            fn $am(&mut self, rhs: &'a Fq) {
                self.check(rhs);
                *self = self.$imp(rhs);
            }
        }
    };
}

forward_binop!(Add, add, add_ref, AddAssign, add_assign);
forward_binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
forward_binop!(Mul, mul, mul_ref, MulAssign, mul_assign);

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        -&self
    }
}

impl Neg for &Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        let p = self.field.characteristic();
        let rep = self
            .rep
            .iter()
            .map(|&a| if a == 0 { 0 } else { p - a })
            .collect();
        Fq::from_parts(self.field.clone(), rep)
    }
}

impl Scalar for Fq {
    type Ctx = Arc<FqField>;

    fn context(&self) -> Arc<FqField> {
        self.field.clone()
    }
    fn zero(ctx: &Arc<FqField>) -> Self {
        ctx.zero()
    }
    fn one(ctx: &Arc<FqField>) -> Self {
        ctx.one()
    }
    fn from_int(ctx: &Arc<FqField>, v: i64) -> Self {
        ctx.int(v)
    }
    fn is_zero(&self) -> bool {
        Fq::is_zero(self)
    }
    fn inv_int(ctx: &Arc<FqField>, n: u64) -> Option<Self> {
        let p = ctx.characteristic();
        (n % p != 0).then(|| ctx.int((n % p) as i64).inv().expect("nonzero"))
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        self.div(other).ok()
    }
    fn is_one(&self) -> bool {
        Fq::is_one(self)
    }
}
