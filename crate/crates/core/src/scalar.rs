//! The coefficient abstraction shared by forms and polynomials.
//!
//! Finite fields and fixed-precision p-adic rings are chosen at runtime, so
//! their zero and one cannot be conjured from nothing the way
//! `num_traits::Zero::zero()` does. Every scalar therefore carries a
//! context (`Ctx`) from which constants are built; plain number types use
//! `()` and delegate to `num_traits`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring element with a runtime context.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn context(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, v: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// `1/n` in this ring, when `n` is a unit.
    fn inv_int(ctx: &Self::Ctx, n: u64) -> Option<Self>;

    /// `self / other` when the quotient exists in the ring.
    fn checked_div(&self, other: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.context())
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.context());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

macro_rules! impl_scalar_for_num {
    ($($t:ty => |$n:ident| $inv:expr),* $(,)?) => {
        $(
            impl Scalar for $t {
                type Ctx = ();

                fn context(&self) {}
                fn zero(_: &()) -> Self {
                    <$t as Zero>::zero()
                }
                fn one(_: &()) -> Self {
                    <$t as One>::one()
                }
                fn from_int(_: &(), v: i64) -> Self {
                    <$t>::from_integer(v.into())
                }
                fn is_zero(&self) -> bool {
                    Zero::is_zero(self)
                }
                fn inv_int(_: &(), $n: u64) -> Option<Self> {
                    $inv
                }
                fn checked_div(&self, other: &Self) -> Option<Self> {
                    (!Zero::is_zero(other)).then(|| self / other)
                }
            }
        )*
    };
}

impl_scalar_for_num!(
    BigRational => |n| (n != 0).then(|| BigRational::new(BigInt::from(1), BigInt::from(n))),
    Ratio<i64> => |n| (n != 0 && n <= i64::MAX as u64).then(|| Ratio::new(1, n as i64)),
);

impl Scalar for BigInt {
    type Ctx = ();

    fn context(&self) {}
    fn zero(_: &()) -> Self {
        <BigInt as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigInt as One>::one()
    }
    fn from_int(_: &(), v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv_int(_: &(), n: u64) -> Option<Self> {
        (n == 1).then(<BigInt as One>::one)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        use num_integer::Integer;
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}
