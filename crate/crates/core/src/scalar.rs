//! Scalar abstractions shared by the evaluation code.
//!
//! [`Ring`] is the minimum needed to evaluate polynomial expressions such as
//! Hall–Littlewood branching sums; it is implemented by the exact rationals,
//! by the floats and by [`RationalPoly1`](crate::poly::RationalPoly1).
//! [`Scalar`] adds division and ordering, which the specialization and the
//! growth sampler need.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn pow_u(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    fn from_int(v: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if v < 0 { -Self::one() } else { Self::one() };
        for _ in 0..v.unsigned_abs() {
            acc = acc + unit.clone();
        }
        acc
    }
}

pub trait Scalar:
    Ring + Num + Signed + PartialOrd + ToPrimitive + FromPrimitive + 'static
{
    /// `true` for types whose arithmetic is exact.
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Self;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Binary exponent `e` such that `self / 2^e` has magnitude near one.
    /// Exact types never rescale and return 0.
    fn exponent(&self) -> i64 {
        0
    }

    /// `self * 2^e`.
    fn mul_pow2(self, e: i64) -> Self;
}

impl Ring for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn mul_pow2(self, e: i64) -> Self {
        let two = BigInt::from(2u8);
        let factor = num_traits::pow(two, e.unsigned_abs() as usize);
        if e >= 0 {
            self * BigRational::from_integer(factor)
        } else {
            self / BigRational::from_integer(factor)
        }
    }
}

impl Ring for BigInt {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Ring for $t {
            fn pow_u(&self, exp: u32) -> Self {
                self.powi(exp as i32)
            }

            fn from_int(v: i64) -> Self {
                v as $t
            }
        }

        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(q: &BigRational) -> Self {
                q.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn exponent(&self) -> i64 {
                if *self == 0.0 || !self.is_finite() {
                    0
                } else {
                    self.abs().log2().floor() as i64
                }
            }

            fn mul_pow2(self, e: i64) -> Self {
                self * (2.0 as $t).powi(e as i32)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
