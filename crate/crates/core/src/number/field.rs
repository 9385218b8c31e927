use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CyclotomicNumber, Rational};

/// Exact field scalars. Operations between values of different fields
/// (e.g. cyclotomic numbers of different order) panic; the checked methods
/// on [`CyclotomicNumber`] report that case as an error instead.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;

    fn integer_like(&self, v: &BigInt) -> Self;

    fn i64_like(&self, v: i64) -> Self {
        self.integer_like(&BigInt::from(v))
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
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

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn integer_like(&self, v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
}

impl Field for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero(self.field())
    }

    fn one_like(&self) -> Self {
        CyclotomicNumber::one(self.field())
    }

    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        self.checked_inverse().ok()
    }

    fn integer_like(&self, v: &BigInt) -> Self {
        CyclotomicNumber::from_rational(self.field(), Rational::from_integer(v.clone()))
    }
}
