//! The rational numbers as a `Field` context.

use super::field::{Field, Ring};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field of rational numbers. Elements are `BigRational`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Rationals {
    pub fn from_int(&self, n: BigInt) -> BigRational {
        BigRational::from_integer(n)
    }
    pub fn from_frac(&self, n: BigInt, d: BigInt) -> BigRational {
        BigRational::new(n, d)
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> Option<BigUint> {
        None
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(a: &BigRational) -> i32 {
    if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}
