//! The ring Z/n with big modulus. Implements the Field trait so Poly can be
//! reused for Hensel lifting; `inv` succeeds only on units, and polynomial
//! division is valid only against monic (or unit-leading) divisors.

use super::field::{Field, Ring};
use super::mat::mod_inverse;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct Zn {
    pub modulus: BigInt,
}

impl Zn {
    pub fn new(modulus: BigInt) -> Self {
        assert!(modulus > BigInt::from(1));
        Zn { modulus }
    }

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.modulus)
    }

    /// Representative in (-m/2, m/2].
    pub fn symmetric(&self, a: &BigInt) -> BigInt {
        let r = self.reduce(a);
        if &r * 2 > self.modulus {
            r - &self.modulus
        } else {
            r
        }
    }
}

impl Ring for Zn {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::from(1)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a + b))
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a - b))
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(&(-a))
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a * b))
    }

    fn from_i64(&self, n: i64) -> BigInt {
        self.reduce(&BigInt::from(n))
    }

    fn characteristic(&self) -> Option<BigUint> {
        self.modulus.to_biguint()
    }
}

impl Field for Zn {
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        mod_inverse(a, &self.modulus)
    }
}

impl Zn {
    pub fn modulus_u64(&self) -> Option<u64> {
        self.modulus.to_u64()
    }
}
