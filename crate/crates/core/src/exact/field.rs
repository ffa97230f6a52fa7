//! Ring and field abstractions.
//!
//! All arithmetic in this crate is exact. Algorithms are written against
//! these traits and instantiated with prime fields, finite extensions, the
//! rationals, number fields, or rational function fields as needed.

use num_bigint::BigUint;
use std::fmt::Debug;

/// A commutative ring, presented as a context object.
///
/// Elements do not know their ring; all operations go through the context.
/// This makes runtime-chosen structures (a prime field with runtime `p`, a
/// number field with a runtime modulus) cheap and uniform.
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Characteristic of the ring, `None` meaning characteristic zero.
    fn characteristic(&self) -> Option<BigUint>;
}

/// A field: every nonzero element has an inverse.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow_u64(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// A finite field: exposes its order and a canonical enumeration of
/// elements, which the factorization code uses for deterministic sampling.
pub trait FiniteField: Field {
    /// Number of elements.
    fn order(&self) -> BigUint;
    /// The `i`-th element in a fixed enumeration, `i < order`.
    /// Index 0 must be zero.
    fn elem_from_index(&self, i: &BigUint) -> Self::Elem;
    /// Inverse of `elem_from_index` (used for hashing/serialization).
    fn index_of(&self, a: &Self::Elem) -> BigUint;
}
